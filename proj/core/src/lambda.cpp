#include "peiffer/lambda.hpp"

namespace peiffer {

LambdaValue lambda3(const IdentitySequence& c) {
  if (c.presentation().num_classes() != 3)
    throw Error("lambda3 needs a 3-class presentation");
  BlockDecomposition bd = block_decompose(c);

  LambdaValue out;
  out.representative = commutator(bd.r, bd.s);
  out.denominator = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const ConjugatedRelator& it : bd.reordered) {
    if (it.relator.cls == 0) out.r_certificate.push_back(it);
    if (it.relator.cls == 1) out.s_certificate.push_back(it);
  }
  return out;
}

LambdaValue lambda2(const IdentitySequence& c) {
  if (c.presentation().num_classes() != 2)
    throw Error("lambda2 needs a 2-class presentation");
  BlockDecomposition bd = block_decompose(c);

  LambdaValue out;
  out.representative = bd.r;
  out.denominator = {{0, 1, -1}};
  for (const ConjugatedRelator& it : bd.reordered) {
    if (it.relator.cls == 0) out.r_certificate.push_back(it);
    if (it.relator.cls == 1) out.s_certificate.push_back(it);
  }
  return out;
}

Word cross_effect3(const IdentitySequence& a, const IdentitySequence& b) {
  if (!(a.presentation() == b.presentation()))
    throw Error("cross_effect3: presentation mismatch");
  Word sum = lambda3(juxtapose(a, b)).representative;
  Word la = lambda3(a).representative;
  Word lb = lambda3(b).representative;
  return multiply(sum, multiply(invert(lb), invert(la)));
}

}  // namespace peiffer
