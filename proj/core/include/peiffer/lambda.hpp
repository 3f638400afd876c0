#pragma once

#include <vector>

#include "peiffer/sequences.hpp"

namespace peiffer {

/// One symbolic factor [R_a, R_b meet R_c] of the denominator subgroup.
/// Class indices are 0-based; meet_b == -1 means a plain [R_a, R_b] factor.
struct DenominatorFactor {
  int cls_a = 0;
  int meet_a = 0;
  int meet_b = -1;
};

/// A coset representative produced by the lambda maps, together with the
/// block items witnessing membership of the block products in their classes.
struct LambdaValue {
  Word representative;
  std::vector<DenominatorFactor> denominator;
  std::vector<ConjugatedRelator> r_certificate;
  std::vector<ConjugatedRelator> s_certificate;
};

/// The 3-class map: c |-> [r_c, s_c] modulo
/// [R1,R2^R3][R2,R3^R1][R3,R1^R2].
LambdaValue lambda3(const IdentitySequence& c);

/// The 2-class map: c |-> r_c modulo [R1,R2].
LambdaValue lambda2(const IdentitySequence& c);

/// Representative of Lambda(a+b) - Lambda(b) - Lambda(a):
/// lambda3(juxtapose(a,b)) * lambda3(b)^-1 * lambda3(a)^-1, reduced.
Word cross_effect3(const IdentitySequence& a, const IdentitySequence& b);

}  // namespace peiffer
