#include <doctest.h>

#include <memory>

#include "peiffer/parse.hpp"
#include "peiffer/random.hpp"
#include "peiffer/sequences.hpp"
#include "peiffer/wu.hpp"

using namespace peiffer;

namespace {

std::shared_ptr<const ColoredPresentation> sphere2() {
  return std::make_shared<const ColoredPresentation>(wu_presentation(2).presentation);
}

Word W(const std::shared_ptr<const ColoredPresentation>& p, const std::string& text) {
  return parse_word(text, p->alphabet());
}

IdentitySequence generator_sequence(std::shared_ptr<const ColoredPresentation> p) {
  return IdentitySequence(std::move(p), {ConjugatedRelator{{0, 0}, +1, Word()},
                                         ConjugatedRelator{{1, 0}, +1, Word()},
                                         ConjugatedRelator{{2, 0}, +1, Word()}});
}

}  // namespace

TEST_CASE("realize") {
  auto p = sphere2();
  CHECK(realize(*p, {{0, 0}, +1, Word()}) == W(p, "x1"));
  CHECK(realize(*p, {{2, 0}, +1, W(p, "x1")}) == W(p, "x1^-1 x2^-1"));
  CHECK(realize(*p, {{1, 0}, -1, W(p, "x1")}) == W(p, "x1^-1 x2^-1 x1"));
}

TEST_CASE("validate") {
  auto p = sphere2();
  CHECK(validate(generator_sequence(p)));
  CHECK_FALSE(validate(IdentitySequence(p, {ConjugatedRelator{{0, 0}, +1, Word()}})));
  IdentitySequence swapped(p, {ConjugatedRelator{{1, 0}, +1, Word()},
                               ConjugatedRelator{{0, 0}, +1, Word()},
                               ConjugatedRelator{{2, 0}, +1, W(p, "x1")}});
  CHECK(validate(swapped));
}

TEST_CASE("peiffer moves") {
  auto p = sphere2();
  IdentitySequence seq = generator_sequence(p);

  PeifferMove ex;
  ex.kind = PeifferMove::Kind::exchange;
  ex.pos = 0;
  IdentitySequence after = peiffer_apply(seq, ex);
  CHECK(after.items()[0] == (ConjugatedRelator{{1, 0}, +1, Word()}));
  CHECK(after.items()[1] == (ConjugatedRelator{{0, 0}, +1, W(p, "x2")}));
  CHECK(validate(after));

  PeifferMove ins;
  ins.kind = PeifferMove::Kind::insert_pair;
  ins.pos = 0;
  ins.insert_first = ConjugatedRelator{{0, 0}, +1, Word()};
  ins.insert_second = ConjugatedRelator{{0, 0}, -1, Word()};
  IdentitySequence bigger = peiffer_apply(seq, ins);
  CHECK(bigger.size() == 5);
  CHECK(validate(bigger));

  PeifferMove del;
  del.kind = PeifferMove::Kind::delete_pair;
  del.pos = 0;
  IdentitySequence back = peiffer_apply(bigger, del);
  CHECK(back.items() == seq.items());

  PeifferMove bad = del;
  bad.pos = 1;
  CHECK_THROWS_AS(peiffer_apply(seq, bad), Error);
}

TEST_CASE("moves iv and v are mutually inverse") {
  auto p = sphere2();
  Rng rng(case_seed(11, 0));
  for (int i = 0; i < 100; ++i) {
    IdentitySequence seq = random_identity_sequence(rng, p, 2, 3);
    if (seq.size() < 2) continue;
    PeifferMove ex;
    ex.kind = PeifferMove::Kind::exchange;
    ex.pos = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(seq.size()) - 2));
    PeifferMove co = ex;
    co.kind = PeifferMove::Kind::coexchange;
    CHECK(peiffer_apply(peiffer_apply(seq, ex), co).items() == seq.items());
    CHECK(peiffer_apply(peiffer_apply(seq, co), ex).items() == seq.items());
  }
}

TEST_CASE("every random move preserves validity") {
  auto p = sphere2();
  Rng rng(case_seed(13, 0));
  for (int i = 0; i < 100; ++i) {
    IdentitySequence seq = random_identity_sequence(rng, p, 2, 2);
    for (int m = 0; m < 6; ++m) {
      seq = peiffer_apply(seq, random_move(rng, seq));
      CHECK(validate(seq));
    }
  }
}

TEST_CASE("sequence module operations") {
  auto p = sphere2();
  IdentitySequence c = generator_sequence(p);

  IdentitySequence sum = juxtapose(c, c);
  CHECK(sum.size() == 6);
  CHECK(validate(sum));
  CHECK(juxtapose(IdentitySequence(p, {}), c).items() == c.items());
  CHECK(validate(juxtapose(c, inverse_sequence(c))));

  IdentitySequence inv = inverse_sequence(c);
  CHECK(inv.items()[0] == (ConjugatedRelator{{2, 0}, -1, Word()}));
  CHECK(inv.items()[2] == (ConjugatedRelator{{0, 0}, -1, Word()}));
  CHECK(inverse_sequence(inv).items() == c.items());
  CHECK(realized_product(inv).empty());

  IdentitySequence conj = conjugate_sequence(c, W(p, "x1"));
  for (const auto& it : conj.items()) CHECK(it.conjugator == W(p, "x1"));
  CHECK(validate(conj));
  CHECK(conjugate_sequence(c, Word()).items() == c.items());
  CHECK(conjugate_sequence(conjugate_sequence(c, W(p, "x1")), W(p, "x1^-1")).items() ==
        c.items());
}

TEST_CASE("block decomposition") {
  auto p = sphere2();
  BlockDecomposition bd = block_decompose(generator_sequence(p));
  CHECK(bd.r == W(p, "x1"));
  CHECK(bd.s == W(p, "x2"));
  CHECK(bd.t == W(p, "x2^-1 x1^-1"));

  IdentitySequence swapped(p, {ConjugatedRelator{{1, 0}, +1, Word()},
                               ConjugatedRelator{{0, 0}, +1, Word()},
                               ConjugatedRelator{{2, 0}, +1, W(p, "x1")}});
  BlockDecomposition bd2 = block_decompose(swapped);
  CHECK(bd2.r == W(p, "x1"));
  CHECK(bd2.s == W(p, "x1^-1 x2 x1"));
  CHECK(bd2.t == W(p, "x1^-1 x2^-1"));
  CHECK(validate(IdentitySequence(p, bd2.reordered)));

  IdentitySequence onecls(p, {ConjugatedRelator{{1, 0}, +1, Word()},
                              ConjugatedRelator{{1, 0}, -1, Word()}});
  BlockDecomposition bd3 = block_decompose(onecls);
  CHECK(bd3.r.empty());
  CHECK(bd3.s.empty());
  CHECK(bd3.t.empty());
}

TEST_CASE("block products always multiply to the identity") {
  auto p = sphere2();
  Rng rng(case_seed(17, 0));
  for (int i = 0; i < 200; ++i) {
    IdentitySequence seq = random_identity_sequence(rng, p, 2, 4);
    BlockDecomposition bd = block_decompose(seq);
    CHECK(multiply(bd.r, multiply(bd.s, bd.t)).empty());
    CHECK(validate(IdentitySequence(p, bd.reordered)));
  }
}

TEST_CASE("same-class adjacent exchange leaves block products unchanged") {
  auto p = sphere2();
  Rng rng(case_seed(19, 0));
  int checked = 0;
  for (int i = 0; i < 400 && checked < 100; ++i) {
    IdentitySequence seq = random_identity_sequence(rng, p, 2, 4);
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
      if (seq.items()[j].relator.cls != seq.items()[j + 1].relator.cls) continue;
      PeifferMove ex;
      ex.kind = PeifferMove::Kind::exchange;
      ex.pos = j;
      BlockDecomposition before = block_decompose(seq);
      BlockDecomposition after = block_decompose(peiffer_apply(seq, ex));
      CHECK(before.r == after.r);
      CHECK(before.s == after.s);
      ++checked;
      break;
    }
  }
  CHECK(checked == 100);
}
