#include <doctest.h>

#include "peiffer/magnus.hpp"
#include "peiffer/parse.hpp"
#include "peiffer/random.hpp"

using namespace peiffer;

namespace {

const Alphabet kAb({"x1", "x2"});

Word W(const std::string& text) { return parse_word(text, kAb); }

}  // namespace

TEST_CASE("single letter expansions") {
  TruncatedSeries s = magnus_expand(W("x1"), 2);
  CHECK(s.coeff({}) == 1);
  CHECK(s.coeff({0}) == 1);
  CHECK(s.terms().size() == 2);

  TruncatedSeries inv = magnus_expand(W("x1^-1"), 2);
  CHECK(inv.coeff({}) == 1);
  CHECK(inv.coeff({0}) == -1);
  CHECK(inv.coeff({0, 0}) == 1);
  CHECK(inv.terms().size() == 3);
}

TEST_CASE("commutator expansion") {
  TruncatedSeries s = magnus_expand(W("[x1,x2]"), 2);
  CHECK(s.coeff({}) == 1);
  CHECK(s.coeff({0}) == 0);
  CHECK(s.coeff({1}) == 0);
  CHECK(s.coeff({0, 1}) == 1);
  CHECK(s.coeff({1, 0}) == -1);
  CHECK(s.terms().size() == 3);
}

TEST_CASE("mod p reduction") {
  TruncatedSeries s = magnus_expand(W("[x1,x2]"), 2, 2);
  CHECK(s.coeff({0, 1}) == 1);
  CHECK(s.coeff({1, 0}) == 1);
  CHECK(magnus_expand(W("x1 x1"), 1, 2).terms().size() == 1);
}

TEST_CASE("lcs degree") {
  CHECK(lcs_degree(W("x1"), 3) == 1);
  CHECK(lcs_degree(W("[x1,x2]"), 3) == 2);
  CHECK(lcs_degree(W("[x1,x2,x1]"), 5) == 3);
  CHECK_FALSE(lcs_degree(Word(), 5).has_value());
  CHECK_FALSE(lcs_degree(multiply(W("[x1,x2]"), W("[x2,x1]")), 6).has_value());
}

TEST_CASE("expansion is a homomorphism") {
  Rng rng(case_seed(29, 0));
  for (int i = 0; i < 100; ++i) {
    Word u = random_word(rng, 2, 6);
    Word v = random_word(rng, 2, 6);
    CHECK(magnus_expand(multiply(u, v), 4) ==
          multiply(magnus_expand(u, 4), magnus_expand(v, 4)));
    CHECK(multiply(magnus_expand(u, 4), magnus_expand(invert(u), 4)) ==
          TruncatedSeries::one(4, 0));
  }
}

TEST_CASE("commutator filtration") {
  Rng rng(case_seed(31, 0));
  const int d = 6;
  for (int i = 0; i < 100; ++i) {
    Word u = random_word(rng, 2, 5);
    Word v = random_word(rng, 2, 5);
    auto a = lcs_degree(u, d);
    auto b = lcs_degree(v, d);
    if (!a || !b) continue;
    auto c = lcs_degree(commutator(u, v), d);
    CHECK((!c || *c >= std::min(*a + *b, d + 1)));
  }
}
