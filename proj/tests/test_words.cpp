#include <doctest.h>

#include "peiffer/parse.hpp"
#include "peiffer/random.hpp"
#include "peiffer/words.hpp"

using namespace peiffer;

namespace {

const Alphabet kAb({"x1", "x2"});

Word W(const std::string& text) { return parse_word(text, kAb); }

}  // namespace

TEST_CASE("parsing and free reduction") {
  CHECK(W("x1 x1^-1").empty());
  CHECK(W("[x1,x2]") == W("x1^-1 x2^-1 x1 x2"));
  CHECK(W("[[x1,x2],x1]") == W("x2^-1 x1^-1 x2 x1^-1 x2^-1 x1 x2 x1"));
  CHECK(W("[[x1,x2],x1]").size() == 8);
  CHECK(W("e").empty());
  CHECK(W("x1^3") == W("x1 x1 x1"));
  CHECK(W("x1^-2") == invert(W("x1 x1")));
  CHECK(W("x1^x2") == W("x2^-1 x1 x2"));
  CHECK(W("(x1 x2)^-1") == W("x2^-1 x1^-1"));
  CHECK(W("[x1,x2]^x1 (x2 x1)^-1") ==
        multiply(conjugate(W("[x1,x2]"), W("x1")), invert(W("x2 x1"))));
  CHECK_THROWS_AS(parse_word("x3", kAb), ParseError);
  CHECK_THROWS_AS(parse_word("[x1]", kAb), ParseError);
  CHECK_THROWS_AS(parse_word("(x1", kAb), ParseError);
}

TEST_CASE("multiply") {
  CHECK(multiply(W("x1"), W("x1^-1")).empty());
  CHECK(multiply(W("x1 x2"), W("x2^-1 x1")) == W("x1 x1"));
  CHECK(multiply(Word(), W("x1 x2 x1")) == W("x1 x2 x1"));
}

TEST_CASE("invert") {
  CHECK(invert(W("x1 x2")) == W("x2^-1 x1^-1"));
  CHECK(invert(Word()).empty());
  CHECK(invert(W("[x1,x2]")) == W("[x2,x1]"));
  CHECK(invert(W("[x2,x1]")) == W("x1^-1 x2^-1 x1 x2"));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(W("x1"), Word()) == W("x1"));
  CHECK(conjugate(W("x1"), W("x2")) == W("x2^-1 x1 x2"));
  CHECK(conjugate(W("x1 x2"), W("x1")) == W("x2 x1"));
}

TEST_CASE("left normed commutators") {
  std::vector<Word> pair = {W("x1"), W("x2")};
  CHECK(left_normed_commutator(pair) == W("x1^-1 x2^-1 x1 x2"));
  std::vector<Word> triple = {W("x1"), W("x2"), W("x1")};
  CHECK(left_normed_commutator(triple) == W("[[x1,x2],x1]"));
  CHECK(left_normed_commutator(triple).size() == 8);
  std::vector<Word> equal = {W("x1"), W("x1")};
  CHECK(left_normed_commutator(equal).empty());
  std::vector<Word> one = {W("x1")};
  CHECK_THROWS_AS(left_normed_commutator(one), Error);
}

TEST_CASE("power") {
  CHECK(power(W("x1 x2"), 0).empty());
  CHECK(power(W("x1"), 4) == W("x1 x1 x1 x1"));
  CHECK(power(W("x1 x2"), -2) == invert(multiply(W("x1 x2"), W("x1 x2"))));
}

TEST_CASE("randomized group laws") {
  Rng rng(case_seed(7, 0));
  for (int i = 0; i < 500; ++i) {
    Word u = random_word(rng, 2, 8);
    Word v = random_word(rng, 2, 8);
    Word w = random_word(rng, 2, 8);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, invert(u)).empty());
    CHECK(multiply(u, Word()) == u);
    CHECK(invert(multiply(u, v)) == multiply(invert(v), invert(u)));
    CHECK(conjugate(conjugate(u, v), w) == conjugate(u, multiply(v, w)));
    CHECK(commutator(u, v) ==
          multiply(multiply(invert(u), invert(v)), multiply(u, v)));
    // reducing a reduced word changes nothing
    CHECK(Word(u.letters()) == u);
  }
}
