#include <doctest.h>

#include "peiffer/magnus.hpp"
#include "peiffer/parse.hpp"
#include "peiffer/wu.hpp"

using namespace peiffer;

TEST_CASE("sphere presentations") {
  WuInstance w1 = wu_presentation(1);
  CHECK(w1.presentation.num_classes() == 2);
  CHECK(w1.presentation.alphabet().size() == 1);
  CHECK(w1.presentation.alphabet().at(0).name == "x");
  CHECK(w1.presentation.relator({1, 0}) == invert(w1.presentation.relator({0, 0})));

  WuInstance w2 = wu_presentation(2);
  const Alphabet& ab2 = w2.presentation.alphabet();
  CHECK(w2.presentation.num_classes() == 3);
  CHECK(w2.presentation.relator({0, 0}) == parse_word("x1", ab2));
  CHECK(w2.presentation.relator({1, 0}) == parse_word("x2", ab2));
  CHECK(w2.presentation.relator({2, 0}) == parse_word("x2^-1 x1^-1", ab2));

  WuInstance w3 = wu_presentation(3);
  const Alphabet& ab3 = w3.presentation.alphabet();
  CHECK(w3.presentation.num_classes() == 4);
  CHECK(ab3.at(0).name == "y0");
  CHECK(w3.presentation.relator({3, 0}) == parse_word("(y0 y1 y2)^-1", ab3));

  CHECK_THROWS_AS(wu_presentation(0), Error);
}

TEST_CASE("ordered product of class relators is trivial") {
  for (int n = 1; n <= 4; ++n) {
    WuInstance w = wu_presentation(n);
    Word prod;
    for (int c = 0; c < w.presentation.num_classes(); ++c)
      prod = multiply(prod, w.presentation.relator({c, 0}));
    CHECK(prod.empty());
  }
}

TEST_CASE("bracket generators") {
  // over a single generator every qualifying bracket collapses
  CHECK(wu_bracket_generators(1, 2).empty());

  WuInstance w2 = wu_presentation(2);
  const Alphabet& ab = w2.presentation.alphabet();
  std::vector<Word> len3 = wu_bracket_generators(2, 3);
  CHECK_FALSE(len3.empty());
  // [(y_-1), y0, y1] with y_-1 = (x1 x2)^-1, expanded by hand
  Word target = left_normed_commutator(std::vector<Word>{
      parse_word("(x1 x2)^-1", ab), parse_word("x1", ab), parse_word("x2", ab)});
  CHECK(std::find(len3.begin(), len3.end(), target) != len3.end());

  // no duplicates, no empties
  for (std::size_t i = 0; i < len3.size(); ++i) {
    CHECK_FALSE(len3[i].empty());
    for (std::size_t j = i + 1; j < len3.size(); ++j) CHECK_FALSE(len3[i] == len3[j]);
  }

  // deterministic and downward closed: the length-4 run begins with the
  // length-3 run
  std::vector<Word> len4 = wu_bracket_generators(2, 4);
  REQUIRE(len4.size() >= len3.size());
  for (std::size_t i = 0; i < len3.size(); ++i) CHECK(len4[i] == len3[i]);

  // every emitted word is a commutator, so its series starts in degree >= 2
  for (const Word& w : len3) {
    auto deg = lcs_degree(w, 4);
    CHECK((!deg || *deg >= 2));
  }

  CHECK_THROWS_AS(wu_bracket_generators(2, 2), Error);
}

TEST_CASE("sphere generator words") {
  Word g3 = sphere_generator_word(3);
  Alphabet ab2({"x1", "x2"});
  CHECK(g3 == parse_word("x1^-1 x2^-1 x1 x2", ab2));

  Word g4 = sphere_generator_word(4);
  Alphabet ab3({"y0", "y1", "y2"});
  CHECK(g4 == parse_word("[[y0,y1],[y0,y1 y2]]", ab3));

  Word g5 = sphere_generator_word(5);
  Alphabet ab4({"y0", "y1", "y2", "y3"});
  CHECK(g5 ==
        parse_word("[[[y0,y1],[y0,y1 y2]],[[y0,y1],[y0,y1 y2 y3]]]", ab4));

  CHECK_THROWS_AS(sphere_generator_word(2), Error);
  CHECK_THROWS_AS(sphere_generator_word(6), Error);
}
