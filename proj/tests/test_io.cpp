#include <doctest.h>

#include <memory>
#include <sstream>

#include "peiffer/io.hpp"
#include "peiffer/parse.hpp"

using namespace peiffer;

namespace {

std::shared_ptr<const ColoredPresentation> parse_pres(const std::string& text) {
  std::istringstream in(text);
  return std::make_shared<const ColoredPresentation>(parse_presentation(in));
}

const char kSphere[] =
    "gens: x1 x2\n"
    "class: x1\n"
    "class: x2\n"
    "class: x2^-1 x1^-1\n";

}  // namespace

TEST_CASE("presentation files") {
  auto p = parse_pres(kSphere);
  CHECK(p->num_classes() == 3);
  CHECK(p->relator({2, 0}) == parse_word("x2^-1 x1^-1", p->alphabet()));

  auto multi = parse_pres(
      "gens: a b\n"
      "# comment line\n"
      "class: a ; [a,b]\n"
      "class: b\n");
  CHECK(multi->classes()[0].size() == 2);
  CHECK(multi->relator({0, 1}) == parse_word("[a,b]", multi->alphabet()));

  auto bracket = parse_pres(
      "gens: x1 x2\n"
      "class: x1\n"
      "class: [x1,x2]\n"
      "class: [x1,x2,x1]\n");
  CHECK(bracket->relator({2, 0}).size() == 8);

  CHECK_THROWS_WITH_AS(parse_pres("gens: a\nclass: q\n"),
                       doctest::Contains("line 2"), Error);
  CHECK_THROWS_AS(parse_pres("class: a\ngens: a\n"), Error);
  CHECK_THROWS_AS(parse_pres("gens: a a\nclass: a\n"), Error);
  CHECK_THROWS_AS(parse_pres("gens: a\nclass: a a^-1\nclass: a\n"), Error);
  CHECK_THROWS_AS(parse_pres("gens: a\nclass: a\n"), Error);  // one class only
}

TEST_CASE("sequence files") {
  auto p = parse_pres(kSphere);
  std::istringstream in(
      "seq {\n"
      "(1:1 + @ e)\n"
      "(2:1 + @ e)\n"
      "(3:1 + @ e)\n"
      "}\n");
  IdentitySequence seq = parse_sequence(in, p);
  CHECK(seq.size() == 3);
  CHECK(seq.items()[0].relator.cls == 0);
  CHECK(seq.items()[0].exponent == 1);
  CHECK(seq.items()[0].conjugator.empty());

  std::istringstream conj(
      "seq {\n"
      "(2:1 + @ e)\n"
      "(1:1 + @ e)\n"
      "(3:1 + @ x1)\n"
      "}\n");
  IdentitySequence sw = parse_sequence(conj, p);
  CHECK(sw.items()[2].conjugator == parse_word("x1", p->alphabet()));

  std::istringstream bad1("seq {\n(9:1 + @ e)\n}\n");
  CHECK_THROWS_AS(parse_sequence(bad1, p), Error);
  std::istringstream bad2("(1:1 + @ e)\n");
  CHECK_THROWS_AS(parse_sequence(bad2, p), Error);
  std::istringstream bad3("seq {\n(1:1 * @ e)\n}\n");
  CHECK_THROWS_AS(parse_sequence(bad3, p), Error);
}

TEST_CASE("format round trip") {
  auto p = parse_pres(kSphere);
  std::istringstream in(
      "seq {\n"
      "(2:1 - @ x1 x2^-1)\n"
      "(2:1 + @ x1 x2^-1)\n"
      "}\n");
  IdentitySequence seq = parse_sequence(in, p);
  std::istringstream again(format_sequence(seq));
  CHECK(parse_sequence(again, p).items() == seq.items());
}
