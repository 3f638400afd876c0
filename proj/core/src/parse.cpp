#include "peiffer/parse.hpp"

#include <cctype>
#include <vector>

namespace peiffer {

namespace {

class WordParser {
public:
  WordParser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Word parse() {
    Word w = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return w;
  }

private:
  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary(char c) {
    return c == '(' || c == '[' || c == '_' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  // expr := factor*   (juxtaposition; empty input is the empty word)
  Word parse_expr() {
    Word acc;
    while (starts_primary(peek())) acc = multiply(acc, parse_factor());
    return acc;
  }

  // factor := primary ('^' (int | factor))*
  Word parse_factor() {
    Word base = parse_primary();
    while (peek() == '^') {
      ++pos_;
      char c = peek();
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        base = power(base, parse_int());
      } else if (starts_primary(c)) {
        // right-associative: the conjugator is itself a full factor
        base = conjugate(base, parse_factor());
      } else {
        fail("expected integer or word after '^'");
      }
    }
    return base;
  }

  Word parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = parse_expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      std::vector<Word> parts;
      parts.push_back(parse_expr());
      while (peek() == ',') {
        ++pos_;
        parts.push_back(parse_expr());
      }
      if (peek() != ']') fail("expected ',' or ']'");
      ++pos_;
      if (parts.size() < 2) fail("commutator bracket needs at least two entries");
      return left_normed_commutator(parts);
    }
    return parse_name();
  }

  Word parse_name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected generator name");
    std::string name(text_.substr(start, pos_ - start));
    int id = alphabet_.index_of(name);
    if (id < 0) {
      if (name == "e") return Word();  // empty-word literal
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    return Word::generator(id);
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start || (text_[start] == '-' && pos_ == start + 1))
      fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return WordParser(text, alphabet).parse();
}

}  // namespace peiffer
