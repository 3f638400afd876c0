#include "peiffer/wu.hpp"

#include <bit>
#include <unordered_set>

namespace peiffer {

namespace {

std::vector<std::string> wu_names(int n) {
  std::vector<std::string> names;
  if (n == 1) {
    names = {"x"};
  } else if (n == 2) {
    names = {"x1", "x2"};
  } else {
    for (int i = 0; i < n; ++i) names.push_back("y" + std::to_string(i));
  }
  return names;
}

}  // namespace

WuInstance wu_presentation(int n) {
  if (n < 1) throw Error("wu_presentation needs n >= 1");
  Alphabet alphabet(wu_names(n));
  std::vector<std::vector<Word>> classes;
  Word product;
  for (int i = 0; i < n; ++i) {
    classes.push_back({Word::generator(i)});
    product = multiply(product, Word::generator(i));
  }
  classes.push_back({invert(product)});
  return WuInstance{n, ColoredPresentation(std::move(alphabet), std::move(classes))};
}

std::vector<Word> wu_bracket_generators(int n, int max_len) {
  if (n < 1) throw Error("wu_bracket_generators needs n >= 1");
  if (max_len < n + 1)
    throw Error("max_len below n+1: no commutator contains every symbol");

  // symbol 0 is y_-1; symbol i+1 is generator i
  std::vector<Word> symbol_words;
  {
    Word product;
    for (int i = 0; i < n; ++i) product = multiply(product, Word::generator(i));
    symbol_words.push_back(invert(product));
    for (int i = 0; i < n; ++i) symbol_words.push_back(Word::generator(i));
  }
  const int nsym = n + 1;

  std::vector<Word> out;
  std::unordered_set<Word, WordHash> seen;
  std::vector<std::pair<int, int>> tuple;  // (symbol, sign)

  auto emit = [&] {
    std::vector<Word> parts;
    parts.reserve(tuple.size());
    for (auto [sym, sign] : tuple) {
      const Word& w = symbol_words[static_cast<std::size_t>(sym)];
      parts.push_back(sign == 1 ? w : invert(w));
    }
    Word c = left_normed_commutator(parts);
    if (!c.empty() && seen.insert(c).second) out.push_back(std::move(c));
  };

  // lexicographic enumeration: position by position, symbols ascending and
  // +1 before -1 at each slot
  auto rec = [&](auto&& self, int t, unsigned used) -> void {
    int pos = static_cast<int>(tuple.size());
    if (pos == t) {
      if (used == (1u << nsym) - 1) emit();
      return;
    }
    // prune: remaining slots must be able to cover the missing symbols
    int missing = nsym - static_cast<int>(std::popcount(used));
    if (missing > t - pos) return;
    for (int sym = 0; sym < nsym; ++sym) {
      for (int sign : {+1, -1}) {
        tuple.emplace_back(sym, sign);
        self(self, t, used | (1u << sym));
        tuple.pop_back();
      }
    }
  };

  for (int t = n + 1; t <= max_len; ++t) rec(rec, t, 0);
  return out;
}

Word sphere_generator_word(int k) {
  auto g = [](int i) { return Word::generator(i); };
  switch (k) {
    case 3:
      return commutator(g(0), g(1));
    case 4:
      return commutator(commutator(g(0), g(1)),
                        commutator(g(0), multiply(g(1), g(2))));
    case 5: {
      Word a = commutator(commutator(g(0), g(1)),
                          commutator(g(0), multiply(g(1), g(2))));
      Word b = commutator(
          commutator(g(0), g(1)),
          commutator(g(0), multiply(g(1), multiply(g(2), g(3)))));
      return commutator(a, b);
    }
    default:
      throw Error("sphere_generator_word is defined for k in {3,4,5}");
  }
}

}  // namespace peiffer
