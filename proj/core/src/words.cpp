#include "peiffer/words.hpp"

namespace peiffer {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l.sign != 1 && l.sign != -1) throw Error("letter sign must be +1 or -1");
    push_reduced(letters_, l);
  }
}

Word Word::generator(int id, int sign) {
  if (id < 0) throw Error("generator id must be non-negative");
  return Word({Letter{id, sign}});
}

int Word::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters();
  out.reserve(u.size() + v.size());
  for (Letter l : v.letters()) push_reduced(out, l);
  // already reduced; the reducing constructor is idempotent
  return Word(std::move(out));
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(Letter{it->gen, -it->sign});
  }
  return Word(std::move(out));
}

Word conjugate(const Word& u, const Word& g) {
  return multiply(invert(g), multiply(u, g));
}

Word power(const Word& u, long n) {
  const Word base = n < 0 ? invert(u) : u;
  long k = n < 0 ? -n : n;
  Word acc;
  while (k-- > 0) acc = multiply(acc, base);
  return acc;
}

Word commutator(const Word& a, const Word& b) {
  return multiply(multiply(invert(a), invert(b)), multiply(a, b));
}

Word left_normed_commutator(std::span<const Word> ws) {
  if (ws.size() < 2) throw Error("left-normed commutator needs at least two words");
  Word acc = commutator(ws[0], ws[1]);
  for (std::size_t i = 2; i < ws.size(); ++i) acc = commutator(acc, ws[i]);
  return acc;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  for (const Letter& l : w.letters()) {
    h ^= static_cast<std::size_t>(l.gen * 2 + (l.sign < 0));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace peiffer
