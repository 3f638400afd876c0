#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace peiffer {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A named free-group generator. `id` is the index into the owning alphabet.
struct Generator {
  int id = 0;
  std::string name;
};

/// One letter of a word: a generator with sign +1 or -1.
struct Letter {
  int gen = 0;
  int sign = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word over a finite generator alphabet. The empty word is
/// the group identity. Words are immutable after construction and every
/// constructor reduces, so no unreduced word ever exists.
class Word {
public:
  Word() = default;

  /// Reduces the given letter sequence.
  explicit Word(std::vector<Letter> letters);

  static Word generator(int id, int sign = +1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  /// Largest generator id used, or -1 for the empty word.
  int max_generator() const;

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);

/// g^-1 u g
Word conjugate(const Word& u, const Word& g);

/// u^n, with u^0 the empty word and negative n via the inverse.
Word power(const Word& u, long n);

/// [a,b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);

/// [w1,w2,...,wt] = [[...[w1,w2],...],wt]; requires at least two entries.
Word left_normed_commutator(std::span<const Word> ws);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace peiffer
