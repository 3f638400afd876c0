#pragma once

#include <string>
#include <vector>

#include "peiffer/words.hpp"

namespace peiffer {

/// Ordered list of named generators; indices follow declaration order.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& at(int id) const;
  const std::vector<Generator>& generators() const { return gens_; }

  /// Index of a generator name, or -1.
  int index_of(const std::string& name) const;

  friend bool operator==(const Alphabet&, const Alphabet&);

private:
  std::vector<Generator> gens_;
};

/// Identifies one relator occurrence: (class index, position within class).
/// Both are 0-based internally; the text formats are 1-based.
struct RelatorRef {
  int cls = 0;
  int idx = 0;

  friend bool operator==(const RelatorRef&, const RelatorRef&) = default;
};

/// An alphabet plus n >= 2 disjoint classes of relator words. Class i stands
/// for the normal closure R_i of its relators in the free group.
class ColoredPresentation {
public:
  ColoredPresentation() = default;
  ColoredPresentation(Alphabet alphabet, std::vector<std::vector<Word>> classes);

  const Alphabet& alphabet() const { return alphabet_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<Word>>& classes() const { return classes_; }
  const Word& relator(RelatorRef ref) const;

  friend bool operator==(const ColoredPresentation&, const ColoredPresentation&);

private:
  Alphabet alphabet_;
  std::vector<std::vector<Word>> classes_;
};

std::string to_string(const Word& w, const Alphabet& alphabet);

}  // namespace peiffer
