#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "peiffer/words.hpp"

namespace peiffer {

using Coeff = boost::multiprecision::cpp_int;

/// A noncommuting monomial: the sequence of variable indices.
using Monomial = std::vector<std::uint8_t>;

/// Graded lexicographic: shorter first, then lexicographic by variable index.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Noncommutative polynomial truncated at a degree bound, with exact integer
/// coefficients or integers mod p (p = 0 means exact). Zero coefficients are
/// never stored.
class TruncatedSeries {
public:
  using TermMap = std::map<Monomial, Coeff, GradedLex>;

  TruncatedSeries(int degree_bound, long long p);

  static TruncatedSeries one(int degree_bound, long long p);
  /// Magnus image of a single letter: 1 + X for sign +1, the truncated
  /// alternating geometric series 1 - X + X^2 - ... for sign -1.
  static TruncatedSeries letter(int var, int sign, int degree_bound, long long p);

  int degree_bound() const { return degree_bound_; }
  long long prime() const { return p_; }
  const TermMap& terms() const { return terms_; }

  Coeff coeff(const Monomial& m) const;
  void add_term(Monomial m, Coeff c);

  /// Smallest degree >= 1 carrying a nonzero term, or nullopt.
  std::optional<int> min_positive_degree() const;

  friend TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  int degree_bound_;
  long long p_;
  TermMap terms_;
};

/// Homomorphic Magnus image x_i -> 1 + X_i truncated at degree d; exact over
/// the integers when p == 0, mod p otherwise.
TruncatedSeries magnus_expand(const Word& w, int d, long long p = 0);

/// Smallest k <= d with a nonzero Magnus term of degree k, or nullopt when
/// every degree 1..d vanishes (then w lies in the (d+1)-st lower central
/// term). The empty word always returns nullopt.
std::optional<int> lcs_degree(const Word& w, int d);

}  // namespace peiffer
