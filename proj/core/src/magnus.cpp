#include "peiffer/magnus.hpp"

namespace peiffer {

TruncatedSeries::TruncatedSeries(int degree_bound, long long p)
    : degree_bound_(degree_bound), p_(p) {
  if (degree_bound < 1) throw Error("degree bound must be >= 1");
  if (p < 0) throw Error("modulus must be a prime or 0");
}

TruncatedSeries TruncatedSeries::one(int degree_bound, long long p) {
  TruncatedSeries s(degree_bound, p);
  s.add_term(Monomial{}, 1);
  return s;
}

TruncatedSeries TruncatedSeries::letter(int var, int sign, int degree_bound,
                                        long long p) {
  TruncatedSeries s = one(degree_bound, p);
  Monomial m;
  for (int k = 1; k <= degree_bound; ++k) {
    m.push_back(static_cast<std::uint8_t>(var));
    if (sign == 1) {
      s.add_term(m, 1);
      break;
    }
    s.add_term(m, k % 2 == 0 ? 1 : -1);
  }
  return s;
}

Coeff TruncatedSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void TruncatedSeries::add_term(Monomial m, Coeff c) {
  if (static_cast<int>(m.size()) > degree_bound_) return;
  if (p_ != 0) {
    c %= p_;
    if (c < 0) c += p_;
  }
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(std::move(m), std::move(c));
    return;
  }
  it->second += c;
  if (p_ != 0) it->second %= p_;
  if (it->second == 0) terms_.erase(it);
}

std::optional<int> TruncatedSeries::min_positive_degree() const {
  for (const auto& [m, c] : terms_)
    if (!m.empty()) return static_cast<int>(m.size());
  return std::nullopt;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.degree_bound_ != b.degree_bound_ || a.p_ != b.p_)
    throw Error("series parameter mismatch");
  TruncatedSeries out(a.degree_bound_, a.p_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (static_cast<int>(ma.size() + mb.size()) > a.degree_bound_) break;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

TruncatedSeries magnus_expand(const Word& w, int d, long long p) {
  TruncatedSeries acc = TruncatedSeries::one(d, p);
  for (const Letter& l : w.letters())
    acc = multiply(acc, TruncatedSeries::letter(l.gen, l.sign, d, p));
  return acc;
}

std::optional<int> lcs_degree(const Word& w, int d) {
  if (w.empty()) return std::nullopt;
  return magnus_expand(w, d, 0).min_positive_degree();
}

}  // namespace peiffer
