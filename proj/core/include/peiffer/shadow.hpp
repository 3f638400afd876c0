#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "peiffer/magnus.hpp"
#include "peiffer/presentation.hpp"

namespace peiffer {

struct BudgetError : Error {
  explicit BudgetError(std::size_t cap)
      : Error("enumeration budget of " + std::to_string(cap) + " elements exceeded"),
        cap(cap) {}
  std::size_t cap;
};

/// Dense element of the truncated unit group: residues of the monomial
/// coefficients of degree 1..d in graded-lex order; the constant term is
/// implicitly 1.
using QElem = std::vector<std::int32_t>;

struct QElemHash {
  std::size_t operator()(const QElem& e) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t v : e) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// The finite p-group of truncated unit series over alphabet_size
/// noncommuting variables mod p, truncated at degree d. project() is a group
/// homomorphism from the free group.
class QuotientGroup {
public:
  QuotientGroup(int alphabet_size, long long p, int d,
                std::size_t budget = kDefaultBudget);

  static constexpr std::size_t kDefaultBudget = 2'000'000;

  int alphabet_size() const { return k_; }
  long long p() const { return p_; }
  int d() const { return d_; }
  std::size_t budget() const { return budget_; }
  const std::vector<Monomial>& monomials() const { return monos_; }

  QElem identity() const;
  QElem generator(int i) const;
  QElem mul(const QElem& a, const QElem& b) const;
  QElem inv(const QElem& a) const;
  QElem conj(const QElem& a, const QElem& g) const;  // g^-1 a g
  QElem comm(const QElem& a, const QElem& b) const;  // a^-1 b^-1 a b
  QElem project(const Word& w) const;

  friend bool operator==(const QuotientGroup& a, const QuotientGroup& b) {
    return a.k_ == b.k_ && a.p_ == b.p_ && a.d_ == b.d_;
  }

private:
  int k_;
  long long p_;
  int d_;
  std::size_t budget_;
  std::vector<Monomial> monos_;
  // pair_target_[i][j]: index of monomial i concatenated with j, or -1 when
  // the product exceeds the degree bound
  std::vector<std::vector<int>> pair_target_;
};

/// Explicitly enumerated subgroup of a QuotientGroup: closed under
/// multiplication and inverse, contains the identity.
class Subgroup {
public:
  Subgroup(const QuotientGroup* owner, std::vector<QElem> generators);

  const QuotientGroup& owner() const { return *owner_; }
  std::size_t order() const { return elems_.size(); }
  bool contains(const QElem& e) const { return elems_.count(e) != 0; }
  const std::unordered_set<QElem, QElemHash>& elements() const { return elems_; }
  const std::vector<QElem>& generators() const { return gens_; }

  bool is_normal_under(const std::vector<QElem>& conjugators) const;

private:
  friend Subgroup meet_subgroups(const Subgroup&, const Subgroup&);
  const QuotientGroup* owner_;
  std::vector<QElem> gens_;
  std::unordered_set<QElem, QElemHash> elems_;
};

/// Smallest subgroup containing the projections of `gens` and closed under
/// conjugation by the group generators.
Subgroup normal_closure(const QuotientGroup& q, const std::vector<Word>& gens);

enum class SubgroupOp { meet, commutator, join };

/// meet: set intersection. commutator: subgroup generated by all pairwise
/// commutators of the full element sets. join: subgroup generated by the
/// union.
Subgroup subgroup_op(SubgroupOp kind, const Subgroup& a, const Subgroup& b);

struct ShadowReport {
  long long p = 0;
  int d = 0;
  std::size_t image_order = 0;
  std::vector<std::size_t> class_orders;   // |R_i| images
  std::size_t intersection_order = 0;      // |N|
  std::vector<std::string> factor_names;   // symbolic bipartition factors
  std::vector<std::size_t> factor_orders;
  std::size_t denominator_order = 0;  // |D|
  std::size_t quotient_order = 0;     // |N| / |D|
  bool denominator_normal = false;
};

/// Finite shadow of a colored presentation: images of the normal closures
/// R_i, their intersection N, the symmetric-commutator denominator D (the
/// product over proper bipartitions {I,J} of [meet_I R, meet_J R]), and the
/// quotient N/D. Congruence mod D in the free group implies coset equality
/// here, so a mismatch refutes it.
class Shadow {
public:
  Shadow(const ColoredPresentation& pres, long long p, int d,
         std::size_t budget = QuotientGroup::kDefaultBudget);

  const QuotientGroup& group() const { return q_; }
  const std::vector<Subgroup>& class_images() const { return classes_; }
  const Subgroup& intersection() const { return *intersection_; }
  const Subgroup& denominator() const { return *denominator_; }

  bool in_denominator(const Word& w) const;
  /// True iff project(u v^-1) lies in the denominator image.
  bool congruent(const Word& u, const Word& v) const;

  /// Canonical label of the coset project(w) * D: the lexicographically
  /// smallest element of that coset.
  QElem coset_label(const Word& w) const;

  std::size_t quotient_order() const;
  /// True iff the cosets of powers of w exhaust the quotient N/D.
  bool quotient_cyclic_generated_by(const Word& w) const;

  ShadowReport report() const;

private:
  QElem coset_label_elem(const QElem& e) const;

  QuotientGroup q_;
  std::vector<Subgroup> classes_;
  std::vector<std::string> factor_names_;
  std::vector<std::size_t> factor_orders_;
  std::vector<Subgroup> store_;  // keeps intersection_/denominator_ alive
  const Subgroup* intersection_ = nullptr;
  const Subgroup* denominator_ = nullptr;
  bool denominator_normal_ = false;
};

/// One-shot helpers matching the report/congruence contracts; build a Shadow
/// directly when several queries share a configuration.
ShadowReport shadow_of_I3(const ColoredPresentation& pres, long long p, int d,
                          std::size_t budget = QuotientGroup::kDefaultBudget);
bool shadow_congruent(const Word& u, const Word& v, const ColoredPresentation& pres,
                      long long p, int d,
                      std::size_t budget = QuotientGroup::kDefaultBudget);

}  // namespace peiffer
