#include "peiffer/shadow.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

namespace peiffer {

namespace {

long long mod(long long v, long long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

QuotientGroup::QuotientGroup(int alphabet_size, long long p, int d, std::size_t budget)
    : k_(alphabet_size), p_(p), d_(d), budget_(budget) {
  if (k_ < 1) throw Error("alphabet size must be >= 1");
  if (!is_prime(p_)) throw Error("modulus must be prime");
  if (d_ < 1) throw Error("degree bound must be >= 1");

  // monomials of degree 1..d in graded-lex order
  std::vector<Monomial> prev{Monomial{}};
  for (int deg = 1; deg <= d_; ++deg) {
    std::vector<Monomial> cur;
    for (const Monomial& m : prev) {
      for (int v = 0; v < k_; ++v) {
        Monomial ext = m;
        ext.push_back(static_cast<std::uint8_t>(v));
        cur.push_back(std::move(ext));
      }
    }
    std::sort(cur.begin(), cur.end());
    for (Monomial& m : cur) monos_.push_back(std::move(m));
    prev.assign(monos_.end() - static_cast<long>(cur.size()), monos_.end());
  }

  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < monos_.size(); ++i)
    index[monos_[i]] = static_cast<int>(i);

  pair_target_.assign(monos_.size(), std::vector<int>(monos_.size(), -1));
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    for (std::size_t j = 0; j < monos_.size(); ++j) {
      if (static_cast<int>(monos_[i].size() + monos_[j].size()) > d_) continue;
      Monomial m = monos_[i];
      m.insert(m.end(), monos_[j].begin(), monos_[j].end());
      pair_target_[i][j] = index.at(m);
    }
  }
}

QElem QuotientGroup::identity() const { return QElem(monos_.size(), 0); }

QElem QuotientGroup::generator(int i) const {
  if (i < 0 || i >= k_) throw Error("generator index out of range");
  QElem e = identity();
  // degree-1 monomials are the first k_ entries in graded-lex order
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

QElem QuotientGroup::mul(const QElem& a, const QElem& b) const {
  QElem out(monos_.size());
  for (std::size_t t = 0; t < out.size(); ++t)
    out[t] = static_cast<std::int32_t>(mod(static_cast<long long>(a[t]) + b[t], p_));
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    if (a[i] == 0) continue;
    const auto& row = pair_target_[i];
    for (std::size_t j = 0; j < monos_.size(); ++j) {
      int t = row[j];
      if (t < 0 || b[j] == 0) continue;
      out[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(
          mod(out[static_cast<std::size_t>(t)] +
                  static_cast<long long>(a[i]) * b[j],
              p_));
    }
  }
  return out;
}

QElem QuotientGroup::inv(const QElem& a) const {
  // X = -A - A*X, iterated: each pass fixes one more degree
  QElem x(monos_.size(), 0);
  for (int pass = 0; pass < d_; ++pass) {
    QElem next(monos_.size());
    for (std::size_t t = 0; t < next.size(); ++t)
      next[t] = static_cast<std::int32_t>(mod(-static_cast<long long>(a[t]), p_));
    for (std::size_t i = 0; i < monos_.size(); ++i) {
      if (a[i] == 0) continue;
      const auto& row = pair_target_[i];
      for (std::size_t j = 0; j < monos_.size(); ++j) {
        int t = row[j];
        if (t < 0 || x[j] == 0) continue;
        next[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(
            mod(next[static_cast<std::size_t>(t)] -
                    static_cast<long long>(a[i]) * x[j],
                p_));
      }
    }
    x = std::move(next);
  }
  return x;
}

QElem QuotientGroup::conj(const QElem& a, const QElem& g) const {
  return mul(inv(g), mul(a, g));
}

QElem QuotientGroup::comm(const QElem& a, const QElem& b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

QElem QuotientGroup::project(const Word& w) const {
  if (w.max_generator() >= k_) throw Error("word uses generator outside the alphabet");
  QElem acc = identity();
  for (const Letter& l : w.letters()) {
    QElem g = generator(l.gen);
    acc = mul(acc, l.sign == 1 ? g : inv(g));
  }
  return acc;
}

Subgroup::Subgroup(const QuotientGroup* owner, std::vector<QElem> generators)
    : owner_(owner), gens_(std::move(generators)) {
  // A finite subsemigroup of a group is a subgroup, so closing under
  // right multiplication by the generators is enough.
  std::deque<QElem> queue;
  elems_.insert(owner_->identity());
  queue.push_back(owner_->identity());
  while (!queue.empty()) {
    QElem e = std::move(queue.front());
    queue.pop_front();
    for (const QElem& g : gens_) {
      QElem f = owner_->mul(e, g);
      if (elems_.insert(f).second) {
        if (elems_.size() > owner_->budget()) throw BudgetError(owner_->budget());
        queue.push_back(std::move(f));
      }
    }
  }
}

bool Subgroup::is_normal_under(const std::vector<QElem>& conjugators) const {
  for (const QElem& e : elems_)
    for (const QElem& g : conjugators)
      if (!contains(owner_->conj(e, g))) return false;
  return true;
}

Subgroup normal_closure(const QuotientGroup& q, const std::vector<Word>& gens) {
  std::vector<QElem> seeds;
  for (const Word& w : gens) {
    QElem e = q.project(w);
    if (e != q.identity()) seeds.push_back(std::move(e));
  }
  std::vector<QElem> group_gens;
  for (int i = 0; i < q.alphabet_size(); ++i) {
    group_gens.push_back(q.generator(i));
    group_gens.push_back(q.inv(q.generator(i)));
  }
  Subgroup s(&q, seeds);
  for (;;) {
    std::vector<QElem> fresh;
    for (const QElem& e : s.elements()) {
      for (const QElem& g : group_gens) {
        QElem c = q.conj(e, g);
        if (!s.contains(c)) fresh.push_back(std::move(c));
      }
    }
    if (fresh.empty()) return s;
    seeds.insert(seeds.end(), fresh.begin(), fresh.end());
    s = Subgroup(&q, seeds);
  }
}

Subgroup meet_subgroups(const Subgroup& a, const Subgroup& b) {
  const Subgroup& small = a.order() <= b.order() ? a : b;
  const Subgroup& large = a.order() <= b.order() ? b : a;
  Subgroup out(small.owner_, {});
  for (const QElem& e : small.elements())
    if (large.contains(e)) out.elems_.insert(e);
  out.gens_.assign(out.elems_.begin(), out.elems_.end());
  return out;
}

Subgroup subgroup_op(SubgroupOp kind, const Subgroup& a, const Subgroup& b) {
  if (!(a.owner() == b.owner())) throw Error("subgroup owner mismatch");
  const QuotientGroup& q = a.owner();
  switch (kind) {
    case SubgroupOp::meet:
      return meet_subgroups(a, b);
    case SubgroupOp::commutator: {
      std::unordered_set<QElem, QElemHash> comms;
      for (const QElem& x : a.elements())
        for (const QElem& y : b.elements()) {
          QElem c = q.comm(x, y);
          if (c != q.identity()) comms.insert(std::move(c));
        }
      return Subgroup(&q, std::vector<QElem>(comms.begin(), comms.end()));
    }
    case SubgroupOp::join: {
      std::vector<QElem> gens = a.generators();
      gens.insert(gens.end(), b.generators().begin(), b.generators().end());
      return Subgroup(&q, std::move(gens));
    }
  }
  throw Error("unreachable");
}

Shadow::Shadow(const ColoredPresentation& pres, long long p, int d, std::size_t budget)
    : q_(pres.alphabet().size(), p, d, budget) {
  const int n = pres.num_classes();

  for (const auto& cls : pres.classes()) classes_.push_back(normal_closure(q_, cls));

  // intersection of all class images
  Subgroup inter = classes_[0];
  for (int i = 1; i < n; ++i) inter = subgroup_op(SubgroupOp::meet, inter, classes_[static_cast<std::size_t>(i)]);
  store_.push_back(std::move(inter));

  // denominator: product over proper bipartitions {I, J} of [meet_I, meet_J]
  auto meet_of = [&](unsigned mask) {
    Subgroup m = classes_[static_cast<std::size_t>(std::countr_zero(mask))];
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) m = subgroup_op(SubgroupOp::meet, m, classes_[static_cast<std::size_t>(i)]);
    return m;
  };
  auto side_name = [&](unsigned mask) {
    std::string s;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) s += (s.empty() ? "" : "&") + ("R" + std::to_string(i + 1));
    return s;
  };

  std::vector<Subgroup> factors;
  const unsigned full = (1u << n) - 1u;
  for (unsigned mask = 1; mask < full; ++mask) {
    if (!(mask & 1u)) continue;  // each unordered bipartition once
    Subgroup left = meet_of(mask);
    Subgroup right = meet_of(full & ~mask);
    Subgroup fac = subgroup_op(SubgroupOp::commutator, left, right);
    factor_names_.push_back("[" + side_name(mask) + "," + side_name(full & ~mask) + "]");
    factor_orders_.push_back(fac.order());
    factors.push_back(std::move(fac));
  }

  Subgroup denom = std::move(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i)
    denom = subgroup_op(SubgroupOp::join, denom, factors[i]);
  store_.push_back(std::move(denom));

  intersection_ = &store_[0];
  denominator_ = &store_[1];

  std::vector<QElem> group_gens;
  for (int i = 0; i < q_.alphabet_size(); ++i) group_gens.push_back(q_.generator(i));
  denominator_normal_ = denominator_->is_normal_under(group_gens);
}

bool Shadow::in_denominator(const Word& w) const {
  return denominator_->contains(q_.project(w));
}

bool Shadow::congruent(const Word& u, const Word& v) const {
  return denominator_->contains(q_.project(multiply(u, invert(v))));
}

QElem Shadow::coset_label_elem(const QElem& e) const {
  QElem best = e;
  for (const QElem& d : denominator_->elements()) {
    QElem cand = q_.mul(e, d);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

QElem Shadow::coset_label(const Word& w) const {
  return coset_label_elem(q_.project(w));
}

std::size_t Shadow::quotient_order() const {
  std::unordered_set<QElem, QElemHash> labels;
  for (const QElem& e : intersection_->elements()) labels.insert(coset_label_elem(e));
  return labels.size();
}

bool Shadow::quotient_cyclic_generated_by(const Word& w) const {
  QElem g = q_.project(w);
  if (!intersection_->contains(g)) return false;
  std::unordered_set<QElem, QElemHash> labels;
  QElem acc = q_.identity();
  do {
    labels.insert(coset_label_elem(acc));
    acc = q_.mul(acc, g);
  } while (!labels.count(coset_label_elem(acc)));
  return labels.size() == quotient_order();
}

ShadowReport Shadow::report() const {
  ShadowReport r;
  r.p = q_.p();
  r.d = q_.d();
  std::vector<QElem> gens;
  for (int i = 0; i < q_.alphabet_size(); ++i) gens.push_back(q_.generator(i));
  r.image_order = Subgroup(&q_, gens).order();
  for (const Subgroup& s : classes_) r.class_orders.push_back(s.order());
  r.intersection_order = intersection_->order();
  r.factor_names = factor_names_;
  r.factor_orders = factor_orders_;
  r.denominator_order = denominator_->order();
  r.quotient_order = quotient_order();
  r.denominator_normal = denominator_normal_;
  return r;
}

ShadowReport shadow_of_I3(const ColoredPresentation& pres, long long p, int d,
                          std::size_t budget) {
  if (pres.num_classes() != 3) throw Error("shadow_of_I3 needs exactly 3 classes");
  return Shadow(pres, p, d, budget).report();
}

bool shadow_congruent(const Word& u, const Word& v, const ColoredPresentation& pres,
                      long long p, int d, std::size_t budget) {
  return Shadow(pres, p, d, budget).congruent(u, v);
}

}  // namespace peiffer
