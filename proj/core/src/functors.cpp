#include "peiffer/functors.hpp"

#include <algorithm>

namespace peiffer {

FreeAbelian FreeAbelian::of_rank(int r) {
  if (r < 0) throw Error("rank must be >= 0");
  FreeAbelian a;
  a.rank = r;
  for (int i = 1; i <= r; ++i) a.basis.push_back("a" + std::to_string(i));
  return a;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error("matmul dimension mismatch");
  IntMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

namespace {

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  SmithResult res;
  res.u = identity_matrix(m.rows);
  res.v = identity_matrix(m.cols);

  auto swap_rows = [&](int a, int b) {
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int j = 0; j < res.u.cols; ++j) std::swap(res.u.at(a, j), res.u.at(b, j));
  };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    for (int i = 0; i < res.v.rows; ++i) std::swap(res.v.at(i, a), res.v.at(i, b));
  };
  auto add_row = [&](int dst, int src, const Coeff& f) {  // row dst += f * row src
    for (int j = 0; j < m.cols; ++j) m.at(dst, j) += f * m.at(src, j);
    for (int j = 0; j < res.u.cols; ++j) res.u.at(dst, j) += f * res.u.at(src, j);
  };
  auto add_col = [&](int dst, int src, const Coeff& f) {
    for (int i = 0; i < m.rows; ++i) m.at(i, dst) += f * m.at(i, src);
    for (int i = 0; i < res.v.rows; ++i) res.v.at(i, dst) += f * res.v.at(i, src);
  };

  int t = 0;
  while (t < m.rows && t < m.cols) {
    // find a pivot of minimal absolute value
    int pi = -1, pj = -1;
    Coeff best = 0;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        Coeff v = abs(m.at(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool reduced = true;
    for (int i = t + 1; i < m.rows; ++i) {
      if (m.at(i, t) == 0) continue;
      add_row(i, t, -(m.at(i, t) / m.at(t, t)));
      if (m.at(i, t) != 0) reduced = false;
    }
    for (int j = t + 1; j < m.cols; ++j) {
      if (m.at(t, j) == 0) continue;
      add_col(j, t, -(m.at(t, j) / m.at(t, t)));
      if (m.at(t, j) != 0) reduced = false;
    }
    if (!reduced) continue;  // nonzero remainders left; pick a smaller pivot

    // divisibility: fold in any entry the pivot does not divide
    bool divisible = true;
    for (int i = t + 1; i < m.rows && divisible; ++i)
      for (int j = t + 1; j < m.cols && divisible; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          add_row(t, i, 1);
          divisible = false;
        }
    if (!divisible) continue;

    if (m.at(t, t) < 0) add_row(t, t, -2);  // row += -2*row negates it
    ++t;
  }

  res.rank = t;
  res.d = std::move(m);
  for (int i = 0; i < t; ++i) res.diag.push_back(res.d.at(i, i));
  return res;
}

bool lattice_contains(const SmithResult& snf, const std::vector<Coeff>& v) {
  if (static_cast<int>(v.size()) != snf.u.cols) throw Error("vector dimension mismatch");
  // M x = v  <=>  D y = U v with y = V^-1 x; solvable over Z iff each pivot
  // divides its entry and the rest vanish
  std::vector<Coeff> uv(static_cast<std::size_t>(snf.u.rows));
  for (int i = 0; i < snf.u.rows; ++i)
    for (int j = 0; j < snf.u.cols; ++j) uv[static_cast<std::size_t>(i)] += snf.u.at(i, j) * v[static_cast<std::size_t>(j)];
  for (int i = 0; i < snf.u.rows; ++i) {
    if (i < snf.rank) {
      if (uv[static_cast<std::size_t>(i)] % snf.diag[static_cast<std::size_t>(i)] != 0) return false;
    } else if (uv[static_cast<std::size_t>(i)] != 0) {
      return false;
    }
  }
  return true;
}

namespace {

// basis index helpers for the symmetric pairs (i <= j)
int sym_index(int i, int j, int r) {
  // row-major over the upper triangle
  return i * r - i * (i - 1) / 2 + (j - i);
}

}  // namespace

FunctorData functor_data(QuadraticFunctor kind, const FreeAbelian& a) {
  const int r = a.rank;
  FunctorData out;
  switch (kind) {
    case QuadraticFunctor::SP2:
      for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j)
          out.basis.push_back(a.basis[static_cast<std::size_t>(i)] + "." +
                              a.basis[static_cast<std::size_t>(j)]);
      break;
    case QuadraticFunctor::GammaW:
      for (int i = 0; i < r; ++i)
        out.basis.push_back("g(" + a.basis[static_cast<std::size_t>(i)] + ")");
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
          out.basis.push_back("[" + a.basis[static_cast<std::size_t>(i)] + "," +
                              a.basis[static_cast<std::size_t>(j)] + "]");
      break;
    case QuadraticFunctor::P2:
      for (int i = 0; i < r; ++i)
        out.basis.push_back("(" + a.basis[static_cast<std::size_t>(i)] + "-1)");
      for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j)
          out.basis.push_back("(" + a.basis[static_cast<std::size_t>(i)] + "-1)(" +
                              a.basis[static_cast<std::size_t>(j)] + "-1)");
      break;
    case QuadraticFunctor::TensorZ2:
      for (int i = 0; i < r; ++i)
        out.basis.push_back(a.basis[static_cast<std::size_t>(i)] + "(x)1");
      out.exponent = 2;
      break;
  }
  out.rank = static_cast<int>(out.basis.size());
  return out;
}

FunctorSequenceReport verify_sequences(const FreeAbelian& a, int max_rank) {
  const int r = a.rank;
  if (r > max_rank) throw Error("rank bound exceeded");

  FunctorSequenceReport rep;
  rep.rank = r;
  const int sp2 = r * (r + 1) / 2;
  const int gam = sp2;
  const int p2 = r + sp2;
  rep.sp2_rank = sp2;
  rep.gamma_rank = gam;
  rep.p2_rank = p2;

  // SP2 -> P2: a.b -> (a-1)(b-1)
  IntMatrix m_sp2_p2(p2, sp2);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j)
      m_sp2_p2.at(r + sym_index(i, j, r), sym_index(i, j, r)) = 1;

  // P2 -> A: (a-1) -> a, quadratic part -> 0
  IntMatrix m_p2_a(r, p2);
  for (int i = 0; i < r; ++i) m_p2_a.at(i, i) = 1;

  // SP2 -> Gamma: a.b -> g(a+b) - g(a) - g(b); diagonal pairs give 2 g(a)
  IntMatrix m_sp2_gam(gam, sp2);
  {
    int cross = r;  // bracket basis starts after the g(e_i)
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        if (i == j) {
          m_sp2_gam.at(i, sym_index(i, i, r)) = 2;
        } else {
          m_sp2_gam.at(cross + sym_index(i, j - 1, r - 1), sym_index(i, j, r)) = 1;
        }
      }
  }

  // Gamma -> A (x) Z2: g(a) -> a, brackets -> 0 (matrix over Z, target mod 2)
  IntMatrix m_gam_t2(r, gam);
  for (int i = 0; i < r; ++i) m_gam_t2.at(i, i) = 1;

  SmithResult snf_sp2_p2 = smith_normal_form(m_sp2_p2);
  SmithResult snf_p2_a = smith_normal_form(m_p2_a);
  SmithResult snf_sp2_gam = smith_normal_form(m_sp2_gam);

  // (o1) left injectivity: full column rank
  rep.o1_left_injective = snf_sp2_p2.rank == sp2;
  // (o1) right surjectivity: rank r with unit invariant factors
  rep.o1_right_surjective = snf_p2_a.rank == r &&
      std::all_of(snf_p2_a.diag.begin(), snf_p2_a.diag.end(),
                  [](const Coeff& c) { return c == 1; });

  // (o1) exactness at the middle: im(SP2->P2) == ker(P2->A)
  {
    bool composite_zero = true;
    IntMatrix comp = matmul(m_p2_a, m_sp2_p2);
    for (const Coeff& c : comp.a)
      if (c != 0) composite_zero = false;
    bool ker_in_im = true;
    // kernel basis of P2 -> A: columns of V past the rank
    for (int j = snf_p2_a.rank; j < p2; ++j) {
      std::vector<Coeff> k(static_cast<std::size_t>(p2));
      for (int i = 0; i < p2; ++i) k[static_cast<std::size_t>(i)] = snf_p2_a.v.at(i, j);
      if (!lattice_contains(snf_sp2_p2, k)) ker_in_im = false;
    }
    rep.o1_middle_exact = composite_zero && ker_in_im;
  }

  // (o2) left injectivity and cokernel order
  rep.o2_left_injective = snf_sp2_gam.rank == sp2;
  rep.sp2_to_gamma_cokernel_order = 1;
  for (const Coeff& c : snf_sp2_gam.diag) rep.sp2_to_gamma_cokernel_order *= c;
  if (snf_sp2_gam.rank < gam) rep.sp2_to_gamma_cokernel_order = 0;  // infinite

  // (o2) right surjectivity: rank r over GF(2)
  {
    IntMatrix m = m_gam_t2;
    int rank2 = 0;
    for (int col = 0; col < m.cols && rank2 < m.rows; ++col) {
      int pivot = -1;
      for (int i = rank2; i < m.rows; ++i)
        if (m.at(i, col) % 2 != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(rank2, j), m.at(pivot, j));
      for (int i = 0; i < m.rows; ++i) {
        if (i == rank2 || m.at(i, col) % 2 == 0) continue;
        for (int j = 0; j < m.cols; ++j) m.at(i, j) += m.at(rank2, j);
      }
      ++rank2;
    }
    rep.o2_right_surjective = rank2 == r;
  }

  // (o2) exactness at the middle: im(SP2->Gamma) == preimage of 0 in A(x)Z2
  {
    bool im_in_ker = true;
    IntMatrix comp = matmul(m_gam_t2, m_sp2_gam);
    for (const Coeff& c : comp.a)
      if (c % 2 != 0) im_in_ker = false;

    // the mod-2 kernel lattice is generated by 2 e_k and lifts of the GF(2)
    // kernel of m_gam_t2 (the bracket basis vectors, plus 2-divisible g's)
    bool ker_in_im = true;
    for (int k = 0; k < gam; ++k) {
      std::vector<Coeff> v(static_cast<std::size_t>(gam));
      v[static_cast<std::size_t>(k)] = 2;
      if (!lattice_contains(snf_sp2_gam, v)) ker_in_im = false;
    }
    // GF(2) kernel basis of m_gam_t2: all bracket basis vectors (columns past r)
    for (int k = r; k < gam; ++k) {
      std::vector<Coeff> v(static_cast<std::size_t>(gam));
      v[static_cast<std::size_t>(k)] = 1;
      if (!lattice_contains(snf_sp2_gam, v)) ker_in_im = false;
    }
    rep.o2_middle_exact = im_in_ker && ker_in_im;
  }

  rep.all_exact = rep.o1_left_injective && rep.o1_middle_exact &&
                  rep.o1_right_surjective && rep.o2_left_injective &&
                  rep.o2_middle_exact && rep.o2_right_surjective;
  return rep;
}

}  // namespace peiffer
