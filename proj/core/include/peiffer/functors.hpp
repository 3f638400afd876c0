#pragma once

#include <string>
#include <vector>

#include "peiffer/magnus.hpp"  // Coeff
#include "peiffer/words.hpp"

namespace peiffer {

/// A finitely generated free abelian group with labeled basis.
struct FreeAbelian {
  int rank = 0;
  std::vector<std::string> basis;

  static FreeAbelian of_rank(int r);
};

/// Dense integer matrix; the map sends the domain basis to integer
/// combinations of the codomain basis (columns index the domain).
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Coeff> a;

  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows(rows), cols(cols), a(static_cast<std::size_t>(rows) * cols) {}
  Coeff& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Coeff& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// u * m * v = d with u, v unimodular and d diagonal with divisibility.
struct SmithResult {
  IntMatrix d, u, v;
  int rank = 0;
  std::vector<Coeff> diag;  // the nonzero diagonal entries
};

SmithResult smith_normal_form(IntMatrix m);

/// True iff v is an integer combination of the columns of m.
bool lattice_contains(const SmithResult& snf_of_m, const std::vector<Coeff>& v);

enum class QuadraticFunctor { SP2, GammaW, P2, TensorZ2 };

/// Value of the functor on A, as a distinguished basis plus exponent:
/// exponent 0 means free abelian, exponent 2 means elementary abelian 2.
struct FunctorData {
  std::vector<std::string> basis;
  int rank = 0;
  int exponent = 0;
};

FunctorData functor_data(QuadraticFunctor kind, const FreeAbelian& a);

struct FunctorSequenceReport {
  int rank = 0;
  int sp2_rank = 0, gamma_rank = 0, p2_rank = 0;
  // 0 -> SP2 -> P2 -> A -> 0
  bool o1_left_injective = false, o1_middle_exact = false, o1_right_surjective = false;
  // 0 -> SP2 -> Gamma -> A (x) Z2 -> 0
  bool o2_left_injective = false, o2_middle_exact = false, o2_right_surjective = false;
  Coeff sp2_to_gamma_cokernel_order;  // expected 2^rank
  bool all_exact = false;
};

/// Builds the explicit matrices of both short exact sequences and verifies
/// exactness via Smith normal form.
FunctorSequenceReport verify_sequences(const FreeAbelian& a, int max_rank = 6);

}  // namespace peiffer
