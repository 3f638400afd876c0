#include <doctest.h>

#include "peiffer/functors.hpp"

using namespace peiffer;

TEST_CASE("smith normal form") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 6;
  SmithResult snf = smith_normal_form(m);
  CHECK(snf.rank == 2);
  CHECK(snf.diag == std::vector<Coeff>{2, 6});

  IntMatrix n(2, 3);
  n.at(0, 0) = 1;
  n.at(0, 1) = 2;
  n.at(1, 2) = 3;
  SmithResult s2 = smith_normal_form(n);
  CHECK(s2.rank == 2);
  CHECK(s2.diag[0] == 1);

  // d = u m v must hold
  IntMatrix left = matmul(matmul(s2.u, n), s2.v);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) CHECK(left.at(i, j) == s2.d.at(i, j));
}

TEST_CASE("lattice membership") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 3;
  SmithResult snf = smith_normal_form(m);
  CHECK(lattice_contains(snf, {2, 0}));
  CHECK(lattice_contains(snf, {4, 3}));
  CHECK_FALSE(lattice_contains(snf, {1, 0}));
  CHECK_FALSE(lattice_contains(snf, {0, 1}));
}

TEST_CASE("functor values") {
  FreeAbelian a2 = FreeAbelian::of_rank(2);
  CHECK(functor_data(QuadraticFunctor::SP2, a2).rank == 3);
  CHECK(functor_data(QuadraticFunctor::GammaW, a2).rank == 3);
  CHECK(functor_data(QuadraticFunctor::P2, a2).rank == 5);
  FunctorData t2 = functor_data(QuadraticFunctor::TensorZ2, a2);
  CHECK(t2.rank == 2);
  CHECK(t2.exponent == 2);

  FreeAbelian a1 = FreeAbelian::of_rank(1);
  CHECK(functor_data(QuadraticFunctor::GammaW, a1).rank == 1);
  CHECK(functor_data(QuadraticFunctor::SP2, FreeAbelian::of_rank(0)).rank == 0);
}

TEST_CASE("short exact sequences for ranks 0 through 6") {
  for (int r = 0; r <= 6; ++r) {
    FunctorSequenceReport rep = verify_sequences(FreeAbelian::of_rank(r));
    CHECK(rep.all_exact);
    CHECK(rep.sp2_rank == r * (r + 1) / 2);
    CHECK(rep.gamma_rank == r * (r + 1) / 2);
    CHECK(rep.p2_rank == r + r * (r + 1) / 2);
    Coeff expected = 1;
    for (int i = 0; i < r; ++i) expected *= 2;
    CHECK(rep.sp2_to_gamma_cokernel_order == expected);
  }
  CHECK_THROWS_AS(verify_sequences(FreeAbelian::of_rank(7)), Error);
}
