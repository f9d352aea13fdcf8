#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lps/dvr.hpp"

using namespace lps;

TEST_CASE("valuation of rationals") {
  CHECK(valuation(Q(8), 2) == 3);
  CHECK(valuation(Q(1, 4), 2) == -2);
  CHECK(valuation(Q(9, 5), 3) == 2);
  CHECK(valuation(Q(3, 2), 2) == -1);
  CHECK(valuation(Q(0), 2) == VAL_INF);
  CHECK(valuation(Q(7), 2) == 0);
}

TEST_CASE("determinant and inverse") {
  Mat A(3);
  A.at(0, 0) = 2; A.at(0, 1) = 1; A.at(0, 2) = 0;
  A.at(1, 0) = 0; A.at(1, 1) = 1; A.at(1, 2) = Q(1, 2);
  A.at(2, 0) = 0; A.at(2, 1) = 0; A.at(2, 2) = 3;
  CHECK(det(A) == Q(6));
  Mat Ai = inverse(A);
  CHECK(mul(A, Ai) == Mat::identity(3));

  Mat S(2);
  S.at(0, 0) = 1; S.at(0, 1) = 2;
  S.at(1, 0) = 2; S.at(1, 1) = 4;
  CHECK(det(S) == 0);
  CHECK_THROWS_AS(inverse(S), singular_matrix_error);
}

TEST_CASE("lattice equality is basis-independent") {
  Mat A = Mat::identity(2);
  Mat U(2);  // unimodular change of basis
  U.at(0, 0) = 1; U.at(0, 1) = 3;
  U.at(1, 0) = 2; U.at(1, 1) = 7;
  CHECK(lattice_equal(A, mul(A, U), 2));
  Mat B = Mat::identity(2);
  B.at(0, 0) = 2;
  CHECK_FALSE(lattice_equal(A, B, 2));
  // Scaling by a p-adic unit preserves the lattice.
  Mat C = A;
  C.at(0, 0) = Q(3);
  C.at(1, 1) = Q(3);
  CHECK(lattice_equal(A, C, 2));
  CHECK_FALSE(lattice_equal(A, C, 3));
}

TEST_CASE("column reduction preserves the lattice") {
  Mat A(3);
  A.at(0, 0) = 4; A.at(0, 1) = 2; A.at(0, 2) = 1;
  A.at(1, 0) = 2; A.at(1, 1) = 6; A.at(1, 2) = 0;
  A.at(2, 0) = 8; A.at(2, 1) = 4; A.at(2, 2) = 5;
  Mat R = column_reduce_upper(A, 2);
  CHECK(lattice_equal(A, R, 2));
  // Upper triangular.
  for (int i = 1; i < 3; ++i)
    for (int j = 0; j < i; ++j) CHECK(R.at(i, j) == 0);
}

TEST_CASE("2x2 Cartan decomposition") {
  Mat N(2);
  N.at(0, 0) = Q(1, 2); N.at(0, 1) = 3;
  N.at(1, 0) = 5; N.at(1, 1) = Q(1, 4);
  for (int p : {2, 3}) {
    Cartan c = cartan2(N, p);
    // k1 * t * k2 == N.
    CHECK(mul(mul(c.k1, c.t), c.k2) == N);
    // k1, k2 are units of GL2(O).
    CHECK(valuation(det(c.k1), p) == 0);
    CHECK(valuation(det(c.k2), p) == 0);
    for (const Mat* K : {&c.k1, &c.k2})
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          CHECK(valuation(K->at(i, j), p) >= 0);
    // t diagonal with v(t11) >= v(t22).
    CHECK(c.t.at(0, 1) == 0);
    CHECK(c.t.at(1, 0) == 0);
    CHECK(valuation(c.t.at(0, 0), p) >= valuation(c.t.at(1, 1), p));
  }
}

TEST_CASE("relative position of lattices") {
  Mat A = Mat::identity(2);
  Mat B = Mat::identity(2);
  B.at(0, 0) = 4;  // p^2 Z + Z e2 inside Z^2 at p=2
  auto pos = relative_position(A, B, 2);
  CHECK(pos == std::vector<int>{2, 0});
  // Invariant under change of basis on either side.
  Mat U(2);
  U.at(0, 0) = 1; U.at(0, 1) = 1;
  U.at(1, 0) = 0; U.at(1, 1) = 1;
  CHECK(relative_position(mul(A, U), B, 2) == pos);
  CHECK(relative_position(A, mul(B, U), 2) == pos);
}
