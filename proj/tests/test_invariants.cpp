#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lps/invariants.hpp"

using namespace lps;

TEST_CASE("canonicalize collapses boundary (m,n)") {
  // d = 0: the Weyl swap merges (m,n) and (n,m); normal form (max,0).
  CHECK(canonicalize({0, 0, 0, 0, 1, 2}) == InvTuple{0, 0, 0, 0, 2, 0});
  CHECK(canonicalize({0, 0, 0, 0, 2, 0}) == InvTuple{0, 0, 0, 0, 2, 0});
  // d > 0, n <= m: collapse to (m, 0).
  CHECK(canonicalize({0, 0, 0, 2, 2, 1}) == InvTuple{0, 0, 0, 2, 2, 0});
  // d > 0, n >= m + d: collapse to (0, n).
  CHECK(canonicalize({0, 0, 0, 2, 1, 3}) == InvTuple{0, 0, 0, 2, 0, 3});
  // Interior m < n < m + d: kept.
  CHECK(canonicalize({0, 0, 0, 2, 1, 2}) == InvTuple{0, 0, 0, 2, 1, 2});
  // Idempotence.
  for (int d = 0; d <= 3; ++d)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        InvTuple c = canonicalize({1, -1, 2, d, m, n});
        CHECK(canonicalize(c) == c);
        CHECK(is_canonical(c));
      }
}

TEST_CASE("canonical classes with d,m,n <= 3") {
  // Per d: d=0 gives (m,0) only (4); d=1 gives 4+0+3; d=2 gives 4+3+2;
  // d=3 gives 4+5+1 — 30 classes in total.
  std::map<int, std::set<InvTuple>> classes;
  for (int d = 0; d <= 3; ++d)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n)
        classes[d].insert(canonicalize({0, 0, 0, d, m, n}));
  CHECK(classes[0].size() == 4);
  CHECK(classes[1].size() == 7);
  CHECK(classes[2].size() == 9);
  CHECK(classes[3].size() == 10);
}

TEST_CASE("conductor formula and anchors") {
  CHECK(conductor({0, 0, 0, 0, 0, 0}) == 0);
  CHECK(conductor({0, 0, -1, 2, 1, 0}) == 1);
  CHECK(conductor({5, -2, 7, 5, 3, 1}) == 2);
  // c is independent of k, s, r and bounded by floor(d/2).
  for (int d = 0; d <= 4; ++d)
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        int c = conductor({9, -9, 9, d, m, n});
        CHECK(c == conductor({0, 0, 0, d, m, n}));
        CHECK(c >= 0);
        CHECK(c <= d / 2);
      }
}

TEST_CASE("identity pair has trivial invariants") {
  for (int p : {2, 3, 5})
    CHECK(invariants(Mat::identity(3), Mat::identity(2), p) ==
          InvTuple{0, 0, 0, 0, 0, 0});
}

TEST_CASE("round-trip invariants(canonical_rep(t)) == t") {
  for (int p : {2, 3})
    for (int k = -2; k <= 2; ++k)
      for (int s = -1; s <= 1; ++s)
        for (int r = -1; r <= 1; ++r)
          for (int d = 0; d <= 3; ++d)
            for (int m = 0; m <= 3; ++m)
              for (int n = 0; n <= 3; ++n) {
                InvTuple t{k, s, r, d, m, n};
                if (!is_canonical(t)) continue;
                auto [M, N] = canonical_rep(t, p);
                CHECK(invariants(M, N, p) == t);
              }
}

TEST_CASE("invariants constant on H0-orbits") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int p : {2, 3}) {
    int done = 0;
    while (done < 40) {
      Mat h(2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) h.at(i, j) = entry(rng);
      if (det(h) == 0 || valuation(det(h), p) != 0) continue;
      Mat h3 = Mat::identity(3);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) h3.at(i, j) = h.at(i, j);
      InvTuple t{1, -1, 0, 2, 1, 2};
      auto [M, N] = canonical_rep(t, p);
      CHECK(invariants(mul(h3, M), mul(h, N), p) == t);
      ++done;
    }
  }
}

TEST_CASE("the mirrored normal form is forced by orbit invariance") {
  // The representative built from the raw label (0,0,0,2,2,1) lies in the
  // same orbit as the one labeled (0,0,0,2,2,0): its invariants come out as
  // (..,2,0). Both raw labels must therefore canonicalize identically, which
  // the mirrored rules do. See typo ledger: orbit-normal-form-mirrored.
  const int p = 2;
  // b_nu for the non-canonical raw tuple (k,s,r,d,m,n) = (0,0,0,2,2,1):
  // V = [[1,0,p^-2],[0,1,p^-1],[0,0,1]], W = diag(p^2, 1).
  Mat V = Mat::identity(3);
  V.at(0, 2) = Q(1, p * p);
  V.at(1, 2) = Q(1, p);
  Mat W = Mat::identity(2);
  W.at(0, 0) = p * p;
  CHECK(invariants(V, W, p) == InvTuple{0, 0, 0, 2, 2, 0});
  CHECK(canonicalize({0, 0, 0, 2, 2, 1}) == canonicalize({0, 0, 0, 2, 2, 0}));
}

TEST_CASE("delta shift and singular input") {
  for (int p : {2, 3}) {
    InvTuple t{0, 1, -1, 2, 1, 2};
    auto [M, N] = canonical_rep(t, p);
    Mat dV = Mat::identity(3);
    dV.at(0, 0) = p;
    Mat dW = Mat::identity(2);
    dW.at(0, 0) = p;
    InvTuple want = t;
    want.k += 1;
    CHECK(invariants(mul(dV, M), mul(dW, N), p) == want);
  }
  Mat S = Mat::identity(3);
  S.at(2, 2) = 0;
  CHECK_THROWS_AS(invariants(S, Mat::identity(2), 2),
                  singular_matrix_error);
}
