#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lps/action.hpp"

using namespace lps;

namespace {
InvCount eval_sum(const InvSum& s, int q) {
  InvCount out;
  for (const auto& [t, c] : s) {
    mpq_class v = c.eval(q);
    REQUIRE(v.get_den() == 1);
    if (v != 0) out[t] = v.get_num();
  }
  return out;
}
}  // namespace

TEST_CASE("coset counts match generator degrees") {
  for (int p : {2, 3}) {
    CHECK(coset_reps(Gen::g1, p).size() == size_t(p * p + p + 1));
    CHECK(coset_reps(Gen::g2, p).size() == size_t(p * p + p + 1));
    CHECK(coset_reps(Gen::g3, p).size() == 1);
    CHECK(coset_reps(Gen::h1, p).size() == size_t(p + 1));
    CHECK(coset_reps(Gen::h2, p).size() == 1);
  }
}

TEST_CASE("central generators act by pure shifts") {
  InvTuple t{0, 0, 0, 0, 0, 0};
  InvSum a = act_generator(Gen::g3, t);
  REQUIRE(a.size() == 1);
  CHECK(a.begin()->first == InvTuple{0, 1, 0, 0, 0, 0});
  CHECK(a.begin()->second == QPoly::constant(1));
  InvSum b = act_generator(Gen::h2, t);
  REQUIRE(b.size() == 1);
  CHECK(b.begin()->first == InvTuple{0, 0, 1, 0, 0, 0});
  CHECK(b.begin()->second == QPoly::constant(1));
}

TEST_CASE("t_g1 on the base class: mass 7 at q=2, oracle match") {
  InvTuple t{0, 0, 0, 0, 0, 0};
  InvSum sym = act_generator(Gen::g1, t);
  InvCount orc = oracle_act(Gen::g1, t, 2);
  mpz_class mass = 0;
  for (const auto& [u, c] : orc) mass += c;
  CHECK(mass == 7);
  CHECK(eval_sum(sym, 2) == orc);
}

TEST_CASE("symbolic action equals the oracle at q = p") {
  for (int p : {2, 3})
    for (Gen g : {Gen::g1, Gen::g2, Gen::g3, Gen::h1, Gen::h2})
      for (int d = 0; d <= 2; ++d)
        for (int m = 0; m <= 2; ++m)
          for (int n = 0; n <= 2; ++n) {
            InvTuple t{0, 0, 0, d, m, n};
            if (!is_canonical(t)) continue;
            CHECK(eval_sum(act_generator(g, t), p) == oracle_act(g, t, p));
          }
}

TEST_CASE("action is equivariant under (k,s,r) shifts") {
  for (Gen g : {Gen::g1, Gen::g2, Gen::h1}) {
    InvSum base = act_generator(g, {0, 0, 0, 2, 1, 2});
    InvSum shifted = act_generator(g, {1, -1, 2, 2, 1, 2});
    InvSum expect;
    for (const auto& [u, c] : base) {
      InvTuple v = u;
      v.k += 1;
      v.s += -1;
      v.r += 2;
      expect[v] = c;
    }
    CHECK(shifted == expect);
  }
}

TEST_CASE("non-canonical input is rejected with the canonicalization") {
  CHECK_THROWS_WITH_AS(act_generator(Gen::g1, {0, 0, 0, 0, 1, 2}),
                       doctest::Contains("(0,0,0,0,2,0)"),
                       std::invalid_argument);
}

TEST_CASE("Frobenius acts by k -> k-1") {
  CHECK(act_frobenius({0, 0, 0, 1, 0, 1}) == InvTuple{-1, 0, 0, 1, 0, 1});
  // Matches the coset action of (diag(p^-1,1,1), diag(p^-1,1)).
  for (int p : {2, 3}) {
    InvTuple t{1, -1, 0, 2, 1, 2};
    auto [M, N] = canonical_rep(t, p);
    Mat fV = Mat::identity(3);
    fV.at(0, 0) = Q(1, p);
    Mat fW = Mat::identity(2);
    fW.at(0, 0) = Q(1, p);
    CHECK(invariants(mul(fV, M), mul(fW, N), p) == act_frobenius(t));
  }
}

TEST_CASE("distribution relation properties") {
  const InvTuple nu0{0, 0, 0, 0, 0, 0};
  InvSum rel = distribution_relation(nu0);
  int nonzero = 0, cond1 = 0;
  for (const auto& [t, c] : rel) {
    if (c.is_zero()) continue;
    ++nonzero;
    CHECK(c.integer_exponents());
    CHECK(c.divisible_by_q_minus_1());
    int cd = conductor(t);
    CHECK(cd >= 0);
    CHECK(cd <= 1);
    if (cd == 1) {
      ++cond1;
      CHECK(t == InvTuple{0, -2, -4, 2, 1, 0});
    }
    // Determinant-valuation constraints on the support.
    CHECK(3 * t.s + t.k == -6);
    CHECK(t.k + t.d + 2 * t.r == -6);
  }
  CHECK(nonzero == 15);
  CHECK(cond1 == 1);
  // Pure enumeration recomputation at q = 2 and 3.
  for (int p : {2, 3}) {
    InvCount orc = distribution_relation_oracle(nu0, p);
    InvCount ev;
    for (const auto& [t, c] : rel) {
      mpq_class v = c.eval(p);
      REQUIRE(v.get_den() == 1);
      if (v != 0) ev[t] = v.get_num();
    }
    CHECK(ev == orc);
  }
}

TEST_CASE("distribution relation rejects conductor > 0 bases") {
  CHECK_THROWS_AS(distribution_relation({0, 0, -1, 2, 1, 0}),
                  std::invalid_argument);
}
