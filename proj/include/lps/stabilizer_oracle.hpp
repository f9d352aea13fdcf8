// Brute-force stabilizer-determinant oracle for the local conductor.
//
// For v_{m,n} = (p^{-m}, p^{-n}) in (k0/O) + (k0/p^d O) and the order
// R_d = [[O, O], [p^d O, O]], the determinant image of the stabilizer of
// v_{m,n} in R_d^x is the filtration subgroup 1 + p^c O with
// c = max{0, min{m-n, n+d-m}}. This oracle measures c by enumeration.
//
// The enumeration runs over the unramified quadratic extension
// O' = O[w], w^2 = w + 1 (x^2 - x - 1 is irreducible mod 2 and mod 3).
// Over Q_2 itself the unit group equals 1 + 2*O, so the c = 0 and c = 1
// filtration steps are literally the same set and no determinant-image
// computation can tell them apart; over O' the residue field is large enough
// to separate every level, and the conductor is insensitive to unramified
// base change.
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "lps/invariants.hpp"

namespace lps {

namespace detail {

// Element a + b*w of O'/p^P, with w^2 = w + 1; components mod M = p^P.
struct Ext {
  uint64_t a = 0, b = 0;
  bool operator<(const Ext& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
  bool operator==(const Ext& o) const { return a == o.a && b == o.b; }
};

inline Ext ext_mul(const Ext& u, const Ext& v, uint64_t M) {
  // (a + bw)(c + dw) = ac + bd + (ad + bc + bd) w.
  return Ext{(u.a * v.a + u.b * v.b) % M,
             (u.a * v.b + u.b * v.a + u.b * v.b) % M};
}

// Unit test: the norm a^2 + ab - b^2 must be nonzero mod p.
inline bool ext_unit(const Ext& u, uint64_t p) {
  return (u.a * u.a + u.a * u.b + (p - 1) * ((u.b * u.b) % p)) % p != 0;
}

// All (X, Y) in (O'/p^P)^2 with X p^{-m} + Y p^{-n} in O'.
// Complete solution lattice basis: (p^{max(m-n,0)}, -p^{max(n-m,0)}), (p^m, 0).
inline std::vector<std::pair<Ext, Ext>> solution_set(int m, int n, int p,
                                                     int P) {
  const uint64_t M = static_cast<uint64_t>(pow_z(p, P).get_ui());
  const int e1 = std::min(std::max(m - n, 0), P);
  const int f1 = std::min(std::max(n - m, 0), P);
  const int e2 = std::min(m, P);
  const uint64_t pe1 = pow_z(p, e1).get_ui();
  const uint64_t pf1 = pow_z(p, f1).get_ui();
  const uint64_t pe2 = pow_z(p, e2).get_ui();
  const uint64_t r1 = pow_z(p, std::max(P - std::min(e1, f1), 0)).get_ui();
  const uint64_t r2 = pow_z(p, std::max(P - e2, 0)).get_ui();
  std::set<std::pair<Ext, Ext>> dedup;
  for (uint64_t xa = 0; xa < r1; ++xa)
    for (uint64_t xb = 0; xb < r1; ++xb) {
      const Ext Y{(M - (xa * pf1) % M) % M, (M - (xb * pf1) % M) % M};
      for (uint64_t ya = 0; ya < r2; ++ya)
        for (uint64_t yb = 0; yb < r2; ++yb) {
          const Ext X{(xa * pe1 + ya * pe2) % M, (xb * pe1 + yb * pe2) % M};
          dedup.emplace(X, Y);
        }
    }
  return {dedup.begin(), dedup.end()};
}

// True iff the stabilizer determinant image equals the set of units
// congruent to 1 mod p^c, compared exactly in O'/p^{c+1}.
inline bool level_matches(int d, int m, int n, int p, int c) {
  const int P = c + 1;
  const uint64_t M = pow_z(p, P).get_ui();
  const uint64_t pc = pow_z(p, c).get_ui();
  const uint64_t pd = pow_z(p, std::min(d, P)).get_ui();
  // Target: units of O'/p^P congruent to 1 mod p^c, as a membership table.
  std::vector<char> in_target(M * M, 0);
  size_t target_size = 0;
  for (uint64_t a = 0; a < M; ++a)
    for (uint64_t b = 0; b < M; ++b) {
      Ext u{a, b};
      if (!ext_unit(u, static_cast<uint64_t>(p))) continue;
      if ((a + M - 1) % pc == 0 && b % pc == 0) {
        in_target[a * M + b] = 1;
        ++target_size;
      }
    }
  const auto S1 = solution_set(m, n, p, P);      // (alpha - 1, beta)
  const auto S2 = solution_set(m, n + d, p, P);  // (gamma0, delta - 1)
  std::vector<char> seen(M * M, 0);
  size_t seen_count = 0;
  for (const auto& [A, B] : S1) {
    const Ext alpha{(A.a + 1) % M, A.b};
    for (const auto& [G, D] : S2) {
      const Ext delta{(D.a + 1) % M, D.b};
      Ext prod = ext_mul(alpha, delta, M);
      Ext cross = ext_mul(B, G, M);
      Ext dt{(prod.a + M * pd - (cross.a * pd) % M) % M,
             (prod.b + M * pd - (cross.b * pd) % M) % M};
      if (!ext_unit(dt, static_cast<uint64_t>(p))) continue;
      const uint64_t key = dt.a * M + dt.b;
      if (!in_target[key]) return false;  // image escapes the target: reject
      if (!seen[key]) {
        seen[key] = 1;
        ++seen_count;
      }
      // No early accept: covering the target does not bound the image;
      // the scan must complete to certify image == target.
    }
  }
  return seen_count == target_size;
}

}  // namespace detail

// Largest c such that the determinant image of Stab_{R_d^x}(v_{m,n}) equals
// 1 + p^c O' (c = 0 meaning all units). Works at precision N = m+n+d+2,
// which comfortably exceeds every level actually compared (c <= d/2 + 1).
inline int stabilizer_conductor_oracle(int d, int m, int n, int p) {
  if (d < 0 || m < 0 || n < 0)
    throw std::invalid_argument("stabilizer_conductor_oracle: negative input");
  if (p != 2 && p != 3)
    throw std::invalid_argument(
        "stabilizer_conductor_oracle: only p in {2,3} supported");
  const int N = m + n + d + 2;
  const int cmax = std::min(d / 2 + 1, N - 1);
  int best = -1;
  for (int c = 0; c <= cmax; ++c) {
    if (detail::level_matches(d, m, n, p, c))
      best = c;
    else if (best >= 0)
      break;
  }
  if (best < 0)
    throw std::runtime_error(
        "stabilizer_conductor_oracle: image is not a filtration subgroup");
  return best;
}

}  // namespace lps
