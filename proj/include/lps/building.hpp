// Finite combinatorics of the neighborhood of a hyperspecial vertex in the
// rank-2 building: lines and planes of F_p^3, hexagons (framings), and
// retraction preimage counts.
#pragma once

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "lps/dvr.hpp"

namespace lps {

namespace bldg {

using Vec3 = std::array<int, 3>;  // entries in {0..p-1}

// Canonical representative of the line through v: first nonzero coord = 1.
inline Vec3 line_rep(Vec3 v, int p) {
  int lead = -1;
  for (int i = 0; i < 3 && lead < 0; ++i)
    if (v[i] % p != 0) lead = i;
  if (lead < 0) throw std::invalid_argument("line_rep: zero vector");
  // Scale by the inverse of the leading coordinate.
  int inv = 1;
  for (int c = 1; c < p; ++c)
    if ((v[lead] * c) % p == 1) inv = c;
  return {(v[0] * inv) % p, (v[1] * inv) % p, (v[2] * inv) % p};
}

inline std::vector<Vec3> all_lines(int p) {
  std::set<Vec3> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        if (a || b || c) out.insert(line_rep({a, b, c}, p));
  return {out.begin(), out.end()};
}

// A plane is stored as the sorted set of (reps of) lines it contains.
using Plane = std::set<Vec3>;

inline Plane span2(const Vec3& u, const Vec3& v, int p) {
  Plane out;
  for (int s = 0; s < p; ++s)
    for (int t = 0; t < p; ++t) {
      if (s == 0 && t == 0) continue;
      Vec3 w{(s * u[0] + t * v[0]) % p, (s * u[1] + t * v[1]) % p,
             (s * u[2] + t * v[2]) % p};
      if (w[0] || w[1] || w[2]) out.insert(line_rep(w, p));
    }
  if (out.size() != static_cast<size_t>(p + 1))
    throw std::invalid_argument("span2: vectors not independent");
  return out;
}

inline std::vector<Plane> all_planes(int p) {
  std::set<Plane> out;
  auto L = all_lines(p);
  for (size_t i = 0; i < L.size(); ++i)
    for (size_t j = i + 1; j < L.size(); ++j) {
      // Skip dependent pairs (distinct line reps are independent).
      out.insert(span2(L[i], L[j], p));
    }
  return {out.begin(), out.end()};
}

// A neighbor of the base vertex: a line (dim 1) or a plane (dim 2).
struct Subspace {
  int dimension = 1;
  Vec3 line{};   // valid when dimension == 1
  Plane plane;   // valid when dimension == 2
  bool operator<(const Subspace& o) const {
    if (dimension != o.dimension) return dimension < o.dimension;
    if (dimension == 1) return line < o.line;
    return plane < o.plane;
  }
  bool operator==(const Subspace& o) const {
    return dimension == o.dimension &&
           (dimension == 1 ? line == o.line : plane == o.plane);
  }
};

inline std::vector<Subspace> neighbors(int p) {
  std::vector<Subspace> out;
  for (const auto& l : all_lines(p)) out.push_back({1, l, {}});
  for (const auto& P : all_planes(p)) out.push_back({2, {}, P});
  return out;
}

// A hexagon = framing {L1, L3, L5}; stored with the role ordering fixed by
// the reference chamber (L1 = l1, L1 + L5 = P6, L3 outside P6).
struct Hexagon {
  Vec3 L1, L3, L5;
  // The six vertices: three lines and the three pairwise spans.
  std::vector<Subspace> vertices(int p) const {
    return {{1, L1, {}},
            {1, L3, {}},
            {1, L5, {}},
            {2, {}, span2(L1, L3, p)},
            {2, {}, span2(L3, L5, p)},
            {2, {}, span2(L5, L1, p)}};
  }
};

inline Vec3 ref_l1() { return {1, 0, 0}; }
inline Plane ref_P6(int p) { return span2({1, 0, 0}, {0, 1, 0}, p); }

// All framings with L1 = l1 and L1 + L5 = P6. Count p^3.
inline std::vector<Hexagon> hexagons_containing_chamber(const Vec3& l1,
                                                        const Plane& P6,
                                                        int p) {
  if (!P6.count(line_rep(l1, p)))
    throw std::invalid_argument("hexagons_containing_chamber: l1 not in P6");
  std::vector<Hexagon> out;
  for (const auto& L5 : all_lines(p)) {
    if (!(P6.count(L5)) || L5 == line_rep(l1, p)) continue;
    for (const auto& L3 : all_lines(p)) {
      if (P6.count(L3)) continue;
      out.push_back({line_rep(l1, p), L3, L5});
    }
  }
  return out;
}

// Type of a neighbor relative to the reference chamber:
//   1: the line l1                 6: the plane P6
//   2: a plane containing l1, != P6    5: a line in P6, != l1
//   3: a line outside P6           4: a plane not containing l1
inline int neighbor_type(const Subspace& x, const Vec3& l1, const Plane& P6,
                         int p) {
  const Vec3 l1r = line_rep(l1, p);
  if (x.dimension == 1) {
    if (x.line == l1r) return 1;
    return P6.count(x.line) ? 5 : 3;
  }
  if (x.plane == P6) return 6;
  return x.plane.count(l1r) ? 2 : 4;
}

// Number of hexagons (through the reference chamber) containing a neighbor.
inline long hexagons_through_neighbor(const Subspace& x, int type,
                                      const Vec3& l1, const Plane& P6,
                                      int p) {
  if (neighbor_type(x, l1, P6, p) != type)
    throw std::invalid_argument("hexagons_through_neighbor: type mismatch");
  long count = 0;
  for (const auto& h : hexagons_containing_chamber(l1, P6, p))
    for (const auto& v : h.vertices(p))
      if (v == x) {
        ++count;
        break;
      }
  return count;
}

// Per-type retraction preimage counts via the quotient argument:
// (#hexagons through one point of type i) divides the total; the quotient is
// the number of points of that type, i.e. the preimage count of the
// corresponding reference vertex. Expected {1, q, q^2, q^2, q, 1}.
inline std::map<int, long> retraction_preimage_counts(const Vec3& l1,
                                                      const Plane& P6,
                                                      int p) {
  auto hexes = hexagons_containing_chamber(l1, P6, p);
  std::map<Subspace, long> through;
  for (const auto& h : hexes)
    for (const auto& v : h.vertices(p)) ++through[v];
  std::map<int, long> per_type_through;  // hexagons through one point
  std::map<int, long> per_type_points;
  for (const auto& [x, cnt] : through) {
    int ty = neighbor_type(x, l1, P6, p);
    auto it = per_type_through.find(ty);
    if (it == per_type_through.end())
      per_type_through[ty] = cnt;
    else if (it->second != cnt)
      throw std::logic_error("retraction_preimage_counts: non-uniform type");
    ++per_type_points[ty];
  }
  std::map<int, long> out;
  for (const auto& [ty, cnt] : per_type_through) {
    if (static_cast<long>(hexes.size()) % cnt != 0)
      throw std::logic_error("retraction_preimage_counts: quotient fails");
    out[ty] = static_cast<long>(hexes.size()) / cnt;
    // The quotient equals the observed number of points of this type.
    if (out[ty] != per_type_points[ty])
      throw std::logic_error("retraction_preimage_counts: count mismatch");
  }
  return out;
}

}  // namespace bldg

}  // namespace lps
