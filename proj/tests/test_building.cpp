#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lps/building.hpp"

using namespace lps;
using namespace lps::bldg;

TEST_CASE("lines and planes of F_p^3") {
  for (int p : {2, 3}) {
    CHECK(all_lines(p).size() == size_t(p * p + p + 1));
    CHECK(all_planes(p).size() == size_t(p * p + p + 1));
    CHECK(neighbors(p).size() == size_t(2 * (p * p + p + 1)));
    for (const auto& P : all_planes(p)) CHECK(P.size() == size_t(p + 1));
  }
}

TEST_CASE("hexagon total is q^3") {
  for (int p : {2, 3}) {
    auto hx = hexagons_containing_chamber(ref_l1(), ref_P6(p), p);
    CHECK(hx.size() == size_t(p * p * p));
    // Each hexagon has six distinct vertices: 3 lines + 3 planes.
    for (const auto& h : hx) {
      auto vs = h.vertices(p);
      std::set<Subspace> distinct(vs.begin(), vs.end());
      CHECK(distinct.size() == 6);
    }
  }
}

TEST_CASE("neighbor types partition with the right sizes") {
  for (int p : {2, 3}) {
    std::map<int, int> sizes;
    for (const auto& x : neighbors(p))
      ++sizes[neighbor_type(x, ref_l1(), ref_P6(p), p)];
    CHECK(sizes[1] == 1);
    CHECK(sizes[2] == p);
    CHECK(sizes[3] == p * p);
    CHECK(sizes[4] == p * p);
    CHECK(sizes[5] == p);
    CHECK(sizes[6] == 1);
  }
}

TEST_CASE("hexagons through one vertex, by type") {
  for (int p : {2, 3}) {
    const auto l1 = ref_l1();
    const auto P6 = ref_P6(p);
    long expect[7] = {0, (long)p * p * p, (long)p * p, p, p, (long)p * p,
                      (long)p * p * p};
    for (const auto& x : neighbors(p)) {
      int ty = neighbor_type(x, l1, P6, p);
      CHECK(hexagons_through_neighbor(x, ty, l1, P6, p) == expect[ty]);
    }
  }
}

TEST_CASE("retraction preimage counts {1, q, q^2, q^2, q, 1}") {
  for (int p : {2, 3}) {
    auto counts = retraction_preimage_counts(ref_l1(), ref_P6(p), p);
    long q = p;
    CHECK(counts[1] == 1);
    CHECK(counts[2] == q);
    CHECK(counts[3] == q * q);
    CHECK(counts[4] == q * q);
    CHECK(counts[5] == q);
    CHECK(counts[6] == 1);
  }
}
