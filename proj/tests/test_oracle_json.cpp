#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lps/json_io.hpp"
#include "lps/stabilizer_oracle.hpp"

using namespace lps;

TEST_CASE("stabilizer conductor oracle anchors") {
  // The two cases that any determinant-image reading must separate.
  CHECK(stabilizer_conductor_oracle(0, 0, 0, 2) == 0);
  CHECK(stabilizer_conductor_oracle(2, 1, 0, 2) == 1);
  CHECK(stabilizer_conductor_oracle(0, 0, 0, 3) == 0);
  CHECK(stabilizer_conductor_oracle(2, 1, 0, 3) == 1);
}

TEST_CASE("oracle equals the formula on a small grid") {
  for (int p : {2, 3})
    for (int d = 0; d <= 3; ++d)
      for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
          CHECK(stabilizer_conductor_oracle(d, m, n, p) ==
                conductor({0, 0, 0, d, m, n}));
}

TEST_CASE("matrix JSON round trip with exact rationals") {
  Mat M(3);
  M.at(0, 0) = Q(1, 2);
  M.at(1, 2) = Q(-7, 3);
  M.at(2, 2) = 4;
  json j = mat_to_json(M);
  CHECK(mat_from_json(j, 3) == M);
  CHECK(j[0][0] == "1/2");
  CHECK(j[1][2] == "-7/3");
  CHECK(j[2][2] == "4");
  // Integer entries are accepted too.
  json k = json::parse("[[1,0],[0,1]]");
  CHECK(mat_from_json(k, 2) == Mat::identity(2));
  CHECK_THROWS_AS(mat_from_json(k, 3), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("tuple and polynomial JSON round trips") {
  InvTuple t{1, -2, 3, 0, 4, 5};
  CHECK(inv_from_json(inv_to_json(t)) == t);
  QPoly f = QPoly::q_to(3) - QPoly::constant(2) + QPoly::monomial(5, 1);
  json j = qpoly_to_json(f);
  CHECK(qpoly_from_json(j) == f);
  CHECK(j.contains("1/2"));  // the q^{1/2} term
}

TEST_CASE("InvSum JSON is sorted and skips zeros") {
  InvSum s;
  s[{1, 0, 0, 0, 0, 0}] = QPoly::constant(3);
  s[{0, 0, 0, 0, 0, 0}] = QPoly::constant(1);
  s[{2, 0, 0, 0, 0, 0}] = QPoly{};  // zero: dropped
  json j = invsum_to_json(s);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["inv"][0] == 0);
  CHECK(j[1]["inv"][0] == 1);
}
