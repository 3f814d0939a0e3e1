#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "p1p1/points.hpp"
#include "p1p1/resolve.hpp"

using namespace p1p1;

namespace {

const Field QQ = Field::rationals();

Point pt(long a0, long a1, long b0, long b1) {
  return Point::of(Scalar::from_int(QQ, a0), Scalar::from_int(QQ, a1),
                   Scalar::from_int(QQ, b0), Scalar::from_int(QQ, b1));
}

BettiTable table(std::initializer_list<std::tuple<int, int, int, int>> rows) {
  BettiTable t;
  for (auto [k, r, s, mult] : rows) t.counts[{k, BiDegree{r, s}}] = mult;
  return t;
}

}  // namespace

TEST_CASE("single point resolves by the Koszul complex") {
  Ideal ip = ideal_of_point(pt(1, 2, 1, 3), QQ);
  FreeComplex c = min_free_resolution(ip);
  CHECK(c.length() == 2);
  CHECK(projective_dimension(c) == 2);
  CHECK(depth_from_resolution(c) == 2);
  CHECK(betti(c) == table({{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 1, 1, 1}}));
  CHECK(verify_complex(c));
  CHECK(is_minimal(c));
  CHECK(certify_exactness(c));
}

TEST_CASE("six generic points reproduce the printed resolution") {
  PointSet xs = random_points(6, 20240601, 1000);
  REQUIRE(check_sufficiently_general(xs));
  FreeComplex c = min_free_resolution(ideal_of_points(xs));
  CHECK(c.length() == 3);
  CHECK(depth_from_resolution(c) == 1);
  BettiTable expect = table({// generators
                             {1, 3, 1, 2},
                             {1, 2, 2, 3},
                             {1, 1, 3, 2},
                             {1, 0, 6, 1},
                             {1, 6, 0, 1},
                             // first syzygies
                             {2, 3, 2, 4},
                             {2, 2, 3, 4},
                             {2, 1, 6, 2},
                             {2, 6, 1, 2},
                             // second syzygies
                             {3, 3, 3, 2},
                             {3, 6, 2, 1},
                             {3, 2, 6, 1}});
  CHECK(betti(c) == expect);
  CHECK(betti(c).total_rank(1) == 9);
  CHECK(betti(c).total_rank(2) == 12);
  CHECK(betti(c).total_rank(3) == 4);
  CHECK(verify_complex(c));
  CHECK(is_minimal(c));
  CHECK(certify_exactness(c));
  for (int k = 1; k <= 3; ++k) CHECK(homology_B_torsion(c, k));
}

TEST_CASE("ruling sets are Cohen-Macaulay: length two") {
  PointSet xs = PointSet::of(QQ, {pt(1, 1, 1, 2), pt(1, 1, 1, 3), pt(1, 1, 1, 4)});
  FreeComplex c = min_free_resolution(ideal_of_points(xs));
  CHECK(c.length() == 2);
  CHECK(certify_exactness(c));
}

TEST_CASE("shift monotonicity on every nonzero entry") {
  PointSet xs = random_points(4, 5, 200);
  FreeComplex c = min_free_resolution(ideal_of_points(xs));
  for (int k = 1; k <= c.length(); ++k) {
    const auto& m = c.map_of(k);
    for (int u = 0; u < c.modules[k - 1].rank(); ++u)
      for (int v = 0; v < c.modules[k].rank(); ++v)
        if (!m[u][v].is_zero())
          CHECK(c.modules[k - 1].shifts[u].leq(c.modules[k].shifts[v]));
  }
}

TEST_CASE("verify_complex rejects corrupted entries") {
  Ideal ip = ideal_of_point(pt(1, 1, 1, 1), QQ);
  FreeComplex c = min_free_resolution(ip);
  REQUIRE(verify_complex(c));
  FreeComplex bad = c;
  bad.maps[1][0][0] = bad.maps[1][0][0] + BiPoly::one(QQ);  // wrong degree
  CHECK_FALSE(verify_complex(bad));
  FreeComplex bad2 = c;
  bad2.maps[1][0][0] = BiPoly::parse("y1", QQ);  // right degree, d o d != 0
  CHECK((verify_complex(bad2) == false || !certify_exactness(bad2)));
  // zero complex 0 -> S
  FreeComplex triv;
  triv.field = QQ;
  triv.modules.push_back(FreeBiModule{{BiDegree{0, 0}}});
  CHECK(verify_complex(triv));
}

TEST_CASE("unit ideal is rejected") {
  CHECK_THROWS_WITH_AS(min_free_resolution(Ideal::unit(QQ)), "unit ideal", std::domain_error);
}

TEST_CASE("minimalize cancels unit pivots") {
  // hand-built non-minimal complex with a unit entry
  FreeComplex c;
  c.field = QQ;
  c.modules.push_back(FreeBiModule{{BiDegree{0, 0}, BiDegree{1, 0}}});
  c.modules.push_back(FreeBiModule{{BiDegree{1, 0}, BiDegree{1, 1}}});
  c.maps.push_back({{BiPoly::parse("x0", QQ), BiPoly::parse("x0*y1", QQ)},
                    {BiPoly::one(QQ), BiPoly::parse("y1", QQ)}});
  REQUIRE(verify_complex(c));
  REQUIRE_FALSE(is_minimal(c));
  FreeComplex m = minimalize(c);
  CHECK(verify_complex(m));
  CHECK(is_minimal(m));
  CHECK(m.modules[0].rank() == 1);
  CHECK(m.modules[1].rank() == 1);
  CHECK(m.maps[0][0][0].is_zero());
}

TEST_CASE("homology torsion for a split injective map") {
  // 0 -> S(-1,0) --x0--> S : exact, so H_1 = 0 trivially
  FreeComplex c;
  c.field = QQ;
  c.modules.push_back(FreeBiModule{{BiDegree{0, 0}}});
  c.modules.push_back(FreeBiModule{{BiDegree{1, 0}}});
  c.maps.push_back({{BiPoly::parse("x0", QQ)}});
  REQUIRE(verify_complex(c));
  CHECK(homology_B_torsion(c, 1));
  CHECK_THROWS_AS(homology_B_torsion(c, 2), std::invalid_argument);
}

TEST_CASE("betti text format") {
  Ideal ip = ideal_of_point(pt(1, 1, 1, 1), QQ);
  BettiTable t = betti(min_free_resolution(ip));
  CHECK(t.text() == "1 (0,1) 1\n1 (1,0) 1\n2 (1,1) 1\n");
  CHECK(t.transposed() == t);
}
