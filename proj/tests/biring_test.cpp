#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p1p1/bipoly.hpp"

using namespace p1p1;

namespace {

const Field QQ = Field::rationals();

BiPoly P(const char* s) { return BiPoly::parse(s, QQ); }

Monomial random_monomial(std::mt19937_64& rng, bool with_t = false) {
  Monomial m;
  for (int v = 0; v < 4; ++v) m.e[v] = (int)(rng() % 5);
  if (with_t) m.e[Monomial::kT] = (int)(rng() % 3);
  return m;
}

}  // namespace

TEST_CASE("bidegree of monomials and polynomials") {
  CHECK(P("x0*y1^3").bidegree() == BiDegree{1, 3});
  // the point-ideal generator a1*x0 - a0*x1 with a = [1:2]
  CHECK(P("2*x0-x1").bidegree() == BiDegree{1, 0});
  CHECK_FALSE(P("x0+y0").bidegree().has_value());
  CHECK_THROWS_WITH_AS(P("0").bidegree(), "zero polynomial has no degree", std::domain_error);
}

TEST_CASE("graded piece basis has dimension (i+1)(j+1)") {
  CHECK(graded_piece_basis({0, 0}).size() == 1);
  CHECK(graded_piece_basis({0, 0})[0].is_one());
  CHECK(graded_piece_basis({2, 2}).size() == 9);
  CHECK(graded_piece_basis({1, 3}).size() == 8);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) {
      auto basis = graded_piece_basis({i, j});
      CHECK((int)basis.size() == (i + 1) * (j + 1));
      for (const auto& m : basis) CHECK(m.bidegree() == BiDegree{i, j});
      // strictly decreasing in the printing order
      for (size_t k = 1; k < basis.size(); ++k)
        CHECK(mono_cmp(basis[k - 1], basis[k], MonomialOrder::DegRevLex) > 0);
    }
}

TEST_CASE("ring arithmetic") {
  CHECK((P("x0") * P("y0")).bidegree() == BiDegree{1, 1});
  BiPoly f = P("3*x0^2*y0-x1^2*y1");
  CHECK((f + (-f)).is_zero());
  BiPoly prod = P("2*x0-x1") * P("3*y0-y1");
  CHECK(prod == P("6*x0*y0-2*x0*y1-3*x1*y0+x1*y1"));
  CHECK(prod.bidegree() == BiDegree{1, 1});
  CHECK_THROWS_AS(P("x0") + BiPoly::parse("x0", Field::prime(5)), std::invalid_argument);
}

TEST_CASE("bidegree is additive on products") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 100; ++it) {
    Monomial a = random_monomial(rng), b = random_monomial(rng);
    BiPoly f = BiPoly::term(a, Scalar::from_int(QQ, 2));
    BiPoly g = BiPoly::term(b, Scalar::from_int(QQ, 3));
    CHECK(*(f * g).bidegree() == *f.bidegree() + *g.bidegree());
  }
}

TEST_CASE("monomial order axioms") {
  std::mt19937_64 rng(11);
  for (MonomialOrder ord : {MonomialOrder::DegRevLex, MonomialOrder::ElimT}) {
    for (int it = 0; it < 300; ++it) {
      Monomial a = random_monomial(rng, true), b = random_monomial(rng, true),
               c = random_monomial(rng, true);
      // totality / antisymmetry
      int ab = mono_cmp(a, b, ord);
      CHECK(mono_cmp(b, a, ord) == -ab);
      CHECK((ab == 0) == (a == b));
      // 1 is minimal
      if (!a.is_one()) CHECK(mono_cmp(a, Monomial::one(), ord) > 0);
      // multiplicativity
      if (ab != 0) CHECK(mono_cmp(a * c, b * c, ord) == ab);
      // transitivity spot check
      if (ab > 0 && mono_cmp(b, c, ord) > 0) CHECK(mono_cmp(a, c, ord) > 0);
    }
  }
}

TEST_CASE("elimination order puts t first") {
  Monomial t = Monomial::var(Monomial::kT);
  Monomial big;
  for (int v = 0; v < 4; ++v) big.e[v] = 50;
  CHECK(mono_cmp(t, big, MonomialOrder::ElimT) > 0);
  CHECK(mono_cmp(t, big, MonomialOrder::DegRevLex) < 0);
}

TEST_CASE("parse/print round trip") {
  const char* example =
      "288*x0^2*y0^2-600*x0^2*y0*y1+41*x1^2*y0*y1+420*x0^2*y1^2-161*x0*x1*y1^2+12*x1^2*y1^2";
  BiPoly f = P(example);
  CHECK(f.str() == example);
  CHECK(BiPoly::parse(f.str(), QQ) == f);
  CHECK(P("x0 * x0") == P("x0^2"));
  CHECK(P("-x0+ x1 -1/2*y0*y1").str() == "-1/2*y0*y1-x0+x1");
  CHECK(P("0").is_zero());
  CHECK(P("5-5").is_zero());
  CHECK_THROWS_AS(P("x2"), std::invalid_argument);
  CHECK_THROWS_AS(P("x0++x1"), std::invalid_argument);

  std::mt19937_64 rng(23);
  for (int it = 0; it < 100; ++it) {
    std::vector<BiPoly::Term> ts;
    int n = 1 + (int)(rng() % 6);
    for (int k = 0; k < n; ++k)
      ts.push_back({random_monomial(rng),
                    Scalar::rational((long)(rng() % 19) - 9, (long)(rng() % 9) + 1)});
    BiPoly f2 = BiPoly::from_terms(QQ, ts);
    CHECK(BiPoly::parse(f2.str(), QQ) == f2);
  }
}

TEST_CASE("xy swap is an involution matching the factor swap") {
  BiPoly f = P("2*x0^2*y1-x0*x1*y0+7*y0*y1");
  CHECK(f.xy_swapped().xy_swapped() == f);
  CHECK(f.xy_swapped() == P("2*y0^2*x1-y0*y1*x0+7*x0*x1"));
}
