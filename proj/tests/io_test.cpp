#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "p1p1/io.hpp"

using namespace p1p1;

namespace {
const Field QQ = Field::rationals();
}

TEST_CASE("point sets round-trip through JSON") {
  PointSet xs = random_points(5, 77, 500);
  std::string text = points_to_json(xs);
  PointSet back = points_from_json(text);
  CHECK(back.field == xs.field);
  REQUIRE(back.size() == xs.size());
  for (int k = 0; k < xs.size(); ++k) CHECK(back.points[k] == xs.points[k]);
  CHECK(points_to_json(back) == text);
}

TEST_CASE("point files accept rational strings and prime fields") {
  PointSet xs = points_from_json(
      R"({"field":"QQ","points":[[["1","2"],["3/2","1"]],[["0","1"],["1","0"]]]})");
  CHECK(xs.size() == 2);
  CHECK(xs.field.is_rationals());
  PointSet fp = points_from_json(R"({"field":{"Fp":32003},"points":[[["1","2"],["3","1"]]]})");
  CHECK(fp.field.modulus() == 32003);
  CHECK_THROWS_AS(points_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(points_from_json(R"({"points":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(points_from_json(R"({"field":"ZZ","points":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(points_from_json(R"({"field":"QQ","points":[[["1"],["1","0"]]]})"),
                  std::invalid_argument);
}

TEST_CASE("complexes round-trip through JSON") {
  PointSet xs = random_points(3, 5, 100);
  Ideal ix = ideal_of_points(xs);
  FreeComplex c = min_free_resolution(ix);
  VirtualCert cert = is_virtual(c, ix);
  std::string text = complex_to_json(c, &cert);
  FreeComplex back = complex_from_json(text);
  CHECK(back.length() == c.length());
  CHECK(verify_complex(back));
  CHECK(BettiTable::of(back) == BettiTable::of(c));
  for (int k = 1; k <= c.length(); ++k) {
    const auto& a = c.map_of(k);
    const auto& b = back.map_of(k);
    for (std::size_t u = 0; u < a.size(); ++u)
      for (std::size_t v = 0; v < a[u].size(); ++v) CHECK(a[u][v] == b[u][v]);
  }
  // the embedded certificate re-verifies against the same target
  VirtualCert again = is_virtual(back, ix);
  CHECK(again.overall == cert.overall);
}

TEST_CASE("malformed complex files are rejected with useful messages") {
  CHECK_THROWS_AS(complex_from_json(R"({"maps":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json(R"({"modules":[[[0,0]]],"maps":[[["x0"]]]})"),
                  std::invalid_argument);  // maps/modules length mismatch
  CHECK_THROWS_AS(
      complex_from_json(R"({"modules":[[[0,0]],[[1,0]]],"maps":[[["x0"],["x1"]]]})"),
      std::invalid_argument);  // row count mismatch
}

TEST_CASE("certificate serialization") {
  VirtualCert cert;
  cert.torsion = {true, false};
  cert.h0_saturation = true;
  cert.overall = false;
  std::string s = cert_to_json(cert);
  CHECK(s.find("\"virtual\": false") != std::string::npos);
  CHECK(s.find("\"h0_saturation\": true") != std::string::npos);
}
