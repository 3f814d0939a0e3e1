#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "p1p1/linalg.hpp"
#include "p1p1/scalar.hpp"

using namespace p1p1;

TEST_CASE("rational normalization") {
  CHECK(Scalar::rational(2, 4).str() == "1/2");
  CHECK(Scalar::rational(3, -6).str() == "-1/2");
  CHECK(Scalar::rational(0, 7).str() == "0");
  CHECK(Scalar::rational(0, 7) == Scalar::zero(Field::rationals()));
  CHECK_THROWS_WITH_AS(Scalar::rational(1, 0), "division by zero", std::domain_error);
}

TEST_CASE("inverses") {
  CHECK(Scalar::rational(1, 2).inverse().str() == "2");
  Field f7 = Field::prime(7);
  CHECK(Scalar::from_int(f7, 3).inverse() == Scalar::from_int(f7, 5));
  CHECK(Scalar::one(Field::rationals()).inverse().is_one());
  CHECK_THROWS_WITH_AS(Scalar::zero(f7).inverse(), "not invertible", std::domain_error);
}

TEST_CASE("field construction") {
  CHECK_THROWS(Field::prime(32004));
  CHECK(Field::prime(32003).modulus() == 32003);
  CHECK(Field::prime(2).name() == "F_2");
  CHECK(Field::rationals().name() == "QQ");
}

TEST_CASE("mixed fields rejected") {
  Scalar a = Scalar::from_int(Field::rationals(), 1);
  Scalar b = Scalar::from_int(Field::prime(5), 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  Scalar c = Scalar::from_int(Field::prime(7), 1);
  CHECK_THROWS_AS(b * c, std::invalid_argument);
}

static Scalar random_scalar(std::mt19937_64& rng, Field f) {
  if (f.is_rationals()) {
    long n = (long)(rng() % 2001) - 1000;
    long d = (long)(rng() % 999) + 1;
    return Scalar::rational(n, d);
  }
  return Scalar::from_int(f, (long)(rng() % f.modulus()));
}

TEST_CASE("field axioms on random triples") {
  for (Field f : {Field::rationals(), Field::prime(32003)}) {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 200; ++it) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
    }
  }
}

TEST_CASE("parse/print round trip") {
  for (Field f : {Field::rationals(), Field::prime(32003)}) {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 200; ++it) {
      Scalar a = random_scalar(rng, f);
      CHECK(Scalar::parse(a.str(), f) == a);
    }
  }
  CHECK(Scalar::parse("-7/3", Field::rationals()).str() == "-7/3");
  CHECK(Scalar::parse("42", Field::rationals()).str() == "42");
  CHECK_THROWS_AS(Scalar::parse("abc", Field::rationals()), std::invalid_argument);
}

TEST_CASE("exact rank: rationals and F_p") {
  Field q = Field::rationals();
  ScalarMatrix m(3, 3, q);
  // rows 0 and 2 proportional
  long vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {2, 4, 6}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = Scalar::from_int(q, vals[r][c]);
  CHECK(exact_rank(m) == 2);

  ScalarMatrix z(2, 5, q);
  CHECK(exact_rank(z) == 0);

  // fractions: rank must respect exact arithmetic
  ScalarMatrix fm(2, 2, q);
  fm.at(0, 0) = Scalar::rational(1, 3);
  fm.at(0, 1) = Scalar::rational(1, 6);
  fm.at(1, 0) = Scalar::rational(2, 5);
  fm.at(1, 1) = Scalar::rational(1, 5);
  CHECK(exact_rank(fm) == 1);

  Field fp = Field::prime(7);
  ScalarMatrix pm(2, 2, fp);
  pm.at(0, 0) = Scalar::from_int(fp, 3);
  pm.at(0, 1) = Scalar::from_int(fp, 1);
  pm.at(1, 0) = Scalar::from_int(fp, 6);
  pm.at(1, 1) = Scalar::from_int(fp, 2);
  CHECK(exact_rank(pm) == 1);
  pm.at(1, 1) = Scalar::from_int(fp, 3);
  CHECK(exact_rank(pm) == 2);
}

TEST_CASE("bareiss agrees with naive elimination on random integer matrices") {
  Field q = Field::rationals();
  std::mt19937_64 rng(4242);
  for (int it = 0; it < 50; ++it) {
    int rows = 1 + (int)(rng() % 6), cols = 1 + (int)(rng() % 6);
    ScalarMatrix m(rows, cols, q);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar::from_int(q, (long)(rng() % 7) - 3);
    // naive rational Gaussian elimination as the oracle
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c).rat();
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
      int pr = -1;
      for (int r = row; r < rows; ++r)
        if (a[r][col] != 0) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(a[row], a[pr]);
      for (int r = row + 1; r < rows; ++r) {
        if (a[r][col] == 0) continue;
        mpq_class f = a[r][col] / a[row][col];
        for (int c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
      }
      ++rank;
      ++row;
    }
    CHECK(exact_rank(m) == rank);
  }
}
