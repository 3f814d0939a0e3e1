#pragma once

#include <vector>

#include "p1p1/scalar.hpp"

namespace p1p1 {

/// Dense matrix of field elements used for evaluation-rank computations.
struct ScalarMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> a;  // row-major

  ScalarMatrix(int r, int c, Field f) : rows(r), cols(c), a((size_t)r * c, Scalar::zero(f)) {}
  Scalar& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Scalar& at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

/// Exact rank. Over the rationals rows are cleared to integers and
/// eliminated fraction-free (Bareiss) so intermediate entries stay
/// polynomial-sized; over F_p ordinary Gaussian elimination.
int exact_rank(const ScalarMatrix& m);

}  // namespace p1p1
