#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "p1p1/gb.hpp"
#include "p1p1/linalg.hpp"

namespace p1p1 {

/// A point of P^1 x P^1 with both coordinate pairs normalized so the
/// last nonzero coordinate is 1; equality is then componentwise.
struct Point {
  Scalar a0, a1;  // first factor [a0 : a1]
  Scalar b0, b1;  // second factor [b0 : b1]

  static Point of(Scalar a0, Scalar a1, Scalar b0, Scalar b1);
  bool operator==(const Point& o) const;

  /// Value of a t-free monomial at the point.
  Scalar eval(const Monomial& m) const;
  Point xy_swapped() const { return Point{b0, b1, a0, a1}; }
  std::string str() const;
};

/// Finite set of distinct points. convention_ok records that no point
/// has second coordinate [0:1], which makes y0 a non-zero-divisor on
/// the coordinate ring.
struct PointSet {
  Field field;
  std::vector<Point> points;
  bool convention_ok = false;

  static PointSet of(Field f, std::vector<Point> pts);
  int size() const { return (int)points.size(); }
  PointSet xy_swapped() const;
};

/// Integer matrix window; used for Hilbert functions and their
/// difference matrices.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, 0) {}
  long long& at(int r, int c) { return a[(std::size_t)r * cols + c]; }
  long long at(int r, int c) const { return a[(std::size_t)r * cols + c]; }
  bool operator==(const IntMatrix& o) const = default;
  IntMatrix transposed() const;
  std::string str() const;
};

using HilbertMatrix = IntMatrix;
using DiffMatrix = IntMatrix;

/// Fiber data of the first projection plus the partition and conjugate.
struct PartitionInfo {
  struct Fiber {
    Scalar a0, a1;  // the first coordinate A_k
    int count;      // alpha_k for this fiber
  };
  std::vector<Fiber> fibers;    // in order of first appearance
  std::vector<int> alpha;       // fiber sizes, weakly decreasing
  std::vector<int> alpha_star;  // conjugate partition

  int ell() const { return (int)fibers.size(); }  // |pi_1(X)|
};

std::vector<int> conjugate_partition(const std::vector<int>& alpha);

/// <a1*x0 - a0*x1, b1*y0 - b0*y1>.
Ideal ideal_of_point(const Point& p, Field f);
/// Intersection of the point ideals, left to right.
Ideal ideal_of_points(const PointSet& xs);

/// Hilbert function window from evaluation ranks (exact).
HilbertMatrix hilbert_eval(const PointSet& xs, int rows, int cols);
/// Hilbert function window by counting standard monomials of a reduced
/// Groebner basis; the independent oracle for hilbert_eval.
HilbertMatrix hilbert_gb(const Ideal& ideal, int rows, int cols);

/// First difference under the rectangle stencil, zero-extended.
DiffMatrix diff1(const IntMatrix& m);
DiffMatrix diff2(const IntMatrix& m);
/// Rectangle-sum inverse of diff1 (test support for reconstruction).
IntMatrix rectangle_sums(const IntMatrix& m);

PartitionInfo partition_info(const PointSet& xs);

/// H_X(i,j) = min(|X|, (i+1)(j+1)) on the whole window. Throws if the
/// window cannot reach |X|.
bool is_generic_hf(const PointSet& xs, int rows, int cols);

/// Degrees (i,j) where the second difference matrix announces minimal
/// generators, with multiplicity -d_{i,j}.
std::map<BiDegree, int> predicted_generators(const DiffMatrix& d);

/// Multiset of bidegrees of a list of bihomogeneous polynomials.
std::map<BiDegree, int> degree_multiset(const std::vector<BiPoly>& polys);

/// Generic Hilbert function and the exact match between predicted and
/// actual minimal-generator degrees.
bool check_sufficiently_general(const PointSet& xs);

/// n points of the form [1:a] x [1:b], pairwise-distinct first and
/// second coordinates, deterministic in the seed.
PointSet random_points(int n, std::uint64_t seed, long bound, Field f = Field::rationals());

/// Change of y-coordinates making every second coordinate differ from
/// [0:1] (second factor map [b0:b1] -> [b0 + lambda*b1 : b1] for the
/// least positive integer lambda that works).
PointSet normalize_convention(const PointSet& xs);

/// Default certification window size |X| + 2.
int default_window(const PointSet& xs);

}  // namespace p1p1
