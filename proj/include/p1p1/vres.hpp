#pragma once

#include <optional>

#include "p1p1/points.hpp"
#include "p1p1/resolve.hpp"

namespace p1p1 {

/// Virtuality certificate: per-index homology torsion verdicts plus the
/// H0 saturation identity. The construction is never trusted on its
/// own; this certificate is the ground truth.
struct VirtualCert {
  std::vector<bool> torsion;  // index k-1 holds the verdict for H_k
  bool h0_saturation = false;
  bool overall = false;
};

/// Checks Definition-style virtuality of the complex against the
/// B-saturated ideal I: every higher homology module is annihilated by
/// a power of B, and the ideal of d_1 entries B-saturates to I.
VirtualCert is_virtual(const FreeComplex& c, const Ideal& target);

/// Keep exactly the free summands generated in degrees at most d+(1,1)
/// and restrict the differentials. The point set must have generic
/// Hilbert function with (d.i+1)(d.j+1) >= |X| (the regularity
/// criterion for generic points).
FreeComplex trim(const FreeComplex& mfr, BiDegree d, const PointSet& xs);

/// The closed-form length-two shape: top summand S(-i-1,-j-1)^(2i+2),
/// middle S(-i,-j-1)^(i+1) + S(-i-1,-q)^(i+2-r) + S(-i-1,-q-1)^r where
/// |X| = (i+2)q + r.
struct FormulaShape {
  int n = 0, i = 0, j = 0, q = 0, r = 0;
  std::map<BiDegree, int> middle;  // homological index 1
  std::map<BiDegree, int> top;     // homological index 2
  FormulaShape transposed() const;
  BettiTable as_betti() const;
  std::string str() const;
};

FormulaShape formula_shape(int n, int i, int j);
/// Mirrored variant for j < i: transpose of formula_shape(n, j, i).
FormulaShape formula_shape_sym(int n, int i, int j);

/// The predicted (i+2) x (j+2) submatrix of the second difference
/// matrix under the hypotheses of the length-two formula.
DiffMatrix expected_delta2_submatrix(int n, int i, int j);

/// Expected generator/syzygy/second-syzygy counts on degrees
/// componentwise at most (i+1, j+1).
struct TrimCounts {
  std::map<BiDegree, int> alpha;
  std::map<BiDegree, int> beta;
  std::map<BiDegree, int> gamma;  // identically zero in range
};
TrimCounts expected_trim_counts(int n, int i, int j);

/// Minimal free resolution of S/(I_X cap <x0,x1>^a); a virtual
/// resolution of S/I_X for every a, of length exactly two once
/// a >= |pi_1(X)| - 1. Default a is that bound.
FreeComplex vres_saturation(const PointSet& xs, std::optional<int> a = std::nullopt);

/// Smallest a with pd S/(I_X cap <x0,x1>^a) = 2, searched upward.
std::optional<int> min_sat_exponent(const PointSet& xs, int a_max);

/// The primary-decomposition identity
///   <I_X cap <x0,x1>^a, y0> =
///     cap_k <y0, y1^alpha_k, L_{A_k}>  cap  <<x0,x1>^a, y0>,
/// verified by two-sided generator membership.
bool keylemma_check(const PointSet& xs, int a);

/// Experimental construction: trim the resolution at a minimal (i,j)
/// with H_X(i,j) = |X| and certify the result. Also reports whether the
/// trimmed Betti table matches the sign pattern of the second
/// difference matrix in the window (the observed shape).
struct ConjecturalTrim {
  BiDegree at;
  FreeComplex complex;
  VirtualCert cert;
  bool shape_matches = false;
};
ConjecturalTrim conjectural_trim(const PointSet& xs,
                                 std::optional<BiDegree> at = std::nullopt);

/// Betti shape read off the difference matrix: negative entries in the
/// window become the middle, positive ones (other than (0,0)) the top.
TrimCounts delta2_read_shape(const DiffMatrix& d2, BiDegree at);

/// The identity d_{r,s} = -alpha_{r,s} + beta_{r,s} - gamma_{r,s}
/// between the second difference matrix of H_X and the resolution
/// shift counts, verified at every (r,s) != (0,0) of a window wide
/// enough to contain every shift.
bool delta2_identity_check(const PointSet& xs);

}  // namespace p1p1
