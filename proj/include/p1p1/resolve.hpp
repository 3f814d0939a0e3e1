#pragma once

#include "p1p1/complex.hpp"

namespace p1p1 {

/// Minimal bigraded free resolution of S/I: iterated Schreyer syzygies
/// over minimal generating sets, followed by cancellation of any unit
/// entries. The result has no bidegree-(0,0) entries and satisfies
/// verify_complex.
FreeComplex min_free_resolution(const Ideal& ideal);

BettiTable betti(const FreeComplex& c);
int projective_dimension(const FreeComplex& c);
/// Auslander-Buchsbaum over the four-variable ring.
int depth_from_resolution(const FreeComplex& c);

/// ker d_k is generated by the columns of d_{k+1} at every k
/// (acyclicity; the top differential must be injective).
bool certify_exactness(const FreeComplex& c);

/// H_k is annihilated by a power of the irrelevant ideal:
/// ker d_k lies in the B-saturation of im d_{k+1}.
bool homology_B_torsion(const FreeComplex& c, int k);

/// Remove free summands cancelled by unit entries (row/column
/// operations, then deletion). Exposed for tests; min_free_resolution
/// applies it internally.
FreeComplex minimalize(FreeComplex c);

/// True when no differential carries a nonzero bidegree-(0,0) entry.
bool is_minimal(const FreeComplex& c);

}  // namespace p1p1
