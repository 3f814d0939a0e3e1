#pragma once

#include <map>

#include "p1p1/gb.hpp"

namespace p1p1 {

/// Twisted free module (+)_c S(-shifts[c].i, -shifts[c].j).
struct FreeBiModule {
  std::vector<BiDegree> shifts;
  int rank() const { return (int)shifts.size(); }
  /// Shift multiset in a canonical order (for comparisons).
  std::vector<BiDegree> sorted_shifts() const;
  bool same_module(const FreeBiModule& o) const { return sorted_shifts() == o.sorted_shifts(); }
};

/// Chain of free modules F_0 <- F_1 <- ... <- F_p with differentials
/// stored as maps[k] = matrix of d_{k+1} : F_{k+1} -> F_k, rows indexed
/// by the target basis.
struct FreeComplex {
  Field field = Field::rationals();
  std::vector<FreeBiModule> modules;
  std::vector<std::vector<std::vector<BiPoly>>> maps;

  int length() const { return (int)modules.size() - 1; }
  const std::vector<std::vector<BiPoly>>& map_of(int k) const;  // d_k, k in [1, length]
  /// Columns of d_k as elements of S^{rank F_{k-1}}.
  std::vector<ModPoly> differential_columns(int k) const;
  FreeComplex xy_swapped() const;
};

/// Multiplicities of shifts per homological index k >= 1. For points,
/// rows 1, 2, 3 are the generator / first-syzygy / second-syzygy counts.
struct BettiTable {
  std::map<std::pair<int, BiDegree>, int> counts;

  static BettiTable of(const FreeComplex& c);
  bool operator==(const BettiTable& o) const = default;
  /// One "k (r,s) mult" line per entry, sorted by (k, r, s).
  std::string text() const;
  BettiTable transposed() const;
  int total_rank(int k) const;
};

/// d o d = 0 and every nonzero entry bihomogeneous of the forced degree.
bool verify_complex(const FreeComplex& c);

}  // namespace p1p1
