#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace p1p1 {

/// A point of the N^2 grading lattice. The componentwise partial order
/// is the one the trimming constructions use; it is not total.
struct BiDegree {
  int i = 0;
  int j = 0;

  BiDegree() = default;
  BiDegree(int i_, int j_) : i(i_), j(j_) {}

  BiDegree operator+(const BiDegree& o) const { return {i + o.i, j + o.j}; }
  BiDegree operator-(const BiDegree& o) const { return {i - o.i, j - o.j}; }
  bool operator==(const BiDegree& o) const = default;
  /// Lexicographic; used only as a container key, not as the grading order.
  auto operator<=>(const BiDegree& o) const = default;

  /// Componentwise partial order (i1,j1) <= (i2,j2).
  bool leq(const BiDegree& o) const { return i <= o.i && j <= o.j; }
  bool nonnegative() const { return i >= 0 && j >= 0; }
  BiDegree transposed() const { return {j, i}; }

  std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
};

/// Monomial in x0, x1, y0, y1 and the auxiliary elimination variable t.
/// t is only ever nonzero inside elimination computations; deg(t) = (0,0)
/// so it never disturbs the bigrading.
struct Monomial {
  static constexpr int kVarCount = 5;
  static constexpr int kT = 4;

  std::array<int, kVarCount> e{};

  static Monomial one() { return {}; }
  static Monomial var(int v, int power = 1) {
    Monomial m;
    m.e[v] = power;
    return m;
  }

  BiDegree bidegree() const { return {e[0] + e[1], e[2] + e[3]}; }
  int tdeg() const { return e[kT]; }
  int total_degree() const { return e[0] + e[1] + e[2] + e[3] + e[4]; }
  bool is_one() const { return total_degree() == 0; }

  bool divides(const Monomial& m) const {
    for (int v = 0; v < kVarCount; ++v)
      if (e[v] > m.e[v]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r;
    for (int v = 0; v < kVarCount; ++v) r.e[v] = e[v] + m.e[v];
    return r;
  }

  /// this / m; caller guarantees divisibility.
  Monomial quotient(const Monomial& m) const {
    Monomial r;
    for (int v = 0; v < kVarCount; ++v) r.e[v] = e[v] - m.e[v];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int v = 0; v < kVarCount; ++v) r.e[v] = a.e[v] > b.e[v] ? a.e[v] : b.e[v];
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int v = 0; v < kVarCount; ++v)
      if (a.e[v] > 0 && b.e[v] > 0) return false;
    return true;
  }

  /// Swap the x and y exponent blocks (the P^1 x P^1 factor swap).
  Monomial xy_swapped() const {
    Monomial r = *this;
    std::swap(r.e[0], r.e[2]);
    std::swap(r.e[1], r.e[3]);
    return r;
  }

  bool operator==(const Monomial& o) const = default;

  std::string str() const;
};

/// Monomial orders in use: degrevlex with x0 > x1 > y0 > y1 (> t), and
/// the block order that makes t dominant (so t-free generators of a
/// block-order Groebner basis generate the elimination ideal).
enum class MonomialOrder { DegRevLex, ElimT };

/// Three-way comparison under the given order: negative when a < b.
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order);

const char* var_name(int v);

/// All monomials of bidegree (d.i, d.j) with zero t-exponent, listed in
/// decreasing degrevlex order. Size is (i+1)(j+1).
std::vector<Monomial> graded_piece_basis(BiDegree d);

}  // namespace p1p1
