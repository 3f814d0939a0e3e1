#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "p1p1/monomial.hpp"
#include "p1p1/scalar.hpp"

namespace p1p1 {

/// Sparse polynomial of S = k[x0,x1,y0,y1] (plus the elimination
/// variable t when inside a Groebner computation). Terms are kept
/// sorted strictly decreasing under the polynomial's active order, so
/// the leading term is terms().front(). No zero coefficients are stored.
class BiPoly {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit BiPoly(Field f, MonomialOrder order = MonomialOrder::DegRevLex)
      : field_(f), order_(order) {}

  static BiPoly zero(Field f) { return BiPoly(f); }
  static BiPoly constant(const Scalar& c);
  static BiPoly one(Field f) { return constant(Scalar::one(f)); }
  static BiPoly term(const Monomial& m, const Scalar& c,
                     MonomialOrder order = MonomialOrder::DegRevLex);
  static BiPoly variable(Field f, int v) { return term(Monomial::var(v), Scalar::one(f)); }
  /// Builds from arbitrary (monomial, coefficient) pairs; merges duplicates.
  static BiPoly from_terms(Field f, std::vector<Term> terms,
                           MonomialOrder order = MonomialOrder::DegRevLex);

  const Field& field() const { return field_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const;
  const Scalar& leading_coeff() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly scaled(const Scalar& c) const;
  /// this * c*m as a single fused operation (the reduction workhorse).
  BiPoly times_term(const Monomial& m, const Scalar& c) const;
  BiPoly monic() const;

  bool operator==(const BiPoly& o) const;
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  /// Bidegree when bihomogeneous, nullopt otherwise.
  /// Throws on the zero polynomial ("zero polynomial has no degree").
  std::optional<BiDegree> bidegree() const;
  bool is_bihomogeneous() const { return is_zero() || bidegree().has_value(); }
  bool has_t() const;
  int max_tdeg() const;

  BiPoly resorted(MonomialOrder order) const;
  BiPoly xy_swapped() const;

  /// Canonical plain-text form; degrevlex term order regardless of the
  /// active computational order.
  std::string str() const;
  static BiPoly parse(const std::string& text, Field f);

 private:
  void sort_and_combine();

  Field field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// deg(f) + deg(g) = deg(fg) is used all over; expose the common helper
/// that insists on bihomogeneity.
BiDegree forced_bidegree(const BiPoly& f);

}  // namespace p1p1
