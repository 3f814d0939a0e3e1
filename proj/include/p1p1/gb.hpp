#pragma once

#include <set>
#include <span>
#include <vector>

#include "p1p1/bipoly.hpp"

namespace p1p1 {

/// Bihomogeneous ideal of S, held by an explicit generator list.
struct Ideal {
  Field field;
  std::vector<BiPoly> gens;

  /// Drops zero generators; rejects non-bihomogeneous ones.
  static Ideal of(Field f, std::vector<BiPoly> gens);
  static Ideal zero(Field f) { return Ideal{f, {}}; }
  static Ideal unit(Field f) { return Ideal{f, {BiPoly::one(f)}}; }
  static Ideal span(std::initializer_list<const char*> polys, Field f);
};

/// Reduced Groebner basis: monic elements, sorted by decreasing leading
/// monomial, no leading monomial divides any monomial of another element.
struct GroebnerBasis {
  Field field;
  MonomialOrder order;
  std::vector<BiPoly> elems;
  bool reduced = true;

  bool is_unit() const { return elems.size() == 1 && elems[0].leading_monomial().is_one(); }
};

GroebnerBasis groebner(const Ideal& ideal, MonomialOrder order = MonomialOrder::DegRevLex);
/// Remainder with no term divisible by a leading monomial of the basis.
BiPoly normal_form(const BiPoly& f, const GroebnerBasis& gb);
bool contains(const GroebnerBasis& gb, const BiPoly& f);
bool ideal_equal(const Ideal& a, const Ideal& b);
bool ideal_contains_ideal(const Ideal& outer, const Ideal& inner);

/// Intersection via the auxiliary variable t: eliminate t from
/// t*I + (1-t)*J with the t-dominant block order.
Ideal intersect(const Ideal& a, const Ideal& b);
/// (I : g) computed as (I intersect <g>)/g; the division is exact by
/// construction and verified.
Ideal colon_by_poly(const Ideal& ideal, const BiPoly& g);
/// (I : J) as the intersection of the single-generator colons.
Ideal colon(const Ideal& ideal, const Ideal& by);
/// I : J^infinity by iterating the colon until it stabilizes.
Ideal saturate(const Ideal& ideal, const Ideal& by);
/// I : B^infinity, staged as ((I : <x0,x1>^inf) : <y0,y1>^inf); B and
/// <x0,x1><y0,y1> share a radical so the saturations agree.
Ideal saturate_irrelevant(const Ideal& ideal);
/// All a-fold products of the generators; a = 0 gives <1>.
Ideal ideal_power(const Ideal& ideal, int a);
/// Exact f/g for a single polynomial divisor; throws if not a multiple.
BiPoly exact_quotient(const BiPoly& f, const BiPoly& g);

/// Minimal homogeneous generating set, extracted from the reduced
/// Groebner basis by degree-ascending redundancy elimination.
std::vector<BiPoly> minimal_generators(const Ideal& ideal);

Ideal irrelevant_ideal(Field f);  // <x0y0, x0y1, x1y0, x1y1>
Ideal x_pair_ideal(Field f);      // <x0, x1>
Ideal y_pair_ideal(Field f);      // <y0, y1>

// ---------------------------------------------------------------------
// Free-module layer: elements of S^r under the position-over-term order
// (lower index dominant), Groebner bases, Schreyer syzygies.
// ---------------------------------------------------------------------

struct ModMonomial {
  int pos = 0;
  Monomial mon;
  bool operator==(const ModMonomial& o) const = default;
};

/// Position-over-term: lower position wins, ties by the ring order.
int modmono_cmp(const ModMonomial& a, const ModMonomial& b, MonomialOrder order);

/// Element of a free module S^r, sparse and sorted like BiPoly.
class ModPoly {
 public:
  using Term = std::pair<ModMonomial, Scalar>;

  explicit ModPoly(Field f, MonomialOrder order = MonomialOrder::DegRevLex)
      : field_(f), order_(order) {}

  static ModPoly from_components(std::span<const BiPoly> comps,
                                 MonomialOrder order = MonomialOrder::DegRevLex);
  static ModPoly basis_vector(Field f, int pos,
                              MonomialOrder order = MonomialOrder::DegRevLex);
  /// Terms must already be strictly decreasing under the order.
  static ModPoly from_sorted_terms(Field f, MonomialOrder order, std::vector<Term> terms);
  std::vector<BiPoly> components(int rank) const;
  BiPoly component(int pos) const;

  const Field& field() const { return field_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModMonomial& leading_monomial() const;
  const Scalar& leading_coeff() const;
  int max_pos() const;

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator-() const;
  ModPoly scaled(const Scalar& c) const;
  ModPoly times_term(const Monomial& m, const Scalar& c) const;
  ModPoly times_poly(const BiPoly& p) const;
  ModPoly monic() const;
  /// Integer coefficients with content 1 and positive leading
  /// coefficient (monic over a prime field). Optionally reports the
  /// factor t with primitive() == scaled(t).
  ModPoly primitive(Scalar* factor = nullptr) const;
  bool operator==(const ModPoly& o) const;
  /// Everything but the leading term.
  ModPoly without_leading() const;
  void drop_leading();
  /// this = a * this - c * u * g, reusing this's term storage.
  void combine_multiple(const Scalar& a, const ModPoly& g, const Monomial& u, const Scalar& c);

  std::string str() const;

 private:
  static ModPoly merge(const ModPoly& a, const ModPoly& b);

  Field field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

struct ModuleGB {
  Field field;
  MonomialOrder order;
  std::vector<ModPoly> elems;
};

/// Reduced module Groebner basis. When reps != nullptr, also returns for
/// each basis element its representation in terms of the input
/// generators (an element of S^gens.size()); this is the data Schreyer's
/// construction consumes. rank1 enables the coprime-pair criterion,
/// which is only valid for ideals. When elim_split >= 0, S-pairs led by
/// positions >= elim_split are not processed: the result is then a
/// Groebner basis only up to the split block, which is exactly what
/// syzygy-generator extraction needs.
std::vector<ModPoly> module_groebner(const std::vector<ModPoly>& gens, MonomialOrder order,
                                     bool rank1, std::vector<ModPoly>* reps = nullptr,
                                     int elim_split = -1);
ModuleGB module_groebner(const std::vector<ModPoly>& gens, MonomialOrder order);

ModPoly module_normal_form(const ModPoly& f, std::span<const ModPoly> gb, MonomialOrder order);
/// Full division with quotient recording:
///   scale * f = sum q[l]*gb[l] + remainder
/// (pseudo-division: the remainder is not rescaled).
ModPoly module_divide(const ModPoly& f, std::span<const ModPoly> gb, MonomialOrder order,
                      std::vector<BiPoly>* quotients, Scalar* scale = nullptr);
bool module_member(const ModPoly& f, const ModuleGB& gb);

/// Groebner basis of a growing submodule; supports cheap membership
/// tests between insertions. The basis is completed and pruned of
/// redundant leading terms after every insertion, but not tail-reduced.
class IncrementalGB {
 public:
  explicit IncrementalGB(Field f, MonomialOrder order = MonomialOrder::DegRevLex, bool rank1 = false)
      : field_(f), order_(order), rank1_(rank1) {}
  /// Inserts the element's span; returns false if it was already a member.
  bool add(const ModPoly& f);
  bool member(const ModPoly& f) const;
  const std::vector<ModPoly>& basis() const { return basis_; }

 private:
  struct PairEntry {
    ModMonomial lcm;
    int i, j;
  };
  void insert(ModPoly nf);
  void complete();
  void prune();

  Field field_;
  MonomialOrder order_;
  bool rank1_;
  std::vector<ModPoly> basis_;
  std::vector<PairEntry> queue_;
  std::set<std::pair<int, int>> pending_;
};

/// Generators of the syzygy module of the given elements of S^rank.
/// Computed by embedding each generator as (m_i, e_i) in S^(rank+k) and
/// eliminating the leading block with the position-over-term order: the
/// pure tail-block elements of the Groebner basis are the syzygies.
std::vector<ModPoly> module_syzygies(const std::vector<ModPoly>& gens, int rank,
                                     MonomialOrder order = MonomialOrder::DegRevLex);

/// Same module by Schreyer's construction: the standard representations
/// of all same-position S-pairs of the Groebner basis, pulled back
/// through the cofactor matrix, plus the inputs' own division
/// representations. Slower; retained as an independent route for
/// cross-checking.
std::vector<ModPoly> module_syzygies_schreyer(const std::vector<ModPoly>& gens, int rank,
                                              MonomialOrder order = MonomialOrder::DegRevLex);

/// {u in S^rank : g*u in M}, read off the syzygies of gens(M) + g*e_i.
std::vector<ModPoly> module_colon_poly(const std::vector<ModPoly>& gens, int rank,
                                       const BiPoly& g);
std::vector<ModPoly> module_intersect(const std::vector<ModPoly>& a,
                                      const std::vector<ModPoly>& b, int rank);
bool module_equal(const std::vector<ModPoly>& a, const std::vector<ModPoly>& b, int rank);

/// {u : B^t u in M for some t}, by iterating the four-generator colon
/// intersection until it stabilizes.
std::vector<ModPoly> module_saturate_by_irrelevant(const std::vector<ModPoly>& gens, int rank);

/// Minimal generating subset of a module generating set (bihomogeneous
/// inputs; degree-ascending greedy with membership tests).
std::vector<ModPoly> module_minimal_generators(const std::vector<ModPoly>& gens, int rank,
                                               const std::vector<BiDegree>& shifts);

/// Bidegree of a bihomogeneous module element in the twisted ambient
/// (+)S(-shift_c); throws if components disagree.
BiDegree module_element_degree(const ModPoly& elem, const std::vector<BiDegree>& shifts);

}  // namespace p1p1
