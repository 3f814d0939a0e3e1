#include "p1p1/gb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace p1p1 {

// ---------------------------------------------------------------------
// ModPoly
// ---------------------------------------------------------------------

int modmono_cmp(const ModMonomial& a, const ModMonomial& b, MonomialOrder order) {
  if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;  // lower index is larger
  return mono_cmp(a.mon, b.mon, order);
}

ModPoly ModPoly::from_components(std::span<const BiPoly> comps, MonomialOrder order) {
  if (comps.empty()) throw std::invalid_argument("empty component list");
  ModPoly r(comps[0].field(), order);
  for (int pos = 0; pos < (int)comps.size(); ++pos)
    for (const auto& [m, c] : comps[pos].terms()) r.terms_.push_back({{pos, m}, c});
  std::sort(r.terms_.begin(), r.terms_.end(), [order](const Term& a, const Term& b) {
    return modmono_cmp(a.first, b.first, order) > 0;
  });
  return r;
}

ModPoly ModPoly::basis_vector(Field f, int pos, MonomialOrder order) {
  ModPoly r(f, order);
  r.terms_.push_back({{pos, Monomial::one()}, Scalar::one(f)});
  return r;
}

ModPoly ModPoly::from_sorted_terms(Field f, MonomialOrder order, std::vector<Term> terms) {
  ModPoly r(f, order);
  r.terms_ = std::move(terms);
  return r;
}

std::vector<BiPoly> ModPoly::components(int rank) const {
  std::vector<BiPoly> out(rank, BiPoly(field_, order_));
  std::vector<std::vector<BiPoly::Term>> buckets(rank);
  for (const auto& [mm, c] : terms_) {
    if (mm.pos >= rank) throw std::out_of_range("component position exceeds rank");
    buckets[mm.pos].push_back({mm.mon, c});
  }
  for (int p = 0; p < rank; ++p)
    out[p] = BiPoly::from_terms(field_, std::move(buckets[p]), order_);
  return out;
}

BiPoly ModPoly::component(int pos) const {
  std::vector<BiPoly::Term> ts;
  for (const auto& [mm, c] : terms_)
    if (mm.pos == pos) ts.push_back({mm.mon, c});
  return BiPoly::from_terms(field_, std::move(ts), order_);
}

const ModMonomial& ModPoly::leading_monomial() const {
  if (is_zero()) throw std::domain_error("zero module element has no leading term");
  return terms_.front().first;
}

const Scalar& ModPoly::leading_coeff() const {
  if (is_zero()) throw std::domain_error("zero module element has no leading term");
  return terms_.front().second;
}

int ModPoly::max_pos() const {
  int m = -1;
  for (const auto& t : terms_) m = std::max(m, t.first.pos);
  return m;
}

ModPoly ModPoly::merge(const ModPoly& a, const ModPoly& b) {
  ModPoly r(a.field_, a.order_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = modmono_cmp(a.terms_[i].first, b.terms_[j].first, a.order_);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar s = a.terms_[i].second + b.terms_[j].second;
      if (!s.is_zero()) r.terms_.push_back({a.terms_[i].first, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("mixed fields");
  if (order_ != o.order_) throw std::invalid_argument("mixed module orders");
  return merge(*this, o);
}

ModPoly ModPoly::operator-(const ModPoly& o) const { return *this + (-o); }

ModPoly ModPoly::operator-() const {
  ModPoly r(field_, order_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first, -t.second});
  return r;
}

ModPoly ModPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return ModPoly(field_, order_);
  ModPoly r(field_, order_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first, t.second * c});
  return r;
}

ModPoly ModPoly::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return ModPoly(field_, order_);
  ModPoly r(field_, order_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({{t.first.pos, t.first.mon * m}, t.second * c});
  return r;
}

ModPoly ModPoly::times_poly(const BiPoly& p) const {
  ModPoly r(field_, order_);
  r.terms_.reserve(terms_.size() * p.terms().size());
  for (const auto& [m, c] : p.terms())
    for (const auto& [mm, s] : terms_) r.terms_.push_back({{mm.pos, mm.mon * m}, s * c});
  std::sort(r.terms_.begin(), r.terms_.end(), [this](const Term& a, const Term& b) {
    return modmono_cmp(a.first, b.first, order_) > 0;
  });
  std::vector<Term> out;
  out.reserve(r.terms_.size());
  for (auto& t : r.terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second = out.back().second + t.second;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
  r.terms_ = std::move(out);
  return r;
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

ModPoly ModPoly::primitive(Scalar* factor) const {
  if (factor) *factor = Scalar::one(field_);
  if (is_zero()) return *this;
  if (!field_.is_rationals()) {
    Scalar inv = leading_coeff().inverse();
    if (factor) *factor = inv;
    return scaled(inv);
  }
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [mm, c] : terms_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rat().get_den().get_mpz_t());
  for (const auto& [mm, c] : terms_) {
    mpq_class v = c.rat() * den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
  }
  mpq_class t(den_lcm, num_gcd);
  t.canonicalize();
  if (leading_coeff().rat() < 0) t = -t;
  Scalar ts = Scalar::rational(t.get_num(), t.get_den());
  if (factor) *factor = ts;
  return scaled(ts);
}

bool ModPoly::operator==(const ModPoly& o) const {
  return field_ == o.field_ && order_ == o.order_ && terms_ == o.terms_;
}

ModPoly ModPoly::without_leading() const {
  ModPoly r(field_, order_);
  if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

void ModPoly::drop_leading() {
  if (!terms_.empty()) terms_.erase(terms_.begin());
}

void ModPoly::combine_multiple(const Scalar& a, const ModPoly& g, const Monomial& u,
                               const Scalar& c) {
  const bool scale = !a.is_one();
  const Scalar nc = -c;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    ModMonomial gm{g.terms_[j].first.pos, g.terms_[j].first.mon * u};
    int cmp = modmono_cmp(terms_[i].first, gm, order_);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i]));
      if (scale) out.back().second = out.back().second * a;
      ++i;
    } else if (cmp < 0) {
      out.push_back({gm, g.terms_[j].second * nc});
      ++j;
    } else {
      Scalar s = scale ? terms_[i].second * a + g.terms_[j].second * nc
                       : terms_[i].second + g.terms_[j].second * nc;
      if (!s.is_zero()) out.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) {
    out.push_back(std::move(terms_[i]));
    if (scale) out.back().second = out.back().second * a;
  }
  for (; j < g.terms_.size(); ++j)
    out.push_back({{g.terms_[j].first.pos, g.terms_[j].first.mon * u}, g.terms_[j].second * nc});
  terms_ = std::move(out);
}

std::string ModPoly::str() const {
  if (is_zero()) return "0";
  std::string s = "(";
  int rank = max_pos() + 1;
  auto comps = components(rank);
  for (int p = 0; p < rank; ++p) {
    if (p) s += ", ";
    s += comps[p].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------

namespace {

// Full pseudo-reduction against a basis of primitive (or monic)
// elements. Maintains
//   scale * f = sum quotient_l * basis_l + work
// without ever introducing fractions when the basis is integral:
// each step rewrites work <- lc(g) * work - c * u * g and strips the
// content. onscale(s) fires whenever the pending identity is scaled by
// s; step(l, u, c) fires for the subtraction of c * u * basis[l].
template <class StepFn, class ScaleFn>
ModPoly reduce_general(const ModPoly& f, std::span<const ModPoly> basis, MonomialOrder order,
                       StepFn&& step, ScaleFn&& onscale) {
  ModPoly work = f;
  std::size_t idx = 0;  // terms before idx are irreducible for good
  int since_strip = 0;
  bool scaled = false;
  while (true) {
    int found = -1;
    std::size_t tpos = idx;
    for (; tpos < work.terms().size() && found < 0; ++tpos) {
      const ModMonomial& mm = work.terms()[tpos].first;
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (basis[l].is_zero()) continue;
        const ModMonomial& lm = basis[l].leading_monomial();
        if (lm.pos != mm.pos || !lm.mon.divides(mm.mon)) continue;
        // prefer short reducers: less fill-in
        if (found < 0 || basis[l].terms().size() < basis[found].terms().size()) found = (int)l;
      }
    }
    if (found < 0) break;
    idx = tpos - 1;  // reduction only creates monomials below this one
    const ModMonomial tm = work.terms()[idx].first;
    const Scalar tc = work.terms()[idx].second;
    const ModPoly& g = basis[found];
    Monomial u = tm.mon.quotient(g.leading_monomial().mon);
    Scalar cg = g.leading_coeff();
    work.combine_multiple(cg, g, u, tc);
    if (!cg.is_one()) {
      onscale(cg);
      scaled = true;
    }
    step(found, u, tc);
    if (scaled && ++since_strip >= 1 && !work.is_zero() && work.field().is_rationals()) {
      Scalar t = Scalar::one(work.field());
      work = work.primitive(&t);
      if (!t.is_one()) onscale(t);
      since_strip = 0;
      scaled = false;
    }
  }
  if (scaled && !work.is_zero() && work.field().is_rationals()) {
    Scalar t = Scalar::one(work.field());
    work = work.primitive(&t);
    if (!t.is_one()) onscale(t);
  }
  return work;
}

}  // namespace

// ---------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------

namespace {

struct PairRec {
  ModMonomial lcm;
  int i;
  int j;
};

struct BuchbergerState {
  MonomialOrder order;
  bool rank1;
  bool track;
  int elim_split = -1;
  std::vector<ModPoly> basis;
  std::vector<ModPoly> reps;  // in S^k over the input generators
  std::set<std::pair<int, int>> pending;

  struct PairLess {
    MonomialOrder order;
    bool operator()(const PairRec& a, const PairRec& b) const {
      int c = modmono_cmp(a.lcm, b.lcm, order);
      if (c != 0) return c < 0;  // smaller lcm first (normal strategy)
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::set<PairRec, PairLess> pairs;

  explicit BuchbergerState(MonomialOrder ord, bool r1, bool tr)
      : order(ord), rank1(r1), track(tr), pairs(PairLess{ord}) {}

  void add_pairs_for(int n) {
    for (int l = 0; l < n; ++l) {
      const ModMonomial& a = basis[l].leading_monomial();
      const ModMonomial& b = basis[n].leading_monomial();
      if (a.pos != b.pos) continue;
      if (elim_split >= 0 && a.pos >= elim_split) continue;
      pairs.insert({{a.pos, Monomial::lcm(a.mon, b.mon)}, l, n});
      pending.insert({l, n});
    }
  }

  void insert(const ModPoly& candidate, const ModPoly& rep) {
    if (candidate.is_zero()) return;
    Scalar t = Scalar::one(candidate.field());
    basis.push_back(candidate.primitive(&t));
    if (track) reps.push_back(rep.scaled(t));
    add_pairs_for((int)basis.size() - 1);
  }

  bool chain_skip(const PairRec& p) const {
    for (int k = 0; k < (int)basis.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      const ModMonomial& lm = basis[k].leading_monomial();
      if (lm.pos != p.lcm.pos || !lm.mon.divides(p.lcm.mon)) continue;
      auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<ModPoly> module_groebner(const std::vector<ModPoly>& gens, MonomialOrder order,
                                     bool rank1, std::vector<ModPoly>* reps_out, int elim_split) {
  const bool track = reps_out != nullptr;
  Field field = gens.empty() ? Field::rationals() : gens.front().field();
  BuchbergerState st(order, rank1, track);
  st.elim_split = elim_split;

  for (int i = 0; i < (int)gens.size(); ++i) {
    ModPoly rep = ModPoly::basis_vector(field, i, order);
    ModPoly nf = reduce_general(
        gens[i], st.basis, order,
        [&](int l, const Monomial& u, const Scalar& c) {
          if (track) rep.combine_multiple(Scalar::one(field), st.reps[l], u, c);
        },
        [&](const Scalar& s) {
          if (track) rep = rep.scaled(s);
        });
    st.insert(nf, rep);
  }

  while (!st.pairs.empty()) {
    PairRec p = *st.pairs.begin();
    st.pairs.erase(st.pairs.begin());
    st.pending.erase({p.i, p.j});
    const ModMonomial& lmi = st.basis[p.i].leading_monomial();
    const ModMonomial& lmj = st.basis[p.j].leading_monomial();
    // Buchberger's first criterion; only sound in the ring case
    if (rank1 && Monomial::coprime(lmi.mon, lmj.mon)) continue;
    if (st.chain_skip(p)) continue;
    Monomial ui = p.lcm.mon.quotient(lmi.mon);
    Monomial uj = p.lcm.mon.quotient(lmj.mon);
    // cross-scale by the leading coefficients so the heads cancel
    ModPoly s = st.basis[p.i].times_term(ui, st.basis[p.j].leading_coeff()) -
                st.basis[p.j].times_term(uj, st.basis[p.i].leading_coeff());
    ModPoly rep(field, order);
    if (track)
      rep = st.reps[p.i].times_term(ui, st.basis[p.j].leading_coeff()) -
            st.reps[p.j].times_term(uj, st.basis[p.i].leading_coeff());
    ModPoly nf = reduce_general(
        s, st.basis, order,
        [&](int l, const Monomial& u, const Scalar& c) {
          if (track) rep.combine_multiple(Scalar::one(field), st.reps[l], u, c);
        },
        [&](const Scalar& sc) {
          if (track) rep = rep.scaled(sc);
        });
    st.insert(nf, rep);
  }

  // Interreduce to the unique reduced basis. Leading monomials are
  // pairwise distinct, so keeping the divisibility-minimal ones is
  // unambiguous.
  int n = (int)st.basis.size();
  std::vector<bool> keep(n, true);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n && keep[l]; ++m) {
      if (m == l) continue;
      const ModMonomial& a = st.basis[m].leading_monomial();
      const ModMonomial& b = st.basis[l].leading_monomial();
      if (a.pos == b.pos && a.mon.divides(b.mon)) keep[l] = false;
    }
  }
  std::vector<ModPoly> kept, kept_reps;
  for (int l = 0; l < n; ++l) {
    if (!keep[l]) continue;
    kept.push_back(st.basis[l]);
    if (track) kept_reps.push_back(st.reps[l]);
  }
  // tail reduction of each element against the others
  for (int l = 0; l < (int)kept.size(); ++l) {
    std::vector<ModPoly> others;
    std::vector<int> omap;
    for (int m = 0; m < (int)kept.size(); ++m)
      if (m != l) {
        others.push_back(kept[m]);
        omap.push_back(m);
      }
    ModPoly rep = track ? kept_reps[l] : ModPoly(field, order);
    ModPoly nf = reduce_general(
        kept[l], others, order,
        [&](int m, const Monomial& u, const Scalar& c) {
          if (track) rep.combine_multiple(Scalar::one(field), kept_reps[omap[m]], u, c);
        },
        [&](const Scalar& sc) {
          if (track) rep = rep.scaled(sc);
        });
    kept[l] = nf;
    if (track) kept_reps[l] = rep;
  }
  // canonical form: monic elements in decreasing leading-monomial order
  std::vector<int> idx(kept.size());
  for (int l = 0; l < (int)kept.size(); ++l) idx[l] = l;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return modmono_cmp(kept[a].leading_monomial(), kept[b].leading_monomial(), order) > 0;
  });
  std::vector<ModPoly> out, out_reps;
  for (int l : idx) {
    Scalar inv = kept[l].leading_coeff().inverse();
    out.push_back(kept[l].scaled(inv));
    if (track) out_reps.push_back(kept_reps[l].scaled(inv));
  }
  if (track) *reps_out = std::move(out_reps);
  return out;
}

ModuleGB module_groebner(const std::vector<ModPoly>& gens, MonomialOrder order) {
  Field field = gens.empty() ? Field::rationals() : gens.front().field();
  return ModuleGB{field, order, module_groebner(gens, order, false, nullptr)};
}

ModPoly module_normal_form(const ModPoly& f, std::span<const ModPoly> gb, MonomialOrder order) {
  Scalar s = Scalar::one(f.field());
  ModPoly r = reduce_general(
      f, gb, order, [](int, const Monomial&, const Scalar&) {},
      [&](const Scalar& t) { s = s * t; });
  // undo the pseudo-division scaling so this is a true normal form
  return r.is_zero() ? r : r.scaled(s.inverse());
}

ModPoly module_divide(const ModPoly& f, std::span<const ModPoly> gb, MonomialOrder order,
                      std::vector<BiPoly>* quotients, Scalar* scale) {
  if (quotients) quotients->assign(gb.size(), BiPoly(f.field(), order));
  Scalar s = Scalar::one(f.field());
  ModPoly r = reduce_general(
      f, gb, order,
      [&](int l, const Monomial& u, const Scalar& c) {
        if (quotients) (*quotients)[l] = (*quotients)[l] + BiPoly::term(u, c, order);
      },
      [&](const Scalar& t) {
        s = s * t;
        if (quotients)
          for (auto& q : *quotients) q = q.scaled(t);
      });
  if (scale) *scale = s;
  return r;
}

bool module_member(const ModPoly& f, const ModuleGB& gb) {
  return module_normal_form(f, gb.elems, gb.order).is_zero();
}

bool IncrementalGB::add(const ModPoly& f) {
  ModPoly nf = module_normal_form(f, basis_, order_);
  if (nf.is_zero()) return false;
  insert(std::move(nf));
  complete();
  prune();
  return true;
}

bool IncrementalGB::member(const ModPoly& f) const {
  return module_normal_form(f, basis_, order_).is_zero();
}

void IncrementalGB::insert(ModPoly nf) {
  const int n = (int)basis_.size();
  const ModMonomial& lm = nf.leading_monomial();
  for (int l = 0; l < n; ++l) {
    const ModMonomial& a = basis_[l].leading_monomial();
    if (a.pos != lm.pos) continue;
    queue_.push_back({{a.pos, Monomial::lcm(a.mon, lm.mon)}, l, n});
    pending_.insert({l, n});
  }
  basis_.push_back(nf.primitive());
}

void IncrementalGB::complete() {
  while (!queue_.empty()) {
    // normal strategy: smallest lcm first
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue_.size(); ++k)
      if (modmono_cmp(queue_[k].lcm, queue_[best].lcm, order_) < 0) best = k;
    PairEntry p = queue_[best];
    queue_[best] = queue_.back();
    queue_.pop_back();
    pending_.erase({p.i, p.j});
    const ModMonomial& lmi = basis_[p.i].leading_monomial();
    const ModMonomial& lmj = basis_[p.j].leading_monomial();
    if (rank1_ && Monomial::coprime(lmi.mon, lmj.mon)) continue;
    bool skip = false;
    for (int k = 0; k < (int)basis_.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      const ModMonomial& lk = basis_[k].leading_monomial();
      if (lk.pos != p.lcm.pos || !lk.mon.divides(p.lcm.mon)) continue;
      auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending_.count(key(p.i, k)) && !pending_.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;
    ModPoly s =
        basis_[p.i].times_term(p.lcm.mon.quotient(lmi.mon), basis_[p.j].leading_coeff()) -
        basis_[p.j].times_term(p.lcm.mon.quotient(lmj.mon), basis_[p.i].leading_coeff());
    ModPoly nf = module_normal_form(s, basis_, order_);
    if (!nf.is_zero()) insert(std::move(nf));
  }
}

void IncrementalGB::prune() {
  // with no pairs pending, elements with redundant leading terms can be
  // dropped and the rest is still a basis of the same module
  const int n = (int)basis_.size();
  std::vector<bool> keep(n, true);
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      if (m == l) continue;
      const ModMonomial& a = basis_[m].leading_monomial();
      const ModMonomial& b = basis_[l].leading_monomial();
      if (a.pos == b.pos && a.mon.divides(b.mon)) {
        keep[l] = false;
        break;
      }
    }
  }
  std::vector<ModPoly> kept;
  for (int l = 0; l < n; ++l)
    if (keep[l]) kept.push_back(std::move(basis_[l]));
  basis_ = std::move(kept);
}

// ---------------------------------------------------------------------
// Syzygies (Schreyer)
// ---------------------------------------------------------------------

namespace {

void push_unique(std::vector<ModPoly>& list, const ModPoly& elem) {
  if (elem.is_zero()) return;
  ModPoly m = elem.monic();
  for (const auto& e : list) {
    if (e.terms().size() != m.terms().size()) continue;
    if (!(e.leading_monomial() == m.leading_monomial())) continue;
    if (e == m) return;
  }
  list.push_back(std::move(m));
}

}  // namespace

std::vector<ModPoly> module_syzygies(const std::vector<ModPoly>& gens, int rank,
                                     MonomialOrder order) {
  if (gens.empty()) return {};
  Field field = gens.front().field();
  const int k = (int)gens.size();
  std::vector<ModPoly> big;
  big.reserve(k);
  for (int i = 0; i < k; ++i) big.push_back(gens[i] + ModPoly::basis_vector(field, i + rank, order));
  std::vector<ModPoly> gb = module_groebner(big, order, false, nullptr, rank);
  std::vector<ModPoly> out;
  for (const auto& g : gb) {
    // terms are sorted, so a leading-block term would come first
    if (g.is_zero() || g.leading_monomial().pos < rank) continue;
    std::vector<ModPoly::Term> ts;
    ts.reserve(g.terms().size());
    for (const auto& [mm, c] : g.terms()) ts.push_back({{mm.pos - rank, mm.mon}, c});
    out.push_back(ModPoly::from_sorted_terms(field, order, std::move(ts)));
  }
  // mutual reduction keeps the generators small for downstream passes
  for (std::size_t l = 0; l < out.size(); ++l) {
    std::vector<ModPoly> others;
    for (std::size_t m = 0; m < out.size(); ++m)
      if (m != l && !out[m].is_zero()) others.push_back(out[m]);
    out[l] = module_normal_form(out[l], others, order);
  }
  std::erase_if(out, [](const ModPoly& g) { return g.is_zero(); });
  for (auto& g : out) g = g.primitive();
  return out;
}

std::vector<ModPoly> module_syzygies_schreyer(const std::vector<ModPoly>& gens, int rank,
                                              MonomialOrder order) {
  std::vector<ModPoly> syz;
  if (gens.empty()) return syz;
  Field field = gens.front().field();
  std::vector<ModPoly> reps;
  std::vector<ModPoly> gb = module_groebner(gens, order, rank == 1, &reps);
  Scalar one = Scalar::one(field);

  // Schreyer: each same-position S-pair of the basis reduces to zero;
  // its standard representation, pushed through the cofactor rows,
  // is a syzygy of the original generators.
  for (int i = 0; i < (int)gb.size(); ++i) {
    for (int j = i + 1; j < (int)gb.size(); ++j) {
      const ModMonomial& lmi = gb[i].leading_monomial();
      const ModMonomial& lmj = gb[j].leading_monomial();
      if (lmi.pos != lmj.pos) continue;
      Monomial l = Monomial::lcm(lmi.mon, lmj.mon);
      Monomial ui = l.quotient(lmi.mon);
      Monomial uj = l.quotient(lmj.mon);
      ModPoly s = gb[i].times_term(ui, one) - gb[j].times_term(uj, one);
      std::vector<BiPoly> q;
      Scalar scale = one;
      ModPoly nf = module_divide(s, gb, order, &q, &scale);
      if (!nf.is_zero())
        throw std::logic_error("S-pair of a Groebner basis did not reduce to zero");
      ModPoly sigma =
          (reps[i].times_term(ui, one) - reps[j].times_term(uj, one)).scaled(scale);
      for (int l2 = 0; l2 < (int)gb.size(); ++l2)
        if (!q[l2].is_zero()) sigma = sigma - reps[l2].times_poly(q[l2]);
      push_unique(syz, sigma);
    }
  }

  // Relations binding the inputs to the basis elements they reduce to;
  // these complete the generating set of the syzygy module.
  for (int i = 0; i < (int)gens.size(); ++i) {
    std::vector<BiPoly> q;
    Scalar scale = one;
    ModPoly nf = module_divide(gens[i], gb, order, &q, &scale);
    if (!nf.is_zero())
      throw std::logic_error("generator does not reduce to zero against its own basis");
    ModPoly sigma = ModPoly::basis_vector(field, i, order).scaled(scale);
    for (int l2 = 0; l2 < (int)gb.size(); ++l2)
      if (!q[l2].is_zero()) sigma = sigma - reps[l2].times_poly(q[l2]);
    push_unique(syz, sigma);
  }
  return syz;
}

// ---------------------------------------------------------------------
// Module colon / intersection / saturation
// ---------------------------------------------------------------------

std::vector<ModPoly> module_colon_poly(const std::vector<ModPoly>& gens, int rank,
                                       const BiPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("module colon by zero");
  Field field = g.field();
  std::vector<ModPoly> list = gens;
  for (int pos = 0; pos < rank; ++pos)
    list.push_back(ModPoly::basis_vector(field, pos).times_poly(g));
  const int k = (int)gens.size();
  std::vector<ModPoly> out;
  for (const ModPoly& sigma : module_syzygies(list, rank)) {
    // the e_{k+j} coordinates carry the element u with g*u in M
    std::vector<ModPoly::Term> ts;
    for (const auto& [mm, c] : sigma.terms())
      if (mm.pos >= k) ts.push_back({{mm.pos - k, mm.mon}, c});
    if (ts.empty()) continue;
    // a uniform position shift preserves the sort order
    push_unique(out, ModPoly::from_sorted_terms(field, MonomialOrder::DegRevLex, std::move(ts)));
  }
  return out;
}

std::vector<ModPoly> module_intersect(const std::vector<ModPoly>& a,
                                      const std::vector<ModPoly>& b, int rank) {
  if (a.empty() || b.empty()) return {};
  Field field = a.front().field();
  std::vector<ModPoly> list = a;
  list.insert(list.end(), b.begin(), b.end());
  std::vector<ModPoly> out;
  for (const ModPoly& sigma : module_syzygies(list, rank)) {
    ModPoly v(field);
    auto comps = sigma.components((int)list.size());
    for (int i = 0; i < (int)a.size(); ++i)
      if (!comps[i].is_zero()) v = v + a[i].times_poly(comps[i]);
    push_unique(out, v);
  }
  return out;
}

bool module_equal(const std::vector<ModPoly>& a, const std::vector<ModPoly>& b, int rank) {
  (void)rank;
  ModuleGB ga = module_groebner(a, MonomialOrder::DegRevLex);
  ModuleGB gbb = module_groebner(b, MonomialOrder::DegRevLex);
  for (const auto& f : a)
    if (!module_member(f, gbb)) return false;
  for (const auto& f : b)
    if (!module_member(f, ga)) return false;
  return true;
}

std::vector<ModPoly> module_saturate_by_irrelevant(const std::vector<ModPoly>& gens, int rank) {
  if (gens.empty()) return gens;
  Field field = gens.front().field();
  std::vector<BiPoly> bgens = irrelevant_ideal(field).gens;
  std::vector<ModPoly> cur = gens;
  while (true) {
    std::vector<ModPoly> next;
    bool first = true;
    for (const BiPoly& g : bgens) {
      std::vector<ModPoly> c = module_colon_poly(cur, rank, g);
      next = first ? c : module_intersect(next, c, rank);
      first = false;
    }
    if (module_equal(next, cur, rank)) return cur;
    cur = next;
  }
}

namespace {

// Exact row reduction used by the degreewise minimal-generator test.
class RowSpan {
 public:
  explicit RowSpan(Field f) : field_(f) {}

  // Reduces the row against the span; inserts and reports true if a
  // nonzero remainder survives. Rows are kept with unit pivots; the
  // incoming row is content-stripped first to keep the numbers small.
  bool insert(std::vector<Scalar> row) {
    if (field_.is_rationals()) strip(row);
    for (const auto& [pivot, r] : rows_) {
      if (row[pivot].is_zero()) continue;
      Scalar c = row[pivot];
      for (std::size_t k = pivot; k < row.size(); ++k) row[k] = row[k] - c * r[k];
    }
    std::size_t pivot = row.size();
    for (std::size_t k = 0; k < row.size(); ++k)
      if (!row[k].is_zero()) {
        pivot = k;
        break;
      }
    if (pivot == row.size()) return false;
    Scalar inv = row[pivot].inverse();
    for (auto& v : row) v = v * inv;
    rows_.emplace_back(pivot, std::move(row));
    std::sort(rows_.begin(), rows_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  static void strip(std::vector<Scalar>& row) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& v : row)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.rat().get_den().get_mpz_t());
    for (const auto& v : row) {
      mpq_class q = v.rat() * den_lcm;
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    }
    if (num_gcd == 0) return;
    mpq_class t(den_lcm, num_gcd);
    t.canonicalize();
    Scalar ts = Scalar::rational(t.get_num(), t.get_den());
    for (auto& v : row) v = v * ts;
  }

  Field field_;
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows_;
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.e < b.e; }
};

}  // namespace

std::vector<ModPoly> module_minimal_generators(const std::vector<ModPoly>& gens, int rank,
                                               const std::vector<BiDegree>& shifts) {
  std::vector<ModPoly> cands;
  for (const auto& g : gens)
    if (!g.is_zero()) cands.push_back(g);
  if (cands.empty()) return cands;
  Field field = cands.front().field();
  std::stable_sort(cands.begin(), cands.end(), [&](const ModPoly& a, const ModPoly& b) {
    BiDegree da = module_element_degree(a, shifts);
    BiDegree db = module_element_degree(b, shifts);
    if (da.i + da.j != db.i + db.j) return da.i + da.j < db.i + db.j;
    return da < db;
  });

  // minimal generators in degree d are candidates independent modulo
  // the degree-d piece of m*M; that piece is spanned by the w*g with
  // w a nontrivial monomial of degree d - deg(g)
  std::vector<ModPoly> kept;
  std::size_t pos = 0;
  while (pos < cands.size()) {
    BiDegree d = module_element_degree(cands[pos], shifts);
    std::size_t end = pos;
    while (end < cands.size() && module_element_degree(cands[end], shifts) == d) ++end;

    // coordinates of the ambient degree-d piece
    std::map<std::pair<int, Monomial>, std::size_t,
             decltype([](const auto& a, const auto& b) {
               if (a.first != b.first) return a.first < b.first;
               return MonomialLess{}(a.second, b.second);
             })>
        col;
    for (int c = 0; c < rank; ++c) {
      BiDegree piece = d - shifts[c];
      if (!piece.nonnegative()) continue;
      for (const Monomial& m : graded_piece_basis(piece)) col[{c, m}] = 0;
    }
    std::size_t ncols = 0;
    for (auto& [key, idx] : col) idx = ncols++;
    auto row_of = [&](const ModPoly& g, const Monomial& w) {
      std::vector<Scalar> row(ncols, Scalar::zero(field));
      for (const auto& [mm, cc] : g.terms()) {
        auto it = col.find({mm.pos, mm.mon * w});
        if (it == col.end()) throw std::logic_error("degree bookkeeping failure");
        row[it->second] = row[it->second] + cc;
      }
      return row;
    };

    RowSpan span(field);
    for (const auto& g : cands) {
      if (span.rank() == ncols) break;
      BiDegree dg = module_element_degree(g, shifts);
      BiDegree diff = d - dg;
      if (!diff.nonnegative() || diff == BiDegree{0, 0}) continue;
      for (const Monomial& w : graded_piece_basis(diff)) {
        span.insert(row_of(g, w));
        if (span.rank() == ncols) break;
      }
    }
    if (span.rank() < ncols)
      for (std::size_t k = pos; k < end; ++k)
        if (span.insert(row_of(cands[k], Monomial::one()))) kept.push_back(cands[k].monic());
    pos = end;
  }
  return kept;
}

BiDegree module_element_degree(const ModPoly& elem, const std::vector<BiDegree>& shifts) {
  if (elem.is_zero()) throw std::domain_error("zero module element has no degree");
  bool have = false;
  BiDegree deg;
  auto comps = elem.components((int)shifts.size());
  for (int c = 0; c < (int)shifts.size(); ++c) {
    if (comps[c].is_zero()) continue;
    BiDegree d = forced_bidegree(comps[c]) + shifts[c];
    if (have && d != deg)
      throw std::domain_error("module element is not bihomogeneous for the given shifts");
    deg = d;
    have = true;
  }
  return deg;
}

// ---------------------------------------------------------------------
// Ideal layer
// ---------------------------------------------------------------------

namespace {

ModPoly wrap(const BiPoly& f, MonomialOrder order) {
  BiPoly g = f.resorted(order);
  return ModPoly::from_components(std::span<const BiPoly>(&g, 1), order);
}

BiPoly unwrap(const ModPoly& f) { return f.component(0); }

std::vector<ModPoly> wrap_all(const std::vector<BiPoly>& fs, MonomialOrder order) {
  std::vector<ModPoly> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(wrap(f, order));
  return out;
}

}  // namespace

Ideal Ideal::of(Field f, std::vector<BiPoly> gens) {
  std::vector<BiPoly> kept;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.bidegree())
      throw std::invalid_argument("ideal generator is not bihomogeneous: " + g.str());
    kept.push_back(g.resorted(MonomialOrder::DegRevLex));
  }
  return Ideal{f, std::move(kept)};
}

Ideal Ideal::span(std::initializer_list<const char*> polys, Field f) {
  std::vector<BiPoly> gens;
  for (const char* s : polys) gens.push_back(BiPoly::parse(s, f));
  return Ideal::of(f, std::move(gens));
}

GroebnerBasis groebner(const Ideal& ideal, MonomialOrder order) {
  std::vector<ModPoly> gb = module_groebner(wrap_all(ideal.gens, order), order, true, nullptr);
  std::vector<BiPoly> elems;
  elems.reserve(gb.size());
  for (const auto& g : gb) elems.push_back(unwrap(g));
  return GroebnerBasis{ideal.field, order, std::move(elems), true};
}

BiPoly normal_form(const BiPoly& f, const GroebnerBasis& gb) {
  ModPoly nf = module_normal_form(wrap(f, gb.order), wrap_all(gb.elems, gb.order), gb.order);
  return unwrap(nf).resorted(MonomialOrder::DegRevLex);
}

bool contains(const GroebnerBasis& gb, const BiPoly& f) {
  return normal_form(f, gb).is_zero();
}

bool ideal_contains_ideal(const Ideal& outer, const Ideal& inner) {
  GroebnerBasis gb = groebner(outer);
  for (const auto& g : inner.gens)
    if (!contains(gb, g)) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  // reduced bases are canonical for a fixed order
  GroebnerBasis ga = groebner(a), gb = groebner(b);
  return ga.elems == gb.elems;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.field != b.field) throw std::invalid_argument("mixed fields");
  if (a.gens.empty() || b.gens.empty()) return Ideal::zero(a.field);
  const MonomialOrder ord = MonomialOrder::ElimT;
  Field f = a.field;
  Scalar one = Scalar::one(f);
  std::vector<BiPoly> work;
  BiPoly t = BiPoly::term(Monomial::var(Monomial::kT), one, ord);
  BiPoly one_minus_t = BiPoly::one(f).resorted(ord) - t;
  for (const auto& g : a.gens) work.push_back(t * g.resorted(ord));
  for (const auto& g : b.gens) work.push_back(one_minus_t * g.resorted(ord));
  std::vector<ModPoly> gb = module_groebner(wrap_all(work, ord), ord, true, nullptr);
  std::vector<BiPoly> kept;
  for (const auto& g : gb) {
    BiPoly p = unwrap(g);
    if (!p.has_t()) kept.push_back(p.resorted(MonomialOrder::DegRevLex));
  }
  return Ideal::of(f, std::move(kept));
}

BiPoly exact_quotient(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero");
  BiPoly r = f;
  BiPoly q(f.field());
  while (!r.is_zero()) {
    if (!g.leading_monomial().divides(r.leading_monomial()))
      throw std::domain_error("exact division failed");
    Monomial u = r.leading_monomial().quotient(g.leading_monomial());
    Scalar c = r.leading_coeff() / g.leading_coeff();
    q = q + BiPoly::term(u, c);
    r = r - g.times_term(u, c);
  }
  return q;
}

Ideal colon_by_poly(const Ideal& ideal, const BiPoly& g) {
  if (g.is_zero()) throw std::domain_error("colon by zero");
  Ideal inter = intersect(ideal, Ideal::of(ideal.field, {g}));
  std::vector<BiPoly> out;
  for (const auto& h : inter.gens) out.push_back(exact_quotient(h, g));
  return Ideal::of(ideal.field, std::move(out));
}

Ideal colon(const Ideal& ideal, const Ideal& by) {
  if (by.gens.empty()) throw std::domain_error("colon by the zero ideal");
  bool first = true;
  Ideal res = Ideal::zero(ideal.field);
  for (const auto& g : by.gens) {
    Ideal c = colon_by_poly(ideal, g);
    res = first ? c : intersect(res, c);
    first = false;
  }
  return res;
}

Ideal saturate(const Ideal& ideal, const Ideal& by) {
  if (by.gens.empty()) throw std::domain_error("saturation by the zero ideal");
  Ideal cur = Ideal::of(ideal.field, ideal.gens);
  while (true) {
    Ideal next = colon(cur, by);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
}

Ideal saturate_irrelevant(const Ideal& ideal) {
  return saturate(saturate(ideal, x_pair_ideal(ideal.field)), y_pair_ideal(ideal.field));
}

Ideal ideal_power(const Ideal& ideal, int a) {
  if (a < 0) throw std::invalid_argument("negative ideal power");
  if (a == 0) return Ideal::unit(ideal.field);
  std::vector<BiPoly> out;
  std::vector<int> choice(a, 0);
  const int n = (int)ideal.gens.size();
  if (n == 0) return Ideal::zero(ideal.field);
  // multisets i1 <= i2 <= ... <= ia
  while (true) {
    BiPoly prod = BiPoly::one(ideal.field);
    for (int idx : choice) prod = prod * ideal.gens[idx];
    bool dup = false;
    for (const auto& p : out)
      if (p == prod) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(prod);
    int k = a - 1;
    while (k >= 0 && choice[k] == n - 1) --k;
    if (k < 0) break;
    int v = choice[k] + 1;
    for (int l = k; l < a; ++l) choice[l] = v;
  }
  return Ideal::of(ideal.field, std::move(out));
}

std::vector<BiPoly> minimal_generators(const Ideal& ideal) {
  GroebnerBasis gb = groebner(ideal);
  std::vector<ModPoly> wrapped = wrap_all(gb.elems, MonomialOrder::DegRevLex);
  std::vector<BiPoly> kept;
  for (const auto& g : module_minimal_generators(wrapped, 1, {BiDegree{0, 0}}))
    kept.push_back(unwrap(g).resorted(MonomialOrder::DegRevLex));
  return kept;
}

Ideal irrelevant_ideal(Field f) {
  return Ideal::span({"x0*y0", "x0*y1", "x1*y0", "x1*y1"}, f);
}

Ideal x_pair_ideal(Field f) { return Ideal::span({"x0", "x1"}, f); }

Ideal y_pair_ideal(Field f) { return Ideal::span({"y0", "y1"}, f); }

}  // namespace p1p1
