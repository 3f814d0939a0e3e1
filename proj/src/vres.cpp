#include "p1p1/vres.hpp"

#include <algorithm>

namespace p1p1 {

VirtualCert is_virtual(const FreeComplex& c, const Ideal& target) {
  if (!ideal_equal(saturate_irrelevant(target), target))
    throw std::domain_error("target not B-saturated");
  if (c.modules.empty() || c.modules[0].rank() != 1 || !(c.modules[0].shifts[0] == BiDegree{0, 0}))
    throw std::domain_error("unsupported H0 shape");
  VirtualCert cert;
  cert.overall = true;
  for (int k = 1; k <= c.length(); ++k) {
    bool ok = homology_B_torsion(c, k);
    cert.torsion.push_back(ok);
    cert.overall = cert.overall && ok;
  }
  std::vector<BiPoly> d1;
  if (c.length() >= 1) d1 = c.map_of(1)[0];
  Ideal h0 = Ideal::of(c.field, d1);
  cert.h0_saturation = ideal_equal(saturate_irrelevant(h0), target);
  cert.overall = cert.overall && cert.h0_saturation;
  return cert;
}

FreeComplex trim(const FreeComplex& mfr, BiDegree d, const PointSet& xs) {
  const int w = default_window(xs);
  if (!d.nonnegative() || (long long)(d.i + 1) * (d.j + 1) < xs.size() ||
      !is_generic_hf(xs, w, w))
    throw std::domain_error("d not in reg_B (generic criterion)");
  const BiDegree limit = d + BiDegree{1, 1};
  std::vector<std::vector<int>> keep(mfr.modules.size());
  for (std::size_t k = 0; k < mfr.modules.size(); ++k)
    for (int v = 0; v < mfr.modules[k].rank(); ++v)
      if (mfr.modules[k].shifts[v].leq(limit)) keep[k].push_back(v);

  FreeComplex out;
  out.field = mfr.field;
  for (std::size_t k = 0; k < mfr.modules.size(); ++k) {
    FreeBiModule m;
    for (int v : keep[k]) m.shifts.push_back(mfr.modules[k].shifts[v]);
    out.modules.push_back(m);
  }
  for (int k = 1; k <= mfr.length(); ++k) {
    const auto& src = mfr.map_of(k);
    std::vector<std::vector<BiPoly>> mat;
    for (int u : keep[k - 1]) {
      std::vector<BiPoly> row;
      for (int v : keep[k]) row.push_back(src[u][v]);
      mat.push_back(row);
    }
    out.maps.push_back(mat);
  }
  while (out.length() >= 1 && out.modules.back().rank() == 0) {
    out.modules.pop_back();
    out.maps.pop_back();
  }
  if (!verify_complex(out)) throw std::logic_error("trimmed complex failed verification");
  return out;
}

namespace {

void check_formula_hypotheses(int n, int i, int j) {
  if (n <= 1) throw std::domain_error("hypothesis failed: |X| > 1");
  if (i < 0 || j < 0) throw std::domain_error("hypothesis failed: (i,j) in N^2");
  if (i >= j) throw std::domain_error("hypothesis failed: i < j");
  if (n != (i + 1) * (j + 1))
    throw std::domain_error("hypothesis failed: |X| = (i+1)(j+1)");
}

}  // namespace

FormulaShape formula_shape(int n, int i, int j) {
  check_formula_hypotheses(n, i, j);
  FormulaShape s;
  s.n = n;
  s.i = i;
  s.j = j;
  s.q = n / (i + 2);
  s.r = n % (i + 2);
  s.top[{i + 1, j + 1}] = 2 * i + 2;
  s.middle[{i, j + 1}] += i + 1;
  s.middle[{i + 1, s.q}] += i + 2 - s.r;
  if (s.r > 0) s.middle[{i + 1, s.q + 1}] += s.r;
  return s;
}

FormulaShape formula_shape_sym(int n, int i, int j) {
  if (i < j) return formula_shape(n, i, j);
  return formula_shape(n, j, i).transposed();
}

FormulaShape FormulaShape::transposed() const {
  FormulaShape s;
  s.n = n;
  s.i = j;
  s.j = i;
  s.q = q;
  s.r = r;
  for (const auto& [d, m] : middle) s.middle[d.transposed()] = m;
  for (const auto& [d, m] : top) s.top[d.transposed()] = m;
  return s;
}

BettiTable FormulaShape::as_betti() const {
  BettiTable t;
  for (const auto& [d, m] : middle) t.counts[{1, d}] = m;
  for (const auto& [d, m] : top) t.counts[{2, d}] = m;
  return t;
}

std::string FormulaShape::str() const {
  auto block = [](const std::map<BiDegree, int>& part) {
    std::string s;
    for (const auto& [d, m] : part) {
      if (!s.empty()) s += " + ";
      s += "S(" + std::to_string(-d.i) + "," + std::to_string(-d.j) + ")^" + std::to_string(m);
    }
    return s;
  };
  return "top: " + block(top) + "\nmiddle: " + block(middle) + "\n";
}

DiffMatrix expected_delta2_submatrix(int n, int i, int j) {
  check_formula_hypotheses(n, i, j);
  const int q = n / (i + 2);
  const int r = n % (i + 2);
  DiffMatrix m(i + 2, j + 2);
  m.at(0, 0) = 1;
  m.at(i, j + 1) -= i + 1;
  m.at(i + 1, q) -= i + 2 - r;
  if (r > 0) m.at(i + 1, q + 1) -= r;
  m.at(i + 1, j + 1) += 2 * i + 2;
  return m;
}

TrimCounts expected_trim_counts(int n, int i, int j) {
  DiffMatrix d = expected_delta2_submatrix(n, i, j);
  TrimCounts c;
  for (int a = 0; a <= i + 1; ++a)
    for (int b = 0; b <= j + 1; ++b)
      if (d.at(a, b) < 0) c.alpha[{a, b}] = (int)-d.at(a, b);
  c.beta[{i + 1, j + 1}] = 2 * i + 2;
  return c;
}

FreeComplex vres_saturation(const PointSet& xs, std::optional<int> a_opt) {
  const int ell = partition_info(xs).ell();
  const int a = a_opt.value_or(ell - 1);
  if (a < 0) throw std::invalid_argument("negative saturation exponent");
  Ideal ix = ideal_of_points(xs);
  Ideal j = intersect(ix, ideal_power(x_pair_ideal(xs.field), a));
  FreeComplex c = min_free_resolution(j);
  if (a >= ell - 1 && c.length() != 2)
    throw std::logic_error("saturation construction missed the length-two bound");
  return c;
}

std::optional<int> min_sat_exponent(const PointSet& xs, int a_max) {
  if (a_max < 0) throw std::invalid_argument("negative search bound");
  const int ell = partition_info(xs).ell();
  const int bound = ell - 1;
  Ideal ix = ideal_of_points(xs);
  for (int a = 0; a <= std::min(a_max, bound); ++a) {
    Ideal j = intersect(ix, ideal_power(x_pair_ideal(xs.field), a));
    if (min_free_resolution(j).length() == 2) {
      if (a < bound) {
        // the closed-form bound must hold as well
        Ideal jb = intersect(ix, ideal_power(x_pair_ideal(xs.field), bound));
        if (min_free_resolution(jb).length() != 2)
          throw std::logic_error("saturation bound check failed");
      }
      return a;
    }
  }
  if (a_max >= bound)
    throw std::logic_error("no length-two resolution up to the saturation bound");
  return std::nullopt;
}

bool keylemma_check(const PointSet& xs, int a) {
  if (!xs.convention_ok)
    throw std::domain_error("convention flag not set: y0 must avoid all second coordinates");
  PartitionInfo info = partition_info(xs);
  if (a < info.ell() - 1)
    throw std::domain_error("exponent below the saturation bound |pi_1(X)| - 1");
  Field f = xs.field;
  BiPoly y0 = BiPoly::variable(f, 2);
  Ideal xa = ideal_power(x_pair_ideal(f), a);

  Ideal ix = ideal_of_points(xs);
  std::vector<BiPoly> lhs_gens = intersect(ix, xa).gens;
  lhs_gens.push_back(y0);
  Ideal lhs = Ideal::of(f, lhs_gens);

  std::optional<Ideal> rhs;
  for (const auto& fiber : info.fibers) {
    // <y0, y1^alpha_k, L_{A_k}>
    BiPoly la = BiPoly::variable(f, 0).scaled(fiber.a1) - BiPoly::variable(f, 1).scaled(fiber.a0);
    Ideal part = Ideal::of(
        f, {y0, BiPoly::term(Monomial::var(3, fiber.count), Scalar::one(f)), la});
    rhs = rhs ? intersect(*rhs, part) : part;
  }
  std::vector<BiPoly> tail_gens = xa.gens;
  tail_gens.push_back(y0);
  Ideal tail = Ideal::of(f, tail_gens);
  rhs = rhs ? intersect(*rhs, tail) : tail;

  return ideal_contains_ideal(lhs, *rhs) && ideal_contains_ideal(*rhs, lhs);
}

TrimCounts delta2_read_shape(const DiffMatrix& d2, BiDegree at) {
  TrimCounts c;
  for (int a = 0; a <= at.i + 1 && a < d2.rows; ++a) {
    for (int b = 0; b <= at.j + 1 && b < d2.cols; ++b) {
      long long v = d2.at(a, b);
      if (v < 0) c.alpha[{a, b}] = (int)-v;
      if (v > 0 && !(a == 0 && b == 0)) c.beta[{a, b}] = (int)v;
    }
  }
  return c;
}

bool delta2_identity_check(const PointSet& xs) {
  BettiTable t = betti(min_free_resolution(ideal_of_points(xs)));
  int w = default_window(xs);
  for (const auto& [key, mult] : t.counts) w = std::max({w, key.second.i + 2, key.second.j + 2});
  DiffMatrix d = diff2(hilbert_eval(xs, w, w));
  auto count = [&](int k, BiDegree deg) {
    auto it = t.counts.find({k, deg});
    return it == t.counts.end() ? 0 : it->second;
  };
  for (int r = 0; r < w; ++r)
    for (int s = 0; s < w; ++s) {
      if (r == 0 && s == 0) continue;
      BiDegree deg{r, s};
      if (d.at(r, s) != -count(1, deg) + count(2, deg) - count(3, deg)) return false;
    }
  return true;
}

ConjecturalTrim conjectural_trim(const PointSet& xs, std::optional<BiDegree> at_opt) {
  if (!check_sufficiently_general(xs))
    throw std::domain_error("point set is not certified sufficiently general");
  const int w = default_window(xs);
  HilbertMatrix h = hilbert_eval(xs, w, w);
  std::vector<BiDegree> min_set;
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < w; ++b) {
      if (h.at(a, b) != xs.size()) continue;
      bool minimal = true;
      if (a > 0 && h.at(a - 1, b) == xs.size()) minimal = false;
      if (b > 0 && h.at(a, b - 1) == xs.size()) minimal = false;
      if (minimal) min_set.push_back({a, b});
    }
  BiDegree at;
  if (at_opt) {
    at = *at_opt;
    if (std::find(min_set.begin(), min_set.end(), at) == min_set.end())
      throw std::domain_error("(i,j) is not minimal with H_X(i,j) = |X|");
  } else {
    at = *std::min_element(min_set.begin(), min_set.end(), [](BiDegree a, BiDegree b) {
      auto key = [](BiDegree d) {
        return std::tuple<int, int, int>(d.i + d.j, std::abs(d.i - d.j), d.i);
      };
      return key(a) < key(b);
    });
  }

  ConjecturalTrim result;
  result.at = at;
  Ideal ix = ideal_of_points(xs);
  result.complex = trim(min_free_resolution(ix), at, xs);
  result.cert = is_virtual(result.complex, ix);

  TrimCounts read = delta2_read_shape(diff2(h), at);
  BettiTable want;
  for (const auto& [d, m] : read.alpha) want.counts[{1, d}] = m;
  for (const auto& [d, m] : read.beta) want.counts[{2, d}] = m;
  result.shape_matches = betti(result.complex) == want;
  return result;
}

}  // namespace p1p1
