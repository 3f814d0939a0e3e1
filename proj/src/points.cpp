#include "p1p1/points.hpp"

#include <algorithm>
#include <random>

namespace p1p1 {

Point Point::of(Scalar a0, Scalar a1, Scalar b0, Scalar b1) {
  Field f = a0.field();
  auto normalize = [&](Scalar& c0, Scalar& c1) {
    if (!c1.is_zero()) {
      c0 = c0 / c1;
      c1 = Scalar::one(f);
    } else if (!c0.is_zero()) {
      c0 = Scalar::one(f);
    } else {
      throw std::invalid_argument("projective coordinates cannot both be zero");
    }
  };
  normalize(a0, a1);
  normalize(b0, b1);
  return Point{a0, a1, b0, b1};
}

bool Point::operator==(const Point& o) const {
  return a0 == o.a0 && a1 == o.a1 && b0 == o.b0 && b1 == o.b1;
}

Scalar Point::eval(const Monomial& m) const {
  if (m.tdeg() != 0) throw std::invalid_argument("cannot evaluate a t-monomial at a point");
  Scalar r = Scalar::one(a0.field());
  const Scalar* coords[4] = {&a0, &a1, &b0, &b1};
  for (int v = 0; v < 4; ++v)
    for (int k = 0; k < m.e[v]; ++k) r = r * (*coords[v]);
  return r;
}

std::string Point::str() const {
  return "[" + a0.str() + ":" + a1.str() + "]x[" + b0.str() + ":" + b1.str() + "]";
}

PointSet PointSet::of(Field f, std::vector<Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j])
        throw std::invalid_argument("duplicate point: " + pts[i].str());
  bool ok = true;
  for (const auto& p : pts)
    if (p.b0.is_zero()) ok = false;
  return PointSet{f, std::move(pts), ok};
}

PointSet PointSet::xy_swapped() const {
  std::vector<Point> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(p.xy_swapped());
  return PointSet::of(field, std::move(pts));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::string IntMatrix::str() const {
  std::string s;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) s += " ";
      s += std::to_string(at(i, j));
    }
    s += "\n";
  }
  return s;
}

std::vector<int> conjugate_partition(const std::vector<int>& alpha) {
  std::vector<int> star;
  if (alpha.empty()) return star;
  for (int i = 1; i <= alpha.front(); ++i) {
    int c = 0;
    for (int aj : alpha)
      if (aj >= i) ++c;
    star.push_back(c);
  }
  return star;
}

Ideal ideal_of_point(const Point& p, Field f) {
  BiPoly lx = BiPoly::variable(f, 0).scaled(p.a1) - BiPoly::variable(f, 1).scaled(p.a0);
  BiPoly ly = BiPoly::variable(f, 2).scaled(p.b1) - BiPoly::variable(f, 3).scaled(p.b0);
  return Ideal::of(f, {lx, ly});
}

Ideal ideal_of_points(const PointSet& xs) {
  if (xs.points.empty()) throw std::domain_error("empty point set has no defining ideal");
  Ideal acc = ideal_of_point(xs.points.front(), xs.field);
  for (std::size_t i = 1; i < xs.points.size(); ++i)
    acc = intersect(acc, ideal_of_point(xs.points[i], xs.field));
  return acc;
}

HilbertMatrix hilbert_eval(const PointSet& xs, int rows, int cols) {
  HilbertMatrix h(rows, cols);
  const int n = xs.size();
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      auto basis = graded_piece_basis({i, j});
      ScalarMatrix m(n, (int)basis.size(), xs.field);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < (int)basis.size(); ++c) m.at(r, c) = xs.points[r].eval(basis[c]);
      h.at(i, j) = exact_rank(m);
    }
  }
  return h;
}

HilbertMatrix hilbert_gb(const Ideal& ideal, int rows, int cols) {
  GroebnerBasis gb = groebner(ideal);
  std::vector<Monomial> lead;
  lead.reserve(gb.elems.size());
  for (const auto& g : gb.elems) lead.push_back(g.leading_monomial());
  HilbertMatrix h(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      long long count = 0;
      for (const Monomial& m : graded_piece_basis({i, j})) {
        bool standard = true;
        for (const Monomial& l : lead)
          if (l.divides(m)) {
            standard = false;
            break;
          }
        if (standard) ++count;
      }
      h.at(i, j) = count;
    }
  }
  return h;
}

DiffMatrix diff1(const IntMatrix& m) {
  DiffMatrix d(m.rows, m.cols);
  auto get = [&](int i, int j) -> long long {
    return (i < 0 || j < 0) ? 0 : m.at(i, j);
  };
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      d.at(i, j) = get(i, j) - get(i - 1, j) - get(i, j - 1) + get(i - 1, j - 1);
  return d;
}

DiffMatrix diff2(const IntMatrix& m) { return diff1(diff1(m)); }

IntMatrix rectangle_sums(const IntMatrix& m) {
  IntMatrix s(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      long long acc = 0;
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) acc += m.at(a, b);
      s.at(i, j) = acc;
    }
  return s;
}

PartitionInfo partition_info(const PointSet& xs) {
  if (xs.points.empty()) throw std::domain_error("empty point set has no partition");
  PartitionInfo info;
  for (const auto& p : xs.points) {
    bool found = false;
    for (auto& f : info.fibers) {
      if (f.a0 == p.a0 && f.a1 == p.a1) {
        ++f.count;
        found = true;
        break;
      }
    }
    if (!found) info.fibers.push_back({p.a0, p.a1, 1});
  }
  for (const auto& f : info.fibers) info.alpha.push_back(f.count);
  std::sort(info.alpha.begin(), info.alpha.end(), std::greater<int>());
  info.alpha_star = conjugate_partition(info.alpha);
  return info;
}

bool is_generic_hf(const PointSet& xs, int rows, int cols) {
  if ((long long)rows * cols < xs.size())
    throw std::domain_error("window too small to certify");
  HilbertMatrix h = hilbert_eval(xs, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (h.at(i, j) != std::min<long long>(xs.size(), (long long)(i + 1) * (j + 1)))
        return false;
  return true;
}

std::map<BiDegree, int> predicted_generators(const DiffMatrix& d) {
  std::map<BiDegree, int> out;
  for (int i = 0; i < d.rows; ++i) {
    for (int j = 0; j < d.cols; ++j) {
      if (d.at(i, j) >= 0) continue;
      bool witness = false;
      for (int s = j + 1; s < d.cols && !witness; ++s)
        if (d.at(i, s) > 0) witness = true;
      for (int r = i + 1; r < d.rows && !witness; ++r)
        if (d.at(r, j) > 0) witness = true;
      if (witness) out[{i, j}] = (int)-d.at(i, j);
    }
  }
  return out;
}

std::map<BiDegree, int> degree_multiset(const std::vector<BiPoly>& polys) {
  std::map<BiDegree, int> out;
  for (const auto& p : polys) ++out[forced_bidegree(p)];
  return out;
}

bool check_sufficiently_general(const PointSet& xs) {
  const int w = default_window(xs);
  if (!is_generic_hf(xs, w, w)) return false;
  DiffMatrix d = diff2(hilbert_eval(xs, w, w));
  auto predicted = predicted_generators(d);
  auto actual = degree_multiset(minimal_generators(ideal_of_points(xs)));
  return predicted == actual;
}

namespace {

// deterministic unbiased integer in [1, bound]
long bounded_uniform(std::mt19937_64& rng, long bound) {
  const std::uint64_t b = (std::uint64_t)bound;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return (long)(v % b) + 1;
}

}  // namespace

PointSet random_points(int n, std::uint64_t seed, long bound, Field f) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  if (bound < n) throw std::invalid_argument("coordinate bound must be at least the point count");
  std::mt19937_64 rng(seed);
  auto sample_distinct = [&](int count) {
    std::vector<long> vals;
    int attempts = 0;
    while ((int)vals.size() < count) {
      if (++attempts > 1000 * count)
        throw std::runtime_error("could not sample distinct coordinates");
      long c = bounded_uniform(rng, bound);
      if (std::find(vals.begin(), vals.end(), c) == vals.end()) vals.push_back(c);
    }
    return vals;
  };
  std::vector<long> as = sample_distinct(n);
  std::vector<long> bs = sample_distinct(n);
  std::vector<Point> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k)
    pts.push_back(Point::of(Scalar::one(f), Scalar::from_int(f, as[k]), Scalar::one(f),
                            Scalar::from_int(f, bs[k])));
  return PointSet::of(f, std::move(pts));
}

PointSet normalize_convention(const PointSet& xs) {
  if (xs.convention_ok) return xs;
  Field f = xs.field;
  for (long lambda = 1;; ++lambda) {
    Scalar l = Scalar::from_int(f, lambda);
    bool good = true;
    for (const auto& p : xs.points)
      if ((p.b0 + l * p.b1).is_zero()) {
        good = false;
        break;
      }
    if (!good) continue;
    std::vector<Point> pts;
    pts.reserve(xs.points.size());
    for (const auto& p : xs.points)
      pts.push_back(Point::of(p.a0, p.a1, p.b0 + l * p.b1, p.b1));
    return PointSet::of(f, std::move(pts));
  }
}

int default_window(const PointSet& xs) { return xs.size() + 2; }

}  // namespace p1p1
