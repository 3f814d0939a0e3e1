#include "p1p1/monomial.hpp"

#include <algorithm>

namespace p1p1 {

namespace {

// degrevlex over the first n variables of the listed order.
int degrevlex_cmp(const Monomial& a, const Monomial& b, int n) {
  int da = 0, db = 0;
  for (int v = 0; v < n; ++v) {
    da += a.e[v];
    db += b.e[v];
  }
  if (da != db) return da < db ? -1 : 1;
  // ties broken by the last variable in which they differ: the monomial
  // with the smaller exponent there is the larger one
  for (int v = n - 1; v >= 0; --v) {
    if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::ElimT) {
    if (a.e[Monomial::kT] != b.e[Monomial::kT])
      return a.e[Monomial::kT] < b.e[Monomial::kT] ? -1 : 1;
    return degrevlex_cmp(a, b, 4);
  }
  // plain degrevlex; t ranks below the ring variables and is zero in all
  // non-elimination contexts anyway
  int c = degrevlex_cmp(a, b, 5);
  return c;
}

const char* var_name(int v) {
  static const char* kNames[] = {"x0", "x1", "y0", "y1", "t"};
  return kNames[v];
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::string s;
  for (int v = 0; v < kVarCount; ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s;
}

std::vector<Monomial> graded_piece_basis(BiDegree d) {
  std::vector<Monomial> out;
  out.reserve((d.i + 1) * (d.j + 1));
  for (int a = 0; a <= d.i; ++a) {
    for (int b = 0; b <= d.j; ++b) {
      Monomial m;
      m.e[0] = d.i - a;
      m.e[1] = a;
      m.e[2] = d.j - b;
      m.e[3] = b;
      out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return mono_cmp(a, b, MonomialOrder::DegRevLex) > 0;
  });
  return out;
}

}  // namespace p1p1
