#include "p1p1/complex.hpp"

#include <algorithm>

namespace p1p1 {

std::vector<BiDegree> FreeBiModule::sorted_shifts() const {
  std::vector<BiDegree> s = shifts;
  std::sort(s.begin(), s.end());
  return s;
}

const std::vector<std::vector<BiPoly>>& FreeComplex::map_of(int k) const {
  if (k < 1 || k > length()) throw std::out_of_range("differential index out of range");
  return maps[k - 1];
}

std::vector<ModPoly> FreeComplex::differential_columns(int k) const {
  const auto& m = map_of(k);
  const int rows = modules[k - 1].rank();
  const int cols = modules[k].rank();
  std::vector<ModPoly> out;
  out.reserve(cols);
  for (int v = 0; v < cols; ++v) {
    std::vector<BiPoly> comps;
    comps.reserve(rows);
    for (int u = 0; u < rows; ++u) comps.push_back(m[u][v]);
    out.push_back(ModPoly::from_components(comps));
  }
  return out;
}

FreeComplex FreeComplex::xy_swapped() const {
  FreeComplex r;
  r.field = field;
  for (const auto& mod : modules) {
    FreeBiModule m;
    for (const auto& s : mod.shifts) m.shifts.push_back(s.transposed());
    r.modules.push_back(m);
  }
  for (const auto& mat : maps) {
    std::vector<std::vector<BiPoly>> rm;
    for (const auto& row : mat) {
      std::vector<BiPoly> rr;
      for (const auto& e : row) rr.push_back(e.xy_swapped());
      rm.push_back(rr);
    }
    r.maps.push_back(rm);
  }
  return r;
}

BettiTable BettiTable::of(const FreeComplex& c) {
  BettiTable t;
  for (int k = 1; k <= c.length(); ++k)
    for (const auto& s : c.modules[k].shifts) ++t.counts[{k, s}];
  return t;
}

std::string BettiTable::text() const {
  std::string out;
  for (const auto& [key, mult] : counts) {
    out += std::to_string(key.first) + " (" + std::to_string(key.second.i) + "," +
           std::to_string(key.second.j) + ") " + std::to_string(mult) + "\n";
  }
  return out;
}

BettiTable BettiTable::transposed() const {
  BettiTable t;
  for (const auto& [key, mult] : counts) t.counts[{key.first, key.second.transposed()}] = mult;
  return t;
}

int BettiTable::total_rank(int k) const {
  int r = 0;
  for (const auto& [key, mult] : counts)
    if (key.first == k) r += mult;
  return r;
}

bool verify_complex(const FreeComplex& c) {
  if (c.modules.empty()) return false;
  if ((int)c.maps.size() != c.length()) return false;
  for (int k = 1; k <= c.length(); ++k) {
    const auto& m = c.map_of(k);
    const int rows = c.modules[k - 1].rank();
    const int cols = c.modules[k].rank();
    if ((int)m.size() != rows) return false;
    for (const auto& row : m)
      if ((int)row.size() != cols) return false;
    for (int u = 0; u < rows; ++u) {
      for (int v = 0; v < cols; ++v) {
        if (m[u][v].is_zero()) continue;
        auto d = m[u][v].bidegree();
        if (!d) return false;
        if (*d != c.modules[k].shifts[v] - c.modules[k - 1].shifts[u]) return false;
      }
    }
  }
  // d_k o d_{k+1} = 0
  for (int k = 1; k < c.length(); ++k) {
    const auto& a = c.map_of(k);
    const auto& b = c.map_of(k + 1);
    const int rows = c.modules[k - 1].rank();
    const int mid = c.modules[k].rank();
    const int cols = c.modules[k + 1].rank();
    for (int u = 0; u < rows; ++u) {
      for (int w = 0; w < cols; ++w) {
        BiPoly acc(c.field);
        for (int v = 0; v < mid; ++v) acc = acc + a[u][v] * b[v][w];
        if (!acc.is_zero()) return false;
      }
    }
  }
  return true;
}

}  // namespace p1p1
