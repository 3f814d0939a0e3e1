#include "p1p1/linalg.hpp"

#include <utility>

namespace p1p1 {

namespace {

int bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const int rows = (int)m.size();
  if (rows == 0) return 0;
  const int cols = (int)m[0].size();
  mpz_class prev = 1;
  int rank = 0;
  int row = 0, col = 0;
  while (row < rows && col < cols) {
    // pivot search anywhere in the remaining block
    int pr = -1, pc = -1;
    for (int c = col; c < cols && pr < 0; ++c)
      for (int r = row; r < rows; ++r)
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    std::swap(m[row], m[pr]);
    if (pc != col)
      for (int r = 0; r < rows; ++r) std::swap(m[r][col], m[r][pc]);
    for (int r = row + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        mpz_class num = m[r][c] * m[row][col] - m[r][col] * m[row][c];
        mpz_divexact(m[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][col] = 0;
    }
    prev = m[row][col];
    ++rank;
    ++row;
    ++col;
  }
  return rank;
}

int modp_rank(const ScalarMatrix& in) {
  const std::uint64_t p = in.a.empty() ? 2 : in.a.front().field().modulus();
  std::vector<std::vector<std::uint64_t>> m(in.rows, std::vector<std::uint64_t>(in.cols));
  for (int r = 0; r < in.rows; ++r)
    for (int c = 0; c < in.cols; ++c) m[r][c] = in.at(r, c).residue();

  auto inv = [&](std::uint64_t a) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = (unsigned __int128)(r)*b % p;
      b = (unsigned __int128)(b)*b % p;
      e >>= 1;
    }
    return r;
  };

  int rank = 0, row = 0;
  for (int col = 0; col < in.cols && row < in.rows; ++col) {
    int pr = -1;
    for (int r = row; r < in.rows; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    std::uint64_t iv = inv(m[row][col]);
    for (int r = row + 1; r < in.rows; ++r) {
      if (m[r][col] == 0) continue;
      std::uint64_t f = (unsigned __int128)(m[r][col]) * iv % p;
      for (int c = col; c < in.cols; ++c) {
        std::uint64_t sub = (unsigned __int128)(f)*m[row][c] % p;
        m[r][c] = (m[r][c] + p - sub) % p;
      }
    }
    ++rank;
    ++row;
  }
  return rank;
}

}  // namespace

int exact_rank(const ScalarMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (!m.a.front().field().is_rationals()) return modp_rank(m);
  // clear denominators row by row; row scaling cannot change the rank
  std::vector<std::vector<mpz_class>> z(m.rows, std::vector<mpz_class>(m.cols));
  for (int r = 0; r < m.rows; ++r) {
    mpz_class l = 1;
    for (int c = 0; c < m.cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                             m.at(r, c).rat().get_den().get_mpz_t());
    for (int c = 0; c < m.cols; ++c) {
      mpq_class v = m.at(r, c).rat() * l;
      z[r][c] = v.get_num();
    }
  }
  return bareiss_rank(std::move(z));
}

}  // namespace p1p1
