#include "covres/linalg.hpp"

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>

namespace covres {

int rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (auto& row : m)
    for (auto& v : row) {
      v %= p;
      if (v < 0) v += p;
    }
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(m[rank], m[pivot]);
    // Normalize pivot row: multiply by inverse of the pivot.
    long long inv = 1, base = m[rank][c] % p, exp = p - 2;
    while (exp) {  // Fermat inverse; p is prime
      if (exp & 1) inv = (__int128)inv * base % p;
      base = (__int128)base * base % p;
      exp >>= 1;
    }
    for (int cc = c; cc < cols; ++cc)
      m[rank][cc] = (__int128)m[rank][cc] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long long f = m[r][c];
      for (int cc = c; cc < cols; ++cc) {
        m[r][cc] = (m[r][cc] - (__int128)f * m[rank][cc]) % p;
        if (m[r][cc] < 0) m[r][cc] += p;
      }
    }
    ++rank;
  }
  return rank;
}

int rank_over_q(const std::vector<std::vector<long long>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = static_cast<long>(m[r][c]);

  // Bareiss fraction-free elimination.
  mpz_class prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int cc = c + 1; cc < cols; ++cc) {
        mpz_class num = a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc];
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a[r][cc] = q;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

int matrix_rank(const std::vector<std::vector<long long>>& m, long long field_char) {
  return field_char == 0 ? rank_over_q(m) : rank_mod_p(m, field_char);
}

}  // namespace covres
