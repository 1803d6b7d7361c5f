#include "covres/predictions.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>

namespace covres {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long predict_reg_complete_bipartite(int m, int n, int s) {
  if (m < 1 || n < m) throw std::invalid_argument("needs 1 <= m <= n");
  if (s < 1) throw std::invalid_argument("needs s >= 1");
  return (long long)s * n + m - 1;
}

std::vector<long long> predict_betti_km_power(int m, int s) {
  if (m < 3) throw std::invalid_argument("needs m >= 3");
  if (s < 1) throw std::invalid_argument("needs s >= 1");
  std::vector<long long> beta;
  for (int i = 1; i <= m; ++i)
    beta.push_back(binomial(m - 1, i - 1) * binomial(s + m - i, m - 1));
  return beta;
}

long long predict_reg_multipartite(const std::vector<int>& part_sizes, int s) {
  const int m = static_cast<int>(part_sizes.size());
  if (m < 3) throw std::invalid_argument("needs at least three parts");
  for (int sz : part_sizes)
    if (sz < 1) throw std::invalid_argument("part sizes must be >= 1");
  const int min_s = (m == 3) ? 2 : (m == 4 ? 3 : m - 1);
  if (s < min_s) throw std::invalid_argument("power below the formula's range");

  const int nm = part_sizes[m - 1];
  long long best = LLONG_MIN;
  std::vector<int> l(m, 0);
  std::function<void(int, int)> walk = [&](int idx, int left) {
    if (idx == m - 1) {
      l[idx] = left;
      long long alpha = 0;
      for (int i = 1; i <= m; ++i)
        alpha += (long long)(s - l[m - i]) * part_sizes[i - 1];
      int tail = 0;  // largest of l_2..l_m
      for (int i = 1; i < m; ++i) tail = std::max(tail, l[i]);
      for (int k = 0; k < m; ++k)
        if (l[0] >= k && tail <= s - k)
          best = std::max(best, alpha + (long long)k * (nm - 1));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      l[idx] = v;
      walk(idx + 1, left - v);
    }
  };
  walk(0, s);
  return best;
}

long long predict_reg_nested_bipartite(int n1, int n2, int m1, int m2, int s) {
  if (n1 < 1 || n2 < 1 || m1 < 1 || m2 < 1)
    throw std::invalid_argument("block sizes must be >= 1");
  if (s < 1) throw std::invalid_argument("needs s >= 1");
  const long long n = n1 + n2, m = m1 + m2;
  if (s == 1) return std::max(n + m2 - 1, m + n1 - 1);

  long long best = LLONG_MIN;
  auto upd = [&](long long v) { best = std::max(best, v); };
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j <= i; ++j) {
      const long long base = (long long)(s - j) * n1 + (long long)(s - i) * n2 +
                             (long long)j * m1 + (long long)i * m2;
      upd(base);                                  // shifts of the generators
      if (j < i) {
        upd(base + m1 - 1);                       // first syzygy family
        upd(base + n2 - 1);                       // second syzygy family
        if (i < s) upd(base + m1 + m2 - 2);       // second syzygies
      }
    }
  return best;
}

CmFamilyPrediction predict_mu_and_pdim_cm_family(int n) {
  if (n < 2) throw std::invalid_argument("needs n >= 2");
  return {(1LL << (n - 1)) + 1, n, n};
}

std::vector<long long> predict_betti_p4_power(int s) {
  if (s < 1) throw std::invalid_argument("needs s >= 1");
  if (s == 1) return {3, 2};
  return {binomial(s + 2, 2), 2 * binomial(s + 1, 2), binomial(s, 2)};
}

std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::Reg: return "reg";
    case Quantity::BettiVector: return "betti";
    case Quantity::Mu: return "mu";
    case Quantity::Pdim: return "pdim";
    case Quantity::Depth: return "depth";
    case Quantity::LinearQuotients: return "linear-quotients";
    default: return "complex-valid";
  }
}

}  // namespace covres
