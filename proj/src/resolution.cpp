#include "covres/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <deque>
#include <functional>
#include <set>
#include <thread>

namespace covres {

int BettiTable::pdim() const {
  int p = 0;
  for (const auto& [key, mult] : entries)
    if (mult > 0) p = std::max(p, key.first);
  return p;
}

long long BettiTable::total(int i) const {
  long long t = 0;
  for (const auto& [key, mult] : entries)
    if (key.first == i) t += mult;
  return t;
}

std::vector<long long> BettiTable::quotient_betti_vector() const {
  std::vector<long long> v(pdim() + 1, 0);
  for (const auto& [key, mult] : entries) v[key.first] += mult;
  return v;
}

std::vector<long long> BettiTable::ideal_betti_vector() const {
  auto v = quotient_betti_vector();
  return {v.begin() + 1, v.end()};
}

long long BettiTable::max_shift(int i) const {
  long long best = LLONG_MIN;
  for (const auto& [key, mult] : entries)
    if (key.first == i && mult > 0) best = std::max(best, key.second);
  return best;
}

std::vector<std::vector<int>> lcm_lattice(const MonomialIdeal& I, std::size_t cap) {
  std::set<std::vector<int>> known;
  std::deque<std::vector<int>> queue;
  for (const Monomial& g : I.gens())
    if (known.insert(g.e).second) queue.push_back(g.e);
  while (!queue.empty()) {
    std::vector<int> b = std::move(queue.front());
    queue.pop_front();
    for (const Monomial& g : I.gens()) {
      std::vector<int> j(b);
      for (int k = 0; k < I.num_vars(); ++k) j[k] = std::max(j[k], g.e[k]);
      if (known.insert(j).second) {
        if (known.size() > cap)
          throw ResourceLimitError("lcm lattice exceeds cap");
        queue.push_back(std::move(j));
      }
    }
  }
  std::vector<std::vector<int>> out(known.begin(), known.end());
  const Grading& g = I.grading();
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    long long wa = 0, wb = 0;
    for (int k = 0; k < I.num_vars(); ++k) {
      wa += (long long)a[k] * g.var_degrees[k];
      wb += (long long)b[k] * g.var_degrees[k];
    }
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& I,
                                       const std::vector<int>& b) {
  const int n = I.num_vars();
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("degree arity mismatch");
  if (n > 31) throw ResourceLimitError("upper Koszul complex capped at 31 variables");
  std::uint32_t support = 0;
  for (int k = 0; k < n; ++k)
    if (b[k] > 0) support |= 1u << k;

  std::vector<std::uint32_t> faces;
  std::uint32_t tau = 0;
  while (true) {  // all submasks of support, ascending
    std::vector<int> rest(b);
    for (int k = 0; k < n; ++k)
      if ((tau >> k) & 1) --rest[k];
    if (I.contains(Monomial(std::move(rest)))) faces.push_back(tau);
    if (tau == support) break;
    tau = (tau - support) & support;
  }
  return make_complex(n, std::move(faces));
}

namespace {

// beta_{i,b}(I) for one lattice point: ranks[i] = dim H~_{i-1}(K^b).
std::vector<long long> point_betti(const MonomialIdeal& I, const std::vector<int>& b,
                                   long long field_char) {
  return reduced_homology_ranks(upper_koszul_complex(I, b), field_char);
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& I, const EngineOptions& opt) {
  const auto lattice = lcm_lattice(I, opt.lattice_cap);
  const Grading& g = I.grading();

  std::vector<std::vector<long long>> ranks(lattice.size());
  const int threads = std::max(1, opt.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < lattice.size(); ++i)
      ranks[i] = point_betti(I, lattice[i], opt.field_char);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < lattice.size();
             i = next.fetch_add(1))
          ranks[i] = point_betti(I, lattice[i], opt.field_char);
      });
    for (auto& th : pool) th.join();
  }

  BettiTable t;
  t.num_vars = I.num_vars();
  t.field_char = opt.field_char;
  t.entries[{0, 0}] = 1;
  t.multidegree_entries[{0, std::vector<int>(I.num_vars(), 0)}] = 1;
  for (std::size_t p = 0; p < lattice.size(); ++p) {
    const long long wdeg = Monomial(lattice[p]).weighted_degree(g);
    for (std::size_t i = 0; i < ranks[p].size(); ++i) {
      if (ranks[p][i] <= 0) continue;
      // Table rows describe R/I: beta_{i+1}(R/I) = beta_i(I).
      t.entries[{static_cast<int>(i) + 1, wdeg}] += ranks[p][i];
      t.multidegree_entries[{static_cast<int>(i) + 1, lattice[p]}] = ranks[p][i];
    }
  }
  return t;
}

Regularity regularity(const BettiTable& t) {
  long long reg = 0;
  for (const auto& [key, mult] : t.entries)
    if (mult > 0) reg = std::max(reg, key.second - key.first);
  return {reg, reg + 1};
}

PdimDepth pdim_and_depth(const BettiTable& t, int num_vars) {
  const int p = t.pdim();
  if (p > num_vars) throw std::invalid_argument("pdim exceeds variable count");
  return {p, num_vars - p};
}

namespace {

// Divides p by (1-t) in place; valid only when p(1) == 0.
std::vector<long long> divide_by_one_minus_t(const std::vector<long long>& p) {
  std::vector<long long> q(p.size() ? p.size() - 1 : 0, 0);
  long long carry = 0;  // q_i = p_i + q_{i-1}
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    carry += p[i];
    q[i] = carry;
  }
  return q;
}

long long eval_at_one(const std::vector<long long>& p) {
  long long s = 0;
  for (long long c : p) s += c;
  return s;
}

}  // namespace

HilbertSeries hilbert_series(const BettiTable& t, const Grading& g) {
  if (g.num_vars() != t.num_vars)
    throw std::invalid_argument("grading arity mismatch");
  long long top = 0;
  for (const auto& [key, mult] : t.entries)
    if (mult > 0) top = std::max(top, key.second);
  std::vector<long long> num(top + 1, 0);
  for (const auto& [key, mult] : t.entries) {
    const auto& [i, j] = key;
    num[j] += (i % 2 == 0 ? mult : -mult);
  }

  HilbertSeries h;
  h.numerator = num;
  h.denominator_degrees = g.var_degrees;
  h.reduced_numerator = std::move(num);
  int cancelled = 0;
  while (eval_at_one(h.reduced_numerator) == 0 &&
         !h.reduced_numerator.empty()) {
    h.reduced_numerator = divide_by_one_minus_t(h.reduced_numerator);
    ++cancelled;
  }
  while (!h.reduced_numerator.empty() && h.reduced_numerator.back() == 0)
    h.reduced_numerator.pop_back();
  if (cancelled > g.num_vars())
    throw std::logic_error("numerator vanishes to higher order than the pole");
  h.reduced_denominator_power = g.num_vars() - cancelled;
  return h;
}

std::vector<long long> expand_hilbert_series(const HilbertSeries& h, int max_degree) {
  std::vector<long long> c(max_degree + 1, 0);
  for (std::size_t j = 0; j < h.numerator.size() && j <= std::size_t(max_degree); ++j)
    c[j] = h.numerator[j];
  for (int d : h.denominator_degrees)
    for (int i = d; i <= max_degree; ++i) c[i] += c[i - d];
  return c;
}

std::vector<long long> hilbert_function_oracle(const MonomialIdeal& I, int max_degree) {
  const int n = I.num_vars();
  const Grading& g = I.grading();
  std::vector<long long> count(max_degree + 1, 0);
  std::vector<int> e(n, 0);
  std::function<void(int, long long)> walk = [&](int v, long long deg) {
    if (v == n) {
      if (!I.contains(Monomial(e))) ++count[deg];
      return;
    }
    e[v] = 0;
    for (long long d = deg; d <= max_degree; d += g.var_degrees[v], ++e[v])
      walk(v + 1, d);
    e[v] = 0;
  };
  walk(0, 0);
  return count;
}

}  // namespace covres
