#include "covres/explicit_complex.hpp"

#include "covres/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace covres {

namespace {

using Tuple = std::vector<int>;

// Compositions of s into `parts` non-negative parts, lexicographic.
std::vector<Tuple> compositions(int s, int parts) {
  std::vector<Tuple> out;
  Tuple cur(parts, 0);
  std::function<void(int, int)> walk = [&](int idx, int left) {
    if (idx == parts - 1) {
      cur[idx] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[idx] = v;
      walk(idx + 1, left - v);
    }
  };
  walk(0, s);
  return out;
}

Tuple shift(const Tuple& l, int from, int to) {  // l - e_from + e_to, 1-based
  Tuple m(l);
  --m[from - 1];
  ++m[to - 1];
  return m;
}

Monomial variable(int n, int k) {  // 1-based
  std::vector<int> e(n, 0);
  e[k - 1] = 1;
  return Monomial(std::move(e));
}

struct Builder {
  const Grading& ring;
  ExplicitComplex out;
  std::vector<long long> prev_shifts{0};  // shifts of the codomain basis

  explicit Builder(const Grading& g) : ring(g) {
    out.ring = g;
    out.shifts.push_back({0});
  }

  void add_matrix(int cols,
                  const std::function<std::vector<MonomialEntry>(int)>& column) {
    SparseMonomialMatrix m;
    m.rows = static_cast<int>(prev_shifts.size());
    m.cols = cols;
    std::vector<long long> shifts;
    for (int c = 0; c < cols; ++c) {
      auto entries = column(c);
      long long deg = -1;
      for (const MonomialEntry& en : entries) {
        if (en.row < 0 || en.row >= m.rows)
          throw std::logic_error("explicit complex row out of range");
        const long long d =
            en.mono.weighted_degree(ring) + prev_shifts[en.row];
        if (deg == -1) deg = d;
        else if (deg != d)
          throw std::logic_error("explicit complex column not homogeneous");
      }
      shifts.push_back(deg);
      m.columns.push_back(std::move(entries));
    }
    prev_shifts = shifts;
    out.matrices.push_back(std::move(m));
    out.shifts.push_back(std::move(shifts));
  }

  ExplicitComplex take() {
    while (!out.matrices.empty() && out.matrices.back().cols == 0) {
      out.matrices.pop_back();
      out.shifts.pop_back();
    }
    return std::move(out);
  }
};

ExplicitComplex build_k3(int s, const Grading& ring) {
  const int n = 3;
  const auto f1 = compositions(s, 3);
  std::map<Tuple, int> idx1;
  for (std::size_t i = 0; i < f1.size(); ++i) idx1[f1[i]] = static_cast<int>(i);

  std::vector<std::pair<int, Tuple>> f2;  // (family, parameter tuple)
  for (int t = 1; t <= 2; ++t)
    for (const Tuple& l : f1)
      if (l[0] >= 1) f2.emplace_back(t, l);
  std::map<std::pair<int, Tuple>, int> idx2;
  for (std::size_t i = 0; i < f2.size(); ++i) idx2[f2[i]] = static_cast<int>(i);

  std::vector<Tuple> f3;
  for (const Tuple& l : f1)
    if (l[0] >= 2) f3.push_back(l);

  Builder b(ring);
  b.add_matrix(static_cast<int>(f1.size()), [&](int c) {
    const Tuple& l = f1[c];
    return std::vector<MonomialEntry>{
        {0, +1, Monomial({s - l[2], s - l[1], s - l[0]})}};
  });
  b.add_matrix(static_cast<int>(f2.size()), [&](int c) {
    const auto& [t, l] = f2[c];
    if (t == 1)
      return std::vector<MonomialEntry>{
          {idx1.at(shift(l, 1, 2)), +1, variable(n, 2)},
          {idx1.at(shift(l, 1, 3)), -1, variable(n, 1)}};
    return std::vector<MonomialEntry>{
        {idx1.at(l), +1, variable(n, 3)},
        {idx1.at(shift(l, 1, 2)), -1, variable(n, 2)}};
  });
  b.add_matrix(static_cast<int>(f3.size()), [&](int c) {
    const Tuple& l = f3[c];
    return std::vector<MonomialEntry>{
        {idx2.at({2, shift(l, 1, 3)}), -1, variable(n, 1)},
        {idx2.at({2, shift(l, 1, 2)}), +1, variable(n, 2)},
        {idx2.at({1, shift(l, 1, 2)}), +1, variable(n, 2)},
        {idx2.at({1, l}), -1, variable(n, 3)}};
  });
  return b.take();
}

ExplicitComplex build_k4(int s, const Grading& ring) {
  const int n = 4;
  const auto f1 = compositions(s, 4);
  std::map<Tuple, int> idx1;
  for (std::size_t i = 0; i < f1.size(); ++i) idx1[f1[i]] = static_cast<int>(i);

  auto family = [&](int min_l1) {
    std::vector<std::pair<int, Tuple>> fam;
    for (int t = 1; t <= 3; ++t)
      for (const Tuple& l : f1)
        if (l[0] >= min_l1) fam.emplace_back(t, l);
    return fam;
  };
  const auto f2 = family(1), f3 = family(2);
  std::map<std::pair<int, Tuple>, int> idx2, idx3;
  for (std::size_t i = 0; i < f2.size(); ++i) idx2[f2[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < f3.size(); ++i) idx3[f3[i]] = static_cast<int>(i);
  std::vector<Tuple> f4;
  for (const Tuple& l : f1)
    if (l[0] >= 3) f4.push_back(l);

  Builder b(ring);
  b.add_matrix(static_cast<int>(f1.size()), [&](int c) {
    const Tuple& l = f1[c];
    return std::vector<MonomialEntry>{
        {0, +1, Monomial({s - l[3], s - l[2], s - l[1], s - l[0]})}};
  });
  b.add_matrix(static_cast<int>(f2.size()), [&](int c) {
    const auto& [t, l] = f2[c];
    switch (t) {
      case 1:
        return std::vector<MonomialEntry>{
            {idx1.at(shift(l, 1, 3)), +1, variable(n, 2)},
            {idx1.at(shift(l, 1, 4)), -1, variable(n, 1)}};
      case 2:
        return std::vector<MonomialEntry>{
            {idx1.at(shift(l, 1, 2)), +1, variable(n, 3)},
            {idx1.at(shift(l, 1, 3)), -1, variable(n, 2)}};
      default:
        return std::vector<MonomialEntry>{
            {idx1.at(l), +1, variable(n, 4)},
            {idx1.at(shift(l, 1, 2)), -1, variable(n, 3)}};
    }
  });
  b.add_matrix(static_cast<int>(f3.size()), [&](int c) {
    const auto& [t, l] = f3[c];
    const Tuple l2 = shift(l, 1, 2), l3 = shift(l, 1, 3), l4 = shift(l, 1, 4);
    switch (t) {
      case 1:
        return std::vector<MonomialEntry>{
            {idx2.at({2, l}), +1, variable(n, 4)},
            {idx2.at({1, l}), +1, variable(n, 4)},
            {idx2.at({3, l2}), -1, variable(n, 3)},
            {idx2.at({2, l2}), -1, variable(n, 3)},
            {idx2.at({1, l2}), -1, variable(n, 3)},
            {idx2.at({3, l4}), +1, variable(n, 1)}};
      case 2:
        return std::vector<MonomialEntry>{
            {idx2.at({1, l}), +1, variable(n, 4)},
            {idx2.at({1, l2}), -1, variable(n, 3)},
            {idx2.at({3, l3}), -1, variable(n, 2)},
            {idx2.at({3, l4}), +1, variable(n, 1)}};
      default:
        return std::vector<MonomialEntry>{
            {idx2.at({1, l2}), +1, variable(n, 3)},
            {idx2.at({2, l3}), -1, variable(n, 2)},
            {idx2.at({1, l3}), -1, variable(n, 2)},
            {idx2.at({2, l4}), +1, variable(n, 1)}};
    }
  });
  b.add_matrix(static_cast<int>(f4.size()), [&](int c) {
    const Tuple& l = f4[c];
    const Tuple l2 = shift(l, 1, 2), l3 = shift(l, 1, 3), l4 = shift(l, 1, 4);
    return std::vector<MonomialEntry>{
        {idx3.at({3, l}), +1, variable(n, 4)},
        {idx3.at({2, l2}), -1, variable(n, 3)},
        {idx3.at({3, l2}), -1, variable(n, 3)},
        {idx3.at({1, l3}), +1, variable(n, 2)},
        {idx3.at({1, l4}), -1, variable(n, 1)},
        {idx3.at({2, l4}), +1, variable(n, 1)}};
  });
  return b.take();
}

ExplicitComplex build_p4(int s, const Grading& ring) {
  const int n = 4;  // variables X1, X2, Y1, Y2
  std::vector<std::pair<int, int>> f1;  // (i, j), j <= i
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j <= i; ++j) f1.emplace_back(i, j);
  std::map<std::pair<int, int>, int> idx1;
  for (std::size_t k = 0; k < f1.size(); ++k) idx1[f1[k]] = static_cast<int>(k);

  std::vector<std::tuple<int, int, int>> f2;  // (family, i, p)
  for (int t = 1; t <= 2; ++t)
    for (int i = 1; i <= s; ++i)
      for (int p = 0; p < i; ++p) f2.emplace_back(t, i, p);
  std::map<std::tuple<int, int, int>, int> idx2;
  for (std::size_t k = 0; k < f2.size(); ++k) idx2[f2[k]] = static_cast<int>(k);

  std::vector<std::pair<int, int>> f3;  // (i, j), j < i < s
  for (int i = 1; i < s; ++i)
    for (int j = 0; j < i; ++j) f3.emplace_back(i, j);

  Builder b(ring);
  b.add_matrix(static_cast<int>(f1.size()), [&](int c) {
    const auto& [i, j] = f1[c];
    return std::vector<MonomialEntry>{{0, +1, Monomial({s - j, s - i, j, i})}};
  });
  b.add_matrix(static_cast<int>(f2.size()), [&](int c) {
    const auto& [t, i, p] = f2[c];
    if (t == 1)
      return std::vector<MonomialEntry>{
          {idx1.at({i, p}), +1, variable(n, 3)},
          {idx1.at({i, p + 1}), -1, variable(n, 1)}};
    return std::vector<MonomialEntry>{
        {idx1.at({i, p}), +1, variable(n, 2)},
        {idx1.at({i - 1, p}), -1, variable(n, 4)}};
  });
  b.add_matrix(static_cast<int>(f3.size()), [&](int c) {
    const auto& [i, j] = f3[c];
    return std::vector<MonomialEntry>{
        {idx2.at({1, i, j}), +1, variable(n, 4)},
        {idx2.at({1, i + 1, j}), -1, variable(n, 2)},
        {idx2.at({2, i + 1, j}), +1, variable(n, 3)},
        {idx2.at({2, i + 1, j + 1}), -1, variable(n, 1)}};
  });
  return b.take();
}

}  // namespace

ExplicitComplex build_explicit_complex(ComplexFamily family, int s,
                                       const Grading& ring) {
  if (s < 1) throw std::invalid_argument("needs s >= 1");
  const int want = (family == ComplexFamily::K3) ? 3 : 4;
  if (ring.num_vars() != want)
    throw std::invalid_argument("grading arity does not match the family");
  switch (family) {
    case ComplexFamily::K3:
      return build_k3(s, ring);
    case ComplexFamily::K4:
      return build_k4(s, ring);
    default:
      return build_p4(s, ring);
  }
}

namespace {

bool compose_to_zero(const SparseMonomialMatrix& a, const SparseMonomialMatrix& b) {
  if (a.cols != b.rows) return false;
  for (const auto& col : b.columns) {
    std::map<std::pair<int, std::vector<int>>, long long> acc;
    for (const MonomialEntry& outer : col)
      for (const MonomialEntry& inner : a.columns[outer.row]) {
        const Monomial prod = inner.mono * outer.mono;
        acc[{inner.row, prod.e}] += (long long)inner.sign * outer.sign;
      }
    for (const auto& [key, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

}  // namespace

ComplexValidation validate_explicit_complex(const ExplicitComplex& c,
                                            const MonomialIdeal& ideal_power,
                                            const BettiTable& table) {
  ComplexValidation v;
  auto fail = [&](const std::string& what) {
    if (v.detail.empty()) v.detail = what;
  };

  v.composes_to_zero = true;
  for (int k = 0; k + 1 < c.length(); ++k)
    if (!compose_to_zero(c.matrices[k], c.matrices[k + 1])) {
      v.composes_to_zero = false;
      fail("matrices " + std::to_string(k + 1) + "," + std::to_string(k + 2) +
           " do not compose to zero");
      break;
    }

  // First matrix carries the generators, one per column, positive sign.
  std::vector<Monomial> cols;
  if (c.length() >= 1) {
    for (const auto& col : c.matrices[0].columns)
      if (col.size() == 1 && col[0].sign == 1) cols.push_back(col[0].mono);
    cols = minimalize(cols, c.ring);
  }
  v.generators_match =
      c.length() >= 1 &&
      cols.size() == c.matrices[0].columns.size() &&
      cols == ideal_power.gens();
  if (!v.generators_match) fail("first matrix does not list the minimal generators");

  v.entries_nonunit = true;
  for (const auto& m : c.matrices)
    for (const auto& col : m.columns)
      for (const MonomialEntry& en : col)
        if (en.mono.total_degree() < 1) {
          v.entries_nonunit = false;
          fail("unit entry found");
        }

  v.betti_match = c.length() == table.pdim();
  if (!v.betti_match) fail("length differs from pdim");
  for (int k = 1; k <= c.length() && v.betti_match; ++k) {
    std::map<long long, long long> want, got;
    for (const auto& [key, mult] : table.entries)
      if (key.first == k && mult > 0) want[key.second] += mult;
    for (long long sft : c.shifts[k]) ++got[sft];
    if (want != got) {
      v.betti_match = false;
      fail("shift multiset differs from the Betti table at step " +
           std::to_string(k));
    }
  }

  // Injectivity of the last map, certified by a substitution homomorphism:
  // evaluating variables at distinct primes can only drop the rank, so full
  // column rank of the integer matrix proves full rank over the fraction field.
  v.last_map_injective = false;
  if (c.length() >= 1) {
    static const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    const auto& last = c.matrices.back();
    std::vector<std::vector<long long>> m(last.rows,
                                          std::vector<long long>(last.cols, 0));
    bool overflow = false;
    for (int col = 0; col < last.cols && !overflow; ++col)
      for (const MonomialEntry& en : last.columns[col]) {
        long long val = en.sign;
        for (int k = 0; k < en.mono.num_vars(); ++k)
          for (int e = 0; e < en.mono.e[k]; ++e) {
            val *= primes[k];
            if (std::abs(val) > (1LL << 40)) {
              overflow = true;
              break;
            }
          }
        m[en.row][col] += val;
      }
    if (!overflow && rank_over_q(m) == last.cols) v.last_map_injective = true;
  }
  if (!v.last_map_injective) fail("last matrix is not injective");

  return v;
}

}  // namespace covres
