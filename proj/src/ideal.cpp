#include "covres/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace covres {

bool Grading::is_standard() const {
  return std::all_of(var_degrees.begin(), var_degrees.end(),
                     [](int d) { return d == 1; });
}

Grading Grading::standard(int n) {
  if (n < 1) throw std::invalid_argument("ring needs at least one variable");
  return Grading{std::vector<int>(n, 1)};
}

Monomial::Monomial(std::vector<int> exponents) : e(std::move(exponents)) {
  if (e.empty()) throw std::invalid_argument("empty exponent vector");
  for (int v : e)
    if (v < 0) throw std::invalid_argument("negative exponent");
}

long long Monomial::total_degree() const {
  return std::accumulate(e.begin(), e.end(), 0LL);
}

long long Monomial::weighted_degree(const Grading& g) const {
  if (g.num_vars() != num_vars())
    throw std::invalid_argument("grading arity mismatch");
  long long d = 0;
  for (int k = 0; k < num_vars(); ++k) d += (long long)e[k] * g.var_degrees[k];
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(e.begin(), e.end(), [](int v) { return v <= 1; });
}

bool Monomial::divides(const Monomial& m) const {
  if (m.num_vars() != num_vars())
    throw std::invalid_argument("variable count mismatch");
  for (int k = 0; k < num_vars(); ++k)
    if (e[k] > m.e[k]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  if (m.num_vars() != num_vars())
    throw std::invalid_argument("variable count mismatch");
  std::vector<int> out(e);
  for (int k = 0; k < num_vars(); ++k) out[k] += m.e[k];
  return Monomial(std::move(out));
}

Monomial Monomial::operator/(const Monomial& m) const {
  if (!m.divides(*this)) throw std::invalid_argument("inexact monomial quotient");
  std::vector<int> out(e);
  for (int k = 0; k < num_vars(); ++k) out[k] -= m.e[k];
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("variable count mismatch");
  std::vector<int> out(a.e);
  for (int k = 0; k < b.num_vars(); ++k) out[k] = std::max(out[k], b.e[k]);
  return Monomial(std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("variable count mismatch");
  std::vector<int> out(a.e);
  for (int k = 0; k < b.num_vars(); ++k) out[k] = std::min(out[k], b.e[k]);
  return Monomial(std::move(out));
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < m.num_vars(); ++k) {
    if (m.e[k] == 0) continue;
    if (!first) os << '*';
    os << 'x' << (k + 1);
    if (m.e[k] > 1) os << '^' << m.e[k];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

bool canonical_less(const Monomial& a, const Monomial& b, const Grading& g) {
  const long long wa = a.weighted_degree(g), wb = b.weighted_degree(g);
  if (wa != wb) return wa < wb;
  for (int k = a.num_vars() - 1; k >= 0; --k)
    if (a.e[k] != b.e[k]) return a.e[k] > b.e[k];
  return false;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens, const Grading& g) {
  std::sort(gens.begin(), gens.end(),
            [&](const Monomial& a, const Monomial& b) { return canonical_less(a, b, g); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(Grading grading, std::vector<Monomial> generators)
    : grading_(std::move(grading)) {
  if (generators.empty()) throw std::invalid_argument("ideal needs generators");
  for (const Monomial& m : generators) {
    if (m.num_vars() != grading_.num_vars())
      throw std::invalid_argument("generator arity mismatch");
    if (m.is_one()) throw std::invalid_argument("unit ideal not representable");
  }
  for (int d : grading_.var_degrees)
    if (d < 1) throw std::invalid_argument("variable degrees must be >= 1");
  gens_ = minimalize(std::move(generators), grading_);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

MonomialIdeal cover_ideal(const Graph& g, bool compressed) {
  const auto covers = minimal_vertex_covers(g);
  if (!compressed) {
    std::vector<Monomial> gens;
    for (const VertexCover& c : covers) {
      std::vector<int> e(g.vertex_count, 0);
      for (int v : c.vertices) e[v] = 1;
      gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(Grading::standard(g.vertex_count), std::move(gens));
  }

  if (!g.parts)
    throw std::invalid_argument("compressed cover ideal needs a graph with parts");
  const auto& parts = *g.parts;
  std::vector<int> owner(g.vertex_count, -1);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (int v : parts[k]) owner[v] = static_cast<int>(k);

  std::vector<Monomial> gens;
  for (const VertexCover& c : covers) {
    std::vector<int> hit(parts.size(), 0);
    for (int v : c.vertices) ++hit[owner[v]];
    std::vector<int> e(parts.size(), 0);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (hit[k] == 0) continue;
      if (hit[k] != static_cast<int>(parts[k].size()))
        throw std::invalid_argument(
            "compressed cover ideal: a minimal cover is not a union of parts");
      e[k] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  std::vector<int> degrees;
  for (const auto& p : parts) degrees.push_back(static_cast<int>(p.size()));
  return MonomialIdeal(Grading{std::move(degrees)}, std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (auto& [a, b] : g.edges) {
    std::vector<int> e(g.vertex_count, 0);
    e[a] = e[b] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(Grading::standard(g.vertex_count), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!(I.grading() == J.grading()))
    throw std::invalid_argument("product needs a common ring");
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const Monomial& a : I.gens())
    for (const Monomial& b : J.gens()) gens.push_back(a * b);
  return MonomialIdeal(I.grading(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int s) {
  if (s < 1) throw std::invalid_argument("power needs s >= 1");
  const auto& g = I.gens();
  const std::size_t mu = g.size();
  // Combinations with repetition; cap the enumeration defensively.
  double projected = 1;
  for (int k = 1; k <= s; ++k) projected *= double(mu + s - k) / k;
  if (projected > 5e6)
    throw ResourceLimitError("power expansion too large");

  std::vector<Monomial> out;
  std::vector<int> pick;
  std::function<void(std::size_t, int, Monomial)> walk =
      [&](std::size_t from, int left, Monomial acc) {
        if (left == 0) {
          out.push_back(std::move(acc));
          return;
        }
        for (std::size_t k = from; k < mu; ++k) walk(k, left - 1, acc * g[k]);
      };
  Monomial one{std::vector<int>(I.num_vars(), 0)};
  // The unit monomial is only a seed for the products, never a generator.
  walk(0, s, one);
  return MonomialIdeal(I.grading(), std::move(out));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const Monomial& g : I.gens()) {
    Monomial q = g / gcd(g, m);
    if (q.is_one())
      throw std::domain_error("colon gives the unit ideal (m lies in I)");
    gens.push_back(std::move(q));
  }
  return MonomialIdeal(I.grading(), std::move(gens));
}

LinearQuotientsResult has_linear_quotients(const MonomialIdeal& I,
                                           const std::vector<int>& order) {
  const auto& g = I.gens();
  const int mu = static_cast<int>(g.size());
  std::vector<char> seen(mu, 0);
  if (static_cast<int>(order.size()) != mu)
    throw std::invalid_argument("order must be a permutation of the generators");
  for (int k : order) {
    if (k < 0 || k >= mu || seen[k])
      throw std::invalid_argument("order must be a permutation of the generators");
    seen[k] = 1;
  }
  for (int j = 1; j < mu; ++j) {
    std::vector<Monomial> colon;
    for (int k = 0; k < j; ++k)
      colon.push_back(g[order[k]] / gcd(g[order[k]], g[order[j]]));
    for (const Monomial& q : minimalize(std::move(colon), I.grading()))
      if (q.total_degree() != 1) return {false, j};
  }
  return {true, -1};
}

LinearQuotientsResult has_linear_quotients(const MonomialIdeal& I) {
  std::vector<int> order(I.gens().size());
  std::iota(order.begin(), order.end(), 0);
  return has_linear_quotients(I, order);
}

bool is_complete_intersection(const MonomialIdeal& I) {
  const auto& g = I.gens();
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (!gcd(g[a], g[b]).is_one()) return false;
  return true;
}

MonomialIdeal alexander_dual_squarefree(const MonomialIdeal& I) {
  if (!I.is_squarefree())
    throw std::invalid_argument("Alexander dual needs a squarefree ideal");
  const int n = I.num_vars();
  if (n > 24) throw ResourceLimitError("dual enumeration capped at 24 variables");

  std::vector<std::uint32_t> supports;
  for (const Monomial& m : I.gens()) {
    std::uint32_t mask = 0;
    for (int k = 0; k < n; ++k)
      if (m.e[k]) mask |= 1u << k;
    supports.push_back(mask);
  }

  // Branch on the first unhit support; leaves are transversals.
  std::set<std::uint32_t> leaves;
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t chosen) {
    for (std::uint32_t s : supports) {
      if (s & chosen) continue;
      for (int v = 0; v < n; ++v)
        if ((s >> v) & 1) walk(chosen | (1u << v));
      return;
    }
    leaves.insert(chosen);
  };
  walk(0);

  std::vector<Monomial> gens;
  for (std::uint32_t t : leaves) {
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v) {
      if (!((t >> v) & 1)) continue;
      bool witness = false;  // some support hit only through v
      for (std::uint32_t s : supports)
        if ((s & t) == (1u << v)) {
          witness = true;
          break;
        }
      if (!witness) minimal = false;
    }
    if (!minimal) continue;
    std::vector<int> e(n, 0);
    for (int v = 0; v < n; ++v)
      if ((t >> v) & 1) e[v] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(I.grading(), std::move(gens));
}

}  // namespace covres
