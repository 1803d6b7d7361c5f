#include "covres/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace covres {

namespace {

constexpr int kCoverVertexCap = 24;

std::string part_letter(int k) {
  // x, y, z, w, v, u for the first parts; p7_, p8_, ... beyond.
  static const char letters[] = {'x', 'y', 'z', 'w', 'v', 'u'};
  if (k < 6) return std::string(1, letters[k]);
  return "p" + std::to_string(k + 1) + "_";
}

}  // namespace

bool Graph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

Graph make_graph(std::vector<std::string> labels,
                 std::vector<std::pair<int, int>> edges,
                 std::optional<std::vector<std::vector<int>>> parts) {
  const int n = static_cast<int>(labels.size());
  if (n < 2) throw std::invalid_argument("graph needs at least two vertices");
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("loop edge");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");

  std::vector<char> touched(n, 0);
  for (auto& [a, b] : edges) touched[a] = touched[b] = 1;
  for (int v = 0; v < n; ++v)
    if (!touched[v])
      throw std::invalid_argument("isolated vertex " + labels[v]);

  if (parts) {
    std::vector<int> owner(n, -1);
    for (std::size_t k = 0; k < parts->size(); ++k) {
      for (int v : (*parts)[k]) {
        if (v < 0 || v >= n) throw std::invalid_argument("part vertex out of range");
        if (owner[v] != -1) throw std::invalid_argument("parts overlap");
        owner[v] = static_cast<int>(k);
      }
    }
    for (int v = 0; v < n; ++v)
      if (owner[v] == -1) throw std::invalid_argument("parts do not cover vertex set");
    for (auto& [a, b] : edges)
      if (owner[a] == owner[b])
        throw std::invalid_argument("edge inside a part");
  }

  Graph g;
  g.vertex_count = n;
  g.labels = std::move(labels);
  g.edges = std::move(edges);
  g.parts = std::move(parts);
  return g;
}

Graph build_complete_multipartite(const std::vector<int>& part_sizes) {
  if (part_sizes.size() < 2)
    throw std::invalid_argument("complete multipartite graph needs >= 2 parts");
  for (int s : part_sizes)
    if (s < 1) throw std::invalid_argument("part sizes must be >= 1");

  std::vector<std::string> labels;
  std::vector<std::vector<int>> parts;
  for (std::size_t k = 0; k < part_sizes.size(); ++k) {
    std::vector<int> part;
    for (int i = 1; i <= part_sizes[k]; ++i) {
      part.push_back(static_cast<int>(labels.size()));
      labels.push_back(part_letter(static_cast<int>(k)) + std::to_string(i));
    }
    parts.push_back(std::move(part));
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (std::size_t l = k + 1; l < parts.size(); ++l)
      for (int a : parts[k])
        for (int b : parts[l]) edges.emplace_back(a, b);
  return make_graph(std::move(labels), std::move(edges), std::move(parts));
}

Graph build_cm_bipartite_family(int n) {
  if (n < 2) throw std::invalid_argument("family needs n >= 2");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < n; ++j) edges.emplace_back(0, n + j);
  for (int i = 1; i < n; ++i) edges.emplace_back(i, n + i);
  std::vector<std::vector<int>> parts(2);
  for (int v = 0; v < n; ++v) parts[0].push_back(v);
  for (int v = n; v < 2 * n; ++v) parts[1].push_back(v);
  return make_graph(std::move(labels), std::move(edges), std::move(parts));
}

Graph build_nested_bipartite(int n1, int n2, int m1, int m2) {
  if (n1 < 1 || n2 < 1 || m1 < 1 || m2 < 1)
    throw std::invalid_argument("all four block sizes must be >= 1");
  const int n = n1 + n2, m = m1 + m2;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= m; ++i) labels.push_back("y" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < m; ++b) edges.emplace_back(a, n + b);
  for (int a = n1; a < n; ++a)
    for (int b = m1; b < m; ++b) edges.emplace_back(a, n + b);
  std::vector<std::vector<int>> parts(4);
  for (int v = 0; v < n1; ++v) parts[0].push_back(v);
  for (int v = n1; v < n; ++v) parts[1].push_back(v);
  for (int v = n; v < n + m1; ++v) parts[2].push_back(v);
  for (int v = n + m1; v < n + m; ++v) parts[3].push_back(v);
  return make_graph(std::move(labels), std::move(edges), std::move(parts));
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& vertices) {
  std::vector<char> in(g.vertex_count, 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count) return false;
    in[v] = 1;
  }
  for (auto& [a, b] : g.edges)
    if (!in[a] && !in[b]) return false;
  return true;
}

std::vector<VertexCover> minimal_vertex_covers(const Graph& g) {
  const int n = g.vertex_count;
  if (n > kCoverVertexCap)
    throw ResourceLimitError("cover enumeration capped at 24 vertices");

  std::vector<std::uint32_t> adj(n, 0);
  for (auto& [a, b] : g.edges) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);

  std::vector<std::uint32_t> covers;
  // Depth-first over vertices: chosen = independent set so far.
  std::function<void(int, std::uint32_t)> walk = [&](int v, std::uint32_t chosen) {
    if (v == n) {
      for (int u = 0; u < n; ++u)
        if (!((chosen >> u) & 1) && !(adj[u] & chosen)) return;  // extendable
      covers.push_back(all & ~chosen);
      return;
    }
    if (!(adj[v] & chosen)) walk(v + 1, chosen | (1u << v));
    walk(v + 1, chosen);
  };
  walk(0, 0);

  std::vector<VertexCover> out;
  out.reserve(covers.size());
  for (std::uint32_t mask : covers) {
    VertexCover c;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) c.vertices.push_back(v);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const VertexCover& a, const VertexCover& b) {
    if (a.vertices.size() != b.vertices.size())
      return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

}  // namespace covres
