#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace covres {

// Thrown when a computation would exceed a configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite simple undirected graph on vertices 0..vertex_count-1.
// Invariants: no loops, no duplicate edges, no isolated vertices.
// `parts`, when present, is a partition of the vertex set and every edge
// joins two distinct parts.
struct Graph {
  int vertex_count = 0;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;  // normalized a < b, sorted
  std::optional<std::vector<std::vector<int>>> parts;

  const std::string& label(int v) const { return labels.at(v); }
  bool has_edge(int a, int b) const;
};

Graph make_graph(std::vector<std::string> labels,
                 std::vector<std::pair<int, int>> edges,
                 std::optional<std::vector<std::vector<int>>> parts = std::nullopt);

// Complete multipartite graph; part k of size part_sizes[k]. All sizes >= 1,
// at least two parts. Parts are recorded on the result.
Graph build_complete_multipartite(const std::vector<int>& part_sizes);

// Bipartite graph on x1..xn, y1..yn with edges {x1,yj} for all j and {xi,yi}
// for i >= 2 (n >= 2). Parts record the bipartition {X, Y}.
Graph build_cm_bipartite_family(int n);

// Bipartite graph on X = X1 u X2 (|Xi| = ni) and Y = Y1 u Y2 (|Yi| = mi):
// every vertex of X1 joined to all of Y, every vertex of X2 joined to all of
// Y2. All block sizes >= 1. Parts record the four blocks X1, X2, Y1, Y2.
Graph build_nested_bipartite(int n1, int n2, int m1, int m2);

struct VertexCover {
  std::vector<int> vertices;  // ascending
};

bool is_vertex_cover(const Graph& g, const std::vector<int>& vertices);

// All minimal vertex covers, computed as complements of the maximal
// independent sets (exhaustive enumeration with pruning). Requires
// vertex_count <= 24. Sorted by size, then lexicographically.
std::vector<VertexCover> minimal_vertex_covers(const Graph& g);

}  // namespace covres
