#include "covres/simplicial.hpp"

#include "covres/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace covres {

int SimplicialComplex::dim() const {
  if (faces.empty()) throw std::logic_error("void complex has no dimension");
  return std::popcount(faces.back()) - 1;
}

SimplicialComplex make_complex(int vertex_count, std::vector<std::uint32_t> faces) {
  if (vertex_count < 0 || vertex_count > 31)
    throw std::invalid_argument("vertex count out of range");
  const std::uint32_t all =
      vertex_count == 0 ? 0u : ((vertex_count == 31) ? 0x7fffffffu : (1u << vertex_count) - 1);
  std::sort(faces.begin(), faces.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::unordered_map<std::uint32_t, char> present;
  for (std::uint32_t f : faces) present[f] = 1;
  for (std::uint32_t f : faces) {
    if (f & ~all) throw std::invalid_argument("face outside vertex range");
    for (int v = 0; v < vertex_count; ++v)
      if ((f >> v) & 1)
        if (!present.count(f & ~(1u << v)))
          throw std::invalid_argument("faces not downward closed");
  }
  SimplicialComplex c;
  c.vertex_count = vertex_count;
  c.faces = std::move(faces);
  return c;
}

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& c,
                                              long long field_char) {
  if (c.is_void()) return {};

  // Faces grouped by vertex count; layer[k] holds the k-vertex faces.
  std::vector<std::vector<std::uint32_t>> layer;
  for (std::uint32_t f : c.faces) {
    const int k = std::popcount(f);
    if (static_cast<int>(layer.size()) <= k) layer.resize(k + 1);
    layer[k].push_back(f);
  }
  const int top = static_cast<int>(layer.size()) - 1;

  // boundary_rank[k] = rank of the map from k-vertex chains to (k-1)-vertex
  // chains, k = 1..top.
  std::vector<int> boundary_rank(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    std::unordered_map<std::uint32_t, int> row;
    for (std::size_t i = 0; i < layer[k - 1].size(); ++i)
      row[layer[k - 1][i]] = static_cast<int>(i);
    std::vector<std::vector<long long>> m(
        layer[k - 1].size(), std::vector<long long>(layer[k].size(), 0));
    for (std::size_t col = 0; col < layer[k].size(); ++col) {
      const std::uint32_t f = layer[k][col];
      int sign = 1;
      for (int v = 0; v < c.vertex_count; ++v) {
        if (!((f >> v) & 1)) continue;
        m[row.at(f & ~(1u << v))][col] = sign;
        sign = -sign;
      }
    }
    boundary_rank[k] = matrix_rank(m, field_char);
  }

  std::vector<long long> h(top + 1, 0);
  for (int k = 0; k <= top; ++k)
    h[k] = static_cast<long long>(layer[k].size()) - boundary_rank[k] -
           boundary_rank[k + 1];
  return h;
}

}  // namespace covres
