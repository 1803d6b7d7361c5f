#pragma once

#include <cstdint>
#include <vector>

namespace covres {

// Abstract simplicial complex on vertices 0..vertex_count-1, faces stored as
// bitmasks sorted by (popcount, value). A non-void complex contains the empty
// face (mask 0); the void complex has no faces at all.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::uint32_t> faces;

  bool is_void() const { return faces.empty(); }
  // Dimension of the complex: -1 for {empty face}; meaningless when void.
  int dim() const;
};

// Validates downward closure (and vertex range) before storing.
SimplicialComplex make_complex(int vertex_count, std::vector<std::uint32_t> faces);

// Ranks of the reduced homology groups over the chosen field
// (field_char == 0 for the rationals, else GF(p)).
// Result r satisfies r[k] = dim H~_{k-1}, k = 0..dim+1; in particular r[0]
// is 1 exactly for the complex {empty face}. Void complex gives all zeros.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& c,
                                              long long field_char);

}  // namespace covres
