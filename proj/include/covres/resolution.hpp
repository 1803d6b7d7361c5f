#pragma once

#include "covres/ideal.hpp"
#include "covres/simplicial.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace covres {

// Graded Betti numbers of the quotient R/I: entries[(i, j)] = beta_{i,j}(R/I)
// with j the weighted coarse degree; beta_{i+1}(R/I) = beta_i(I) and
// beta_{0,0} = 1. Multidegree entries keep the full exponent vectors.
struct BettiTable {
  int num_vars = 0;
  long long field_char = 32003;
  std::map<std::pair<int, long long>, long long> entries;
  std::map<std::pair<int, std::vector<int>>, long long> multidegree_entries;

  int pdim() const;
  long long total(int i) const;
  // beta_i(R/I) for i = 0..pdim.
  std::vector<long long> quotient_betti_vector() const;
  // beta_i(I^...) for i = 1..pdim, i.e. the vector the closed forms describe.
  std::vector<long long> ideal_betti_vector() const;
  // Largest j with entries[(i,j)] != 0, or LLONG_MIN when the row is empty.
  long long max_shift(int i) const;
};

// All lcms of non-empty subsets of the generators (closure of the generator
// set under pairwise join), sorted by weighted degree then lexicographically.
// Throws ResourceLimitError when the closure exceeds `cap` elements.
std::vector<std::vector<int>> lcm_lattice(const MonomialIdeal& I,
                                          std::size_t cap = 200000);

// Upper Koszul simplicial complex of I at exponent b: faces are the
// squarefree tau <= b with x^{b-tau} in I.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& I,
                                       const std::vector<int>& b);

struct EngineOptions {
  long long field_char = 32003;  // 0 = rationals
  std::size_t lattice_cap = 200000;
  int threads = 1;
};

// Minimal graded free resolution data of R/I, via reduced homology of the
// upper Koszul complexes at the lcm-lattice points:
// beta_{i,b}(I) = dim H~_{i-1}(K^b(I)).
BettiTable betti_table(const MonomialIdeal& I, const EngineOptions& opt = {});

struct Regularity {
  long long quotient;  // reg(R/I) = max over nonzero beta_{i,j} of j - i
  long long ideal;     // reg(I) = reg(R/I) + 1
};
Regularity regularity(const BettiTable& t);

struct PdimDepth {
  int pdim;
  int depth;  // num_vars - pdim (Auslander-Buchsbaum)
};
PdimDepth pdim_and_depth(const BettiTable& t, int num_vars);

// Hilbert series of R/I as numerator / prod_k (1 - t^{d_k}).
// The reduced form divides the numerator by (1-t)^v where v is the
// multiplicity of the root t=1, so reduced_numerator(1) != 0 and
// reduced_denominator_power = num_vars - v is the order of the pole at t=1
// (the Krull dimension). Under the standard grading the series equals
// reduced_numerator / (1-t)^reduced_denominator_power.
struct HilbertSeries {
  std::vector<long long> numerator;
  std::vector<int> denominator_degrees;
  std::vector<long long> reduced_numerator;
  int reduced_denominator_power = 0;
};

HilbertSeries hilbert_series(const BettiTable& t, const Grading& g);

// Power-series coefficients of the series through degree max_degree.
std::vector<long long> expand_hilbert_series(const HilbertSeries& h, int max_degree);

// Independent check: counts the monomials outside I of each weighted degree
// d <= max_degree by direct enumeration.
std::vector<long long> hilbert_function_oracle(const MonomialIdeal& I, int max_degree);

}  // namespace covres
