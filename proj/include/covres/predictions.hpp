#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace covres {

// Closed-form values for the structured families the engine is checked
// against. Sources are stable machine tags naming the family and quantity;
// `conjecture` marks formulas that are conjectural rather than proven.
enum class Quantity {
  Reg,
  BettiVector,
  Mu,
  Pdim,
  Depth,
  LinearQuotients,
  ComplexValid
};

std::string quantity_name(Quantity q);

struct Prediction {
  std::string source;
  Quantity quantity = Quantity::Reg;
  std::map<std::string, long long> parameters;
  bool conjecture = false;
  std::variant<long long, std::vector<long long>> value;
};

// reg(J^s) for the cover ideal J of the complete bipartite graph K_{m,n},
// 1 <= m <= n, s >= 1: s*n + m - 1.
long long predict_reg_complete_bipartite(int m, int n, int s);

// Betti vector (beta_1..beta_m) of R/(J_{K_m}^s):
// beta_i = C(m-1, i-1) * C(s+m-i, m-1). Proven for m = 3, 4 (with natural
// truncation at small s, the trailing entries vanish); conjectural for m >= 5.
std::vector<long long> predict_betti_km_power(int m, int s);

// reg(J^s) for the cover ideal of a complete multipartite graph with at
// least three parts, maximizing alpha(l) + k*(n_m - 1) over compositions
// l_1+...+l_m = s with k <= l_1 and l_2..l_m <= s-k, where
// alpha(l) = sum_i (s - l_{m+1-i}) * n_i. Requires s >= 2 for three parts,
// s >= 3 for four, s >= m-1 beyond (conjectural range).
long long predict_reg_multipartite(const std::vector<int>& part_sizes, int s);

// reg(J^s) for the cover ideal of the nested bipartite family with block
// sizes (n1, n2, m1, m2). s = 1 uses max{n + m2 - 1, m + n1 - 1}; s >= 2
// maximizes the four shift families of the graded resolution.
long long predict_reg_nested_bipartite(int n1, int n2, int m1, int m2, int s);

struct CmFamilyPrediction {
  long long mu;        // 2^{n-1} + 1 minimal generators
  int pdim;            // pdim(R/J) = n
  int reg_slope;       // reg(J^s) = n*s
};
CmFamilyPrediction predict_mu_and_pdim_cm_family(int n);

// Betti vector (beta_1..beta_3) of R/(J^s) for the nested bipartite graph
// with unit blocks (the path on four vertices):
// (C(s+2,2), 2*C(s+1,2), C(s,2)); s = 1 truncates to (3, 2).
std::vector<long long> predict_betti_p4_power(int s);

long long binomial(long long n, long long k);

}  // namespace covres
