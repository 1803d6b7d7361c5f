#pragma once

#include "covres/ideal.hpp"
#include "covres/resolution.hpp"

#include <string>
#include <vector>

namespace covres {

// One signed monomial entry of a sparse matrix column.
struct MonomialEntry {
  int row = 0;
  int sign = 1;  // +1 or -1
  Monomial mono;
};

struct SparseMonomialMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<MonomialEntry>> columns;
};

// Chain complex R <- F_1 <- ... <- F_p of free modules with monomial
// matrices, plus the weighted degree of every basis element
// (shifts[k][c] for column c of F_k; shifts[0] = {0} for F_0 = R).
struct ExplicitComplex {
  Grading ring;
  std::vector<SparseMonomialMatrix> matrices;  // matrices[k-1] = del_k
  std::vector<std::vector<long long>> shifts;

  int length() const { return static_cast<int>(matrices.size()); }
};

enum class ComplexFamily { K3, K4, P4 };

// Hand-indexed minimal free resolution of R/(J^s) for the three closed-form
// families: K3 (three variables, squarefree quadric generators), K4 (four
// variables, squarefree cubics), P4 (four variables, the nested bipartite
// skeleton (X1X2, X1Y2, Y1Y2)). The grading supplies the variable weights
// (standard or block sizes); its arity must match the family. s >= 1; the
// tail modules are empty for small s and such zero-column steps are trimmed.
ExplicitComplex build_explicit_complex(ComplexFamily family, int s,
                                       const Grading& ring);

struct ComplexValidation {
  bool composes_to_zero = false;    // del_k . del_{k+1} = 0 exactly
  bool generators_match = false;    // del_1 columns = minimal generators
  bool entries_nonunit = false;     // no invertible (degree-0) entries
  bool betti_match = false;         // column counts and shifts = Betti table
  bool last_map_injective = false;  // full column rank over the fraction field
  std::string detail;               // first failure, empty when all pass

  bool all() const {
    return composes_to_zero && generators_match && entries_nonunit &&
           betti_match && last_map_injective;
  }
};

// Validates the complex against the ideal power it should resolve and the
// engine's Betti table for it.
ComplexValidation validate_explicit_complex(const ExplicitComplex& c,
                                            const MonomialIdeal& ideal_power,
                                            const BettiTable& table);

}  // namespace covres
