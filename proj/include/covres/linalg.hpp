#pragma once

#include <vector>

namespace covres {

// Rank of a dense integer matrix over GF(p), p an odd prime or 2.
int rank_mod_p(std::vector<std::vector<long long>> m, long long p);

// Rank over the rationals, fraction-free elimination with big integers.
int rank_over_q(const std::vector<std::vector<long long>>& m);

// field_char == 0 selects the rationals, otherwise GF(field_char).
int matrix_rank(const std::vector<std::vector<long long>>& m, long long field_char);

}  // namespace covres
