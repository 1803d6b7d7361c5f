#pragma once

#include "covres/graph.hpp"

#include <string>
#include <vector>

namespace covres {

// Weights turning the polynomial ring into a graded ring where variable k
// has degree var_degrees[k] (>= 1). The standard grading has all weights 1.
struct Grading {
  std::vector<int> var_degrees;

  int num_vars() const { return static_cast<int>(var_degrees.size()); }
  bool is_standard() const;
  static Grading standard(int n);
  bool operator==(const Grading&) const = default;
};

// Monomial as an exponent vector. Exponents are non-negative machine ints;
// degree arithmetic is done in 64 bits.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  int num_vars() const { return static_cast<int>(e.size()); }
  long long total_degree() const;
  long long weighted_degree(const Grading& g) const;
  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // Exact quotient; requires m | *this.
  Monomial operator/(const Monomial& m) const;
  bool operator==(const Monomial&) const = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// Text form "x1^2*x3" with 1-based variable indices; "1" for the unit.
std::string to_string(const Monomial& m);

// Ascending generator order: weighted degree first, ties by reverse
// lexicographic comparison with x1 > x2 > ... (graded reverse-lex).
bool canonical_less(const Monomial& a, const Monomial& b, const Grading& g);

// Removes duplicates and any monomial divisible by another; sorts canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens, const Grading& g);

// Proper monomial ideal given by its unique minimal generating set, stored in
// canonical order.
class MonomialIdeal {
 public:
  MonomialIdeal(Grading grading, std::vector<Monomial> generators);

  const Grading& grading() const { return grading_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int num_vars() const { return grading_.num_vars(); }
  // Membership test: some minimal generator divides m.
  bool contains(const Monomial& m) const;
  bool is_squarefree() const;
  bool operator==(const MonomialIdeal&) const = default;

 private:
  Grading grading_;
  std::vector<Monomial> gens_;
};

// Ideal generated by the minimal vertex covers of g. Uncompressed: one
// degree-1 variable per vertex. Compressed: requires g.parts and every
// minimal cover to be a union of whole parts; one variable per part, graded
// by part size.
MonomialIdeal cover_ideal(const Graph& g, bool compressed = false);

// Ideal generated by x_a*x_b over the edges {a,b} of g (standard grading).
MonomialIdeal edge_ideal(const Graph& g);

// s-th power (s >= 1), via all s-fold products of generators, minimalized.
MonomialIdeal power(const MonomialIdeal& I, int s);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

// (I : m), computed generator-wise as g/gcd(g,m). Throws if the result is
// the unit ideal (m in I), which this type cannot represent.
MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& m);

struct LinearQuotientsResult {
  bool has;           // every successive colon is generated by variables
  int first_failure;  // position in the supplied order, -1 when has == true
};

// Checks whether (g_{o_0},...,g_{o_{j-1}}) : g_{o_j} is generated by single
// variables for every j >= 1. `order` is a permutation of 0..mu-1; the
// one-argument overload uses the stored canonical order.
LinearQuotientsResult has_linear_quotients(const MonomialIdeal& I,
                                           const std::vector<int>& order);
LinearQuotientsResult has_linear_quotients(const MonomialIdeal& I);

// True when the minimal generators have pairwise disjoint supports.
bool is_complete_intersection(const MonomialIdeal& I);

// Alexander dual of a squarefree monomial ideal: generators are the minimal
// transversals of the generator supports. Requires num_vars <= 24.
MonomialIdeal alexander_dual_squarefree(const MonomialIdeal& I);

}  // namespace covres
