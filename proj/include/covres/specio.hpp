#pragma once

#include "covres/graph.hpp"
#include "covres/ideal.hpp"
#include "covres/resolution.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace covres {

// Malformed input file or option combination.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph spec: {"vertices": [names], "edges": [[i,j],...]} with an optional
// "parts": [[...],...], or {"family": name, "params": [ints]} with family
// one of complete_multipartite, cm_bipartite, nested_bipartite.
Graph parse_graph_spec(const nlohmann::json& spec);

// Ideal spec: {"graph": <graph spec>, "kind": "cover"|"edge",
// "compressed": bool, "power": s >= 1}; kind/compressed/power optional.
struct IdealSpec {
  nlohmann::json graph_spec;  // original form, re-emitted verbatim
  std::string kind = "cover";
  bool compressed = false;
  int power = 1;
};

IdealSpec parse_ideal_spec(const nlohmann::json& spec);
MonomialIdeal realize_ideal(const IdealSpec& spec);

nlohmann::json ideal_spec_json(const IdealSpec& spec);
// Ideal spec plus generators/grading; feeding the result back as an ideal
// spec reproduces the same ideal (extra keys are ignored by the parser).
nlohmann::json ideal_output_json(const IdealSpec& spec, const MonomialIdeal& I);

nlohmann::json betti_output_json(const BettiTable& t, const Grading& g);

}  // namespace covres
