#include "covres/specio.hpp"

#include <algorithm>
#include <map>

namespace covres {

using nlohmann::json;

namespace {

int resolve_vertex(const json& v, const std::map<std::string, int>& by_label,
                   int vertex_count) {
  if (v.is_string()) {
    const auto it = by_label.find(v.get<std::string>());
    if (it == by_label.end())
      throw SpecError("unknown vertex name: " + v.get<std::string>());
    return it->second;
  }
  if (v.is_number_integer()) {
    const long long i = v.get<long long>();
    if (i < 0 || i >= vertex_count)
      throw SpecError("vertex index out of range: " + std::to_string(i));
    return static_cast<int>(i);
  }
  throw SpecError("vertex must be a name or a 0-based index");
}

Graph parse_family_spec(const json& spec) {
  const std::string family = spec.at("family").get<std::string>();
  if (!spec.contains("params") || !spec.at("params").is_array())
    throw SpecError("family spec needs a \"params\" array");
  std::vector<int> params;
  for (const json& p : spec.at("params")) {
    if (!p.is_number_integer()) throw SpecError("params must be integers");
    const long long v = p.get<long long>();
    if (v < 1 || v > 1000) throw SpecError("params must be in 1..1000");
    params.push_back(static_cast<int>(v));
  }
  try {
    if (family == "complete_multipartite")
      return build_complete_multipartite(params);
    if (family == "cm_bipartite") {
      if (params.size() != 1)
        throw SpecError("cm_bipartite takes one parameter");
      return build_cm_bipartite_family(params[0]);
    }
    if (family == "nested_bipartite") {
      if (params.size() != 4)
        throw SpecError("nested_bipartite takes four parameters");
      return build_nested_bipartite(params[0], params[1], params[2],
                                    params[3]);
    }
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("bad family parameters: ") + e.what());
  }
  throw SpecError("unknown graph family: " + family);
}

}  // namespace

Graph parse_graph_spec(const json& spec) {
  if (!spec.is_object()) throw SpecError("graph spec must be a JSON object");
  if (spec.contains("family")) return parse_family_spec(spec);
  if (!spec.contains("vertices") || !spec.contains("edges"))
    throw SpecError("graph spec needs \"vertices\" and \"edges\"");

  std::vector<std::string> labels;
  const json& verts = spec.at("vertices");
  if (verts.is_number_integer()) {
    const long long n = verts.get<long long>();
    if (n < 1 || n > 1000) throw SpecError("vertex count must be in 1..1000");
    for (long long i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  } else if (verts.is_array()) {
    for (const json& v : verts) {
      if (!v.is_string()) throw SpecError("vertex names must be strings");
      labels.push_back(v.get<std::string>());
    }
  } else {
    throw SpecError("\"vertices\" must be an array of names or a count");
  }

  std::map<std::string, int> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!by_label.emplace(labels[i], static_cast<int>(i)).second)
      throw SpecError("duplicate vertex name: " + labels[i]);
  }
  const int n = static_cast<int>(labels.size());

  std::vector<std::pair<int, int>> edges;
  if (!spec.at("edges").is_array()) throw SpecError("\"edges\" must be an array");
  for (const json& e : spec.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw SpecError("each edge must be a pair");
    edges.emplace_back(resolve_vertex(e[0], by_label, n),
                       resolve_vertex(e[1], by_label, n));
  }

  std::optional<std::vector<std::vector<int>>> parts;
  if (spec.contains("parts")) {
    if (!spec.at("parts").is_array()) throw SpecError("\"parts\" must be an array");
    parts.emplace();
    for (const json& p : spec.at("parts")) {
      if (!p.is_array()) throw SpecError("each part must be an array");
      std::vector<int> part;
      for (const json& v : p) part.push_back(resolve_vertex(v, by_label, n));
      parts->push_back(std::move(part));
    }
  }

  try {
    return make_graph(std::move(labels), std::move(edges), std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("invalid graph: ") + e.what());
  }
}

IdealSpec parse_ideal_spec(const json& spec) {
  if (!spec.is_object()) throw SpecError("ideal spec must be a JSON object");
  if (!spec.contains("graph")) throw SpecError("ideal spec needs \"graph\"");
  IdealSpec out;
  out.graph_spec = spec.at("graph");
  if (spec.contains("kind")) {
    out.kind = spec.at("kind").get<std::string>();
    if (out.kind != "cover" && out.kind != "edge")
      throw SpecError("\"kind\" must be \"cover\" or \"edge\"");
  }
  if (spec.contains("compressed")) {
    if (!spec.at("compressed").is_boolean())
      throw SpecError("\"compressed\" must be a boolean");
    out.compressed = spec.at("compressed").get<bool>();
  }
  if (spec.contains("power")) {
    if (!spec.at("power").is_number_integer())
      throw SpecError("\"power\" must be an integer");
    const long long s = spec.at("power").get<long long>();
    if (s < 1 || s > 64) throw SpecError("\"power\" must be in 1..64");
    out.power = static_cast<int>(s);
  }
  parse_graph_spec(out.graph_spec);  // validate eagerly
  return out;
}

MonomialIdeal realize_ideal(const IdealSpec& spec) {
  const Graph g = parse_graph_spec(spec.graph_spec);
  if (spec.kind == "edge") {
    if (spec.compressed)
      throw SpecError("\"compressed\" applies only to cover ideals");
    return power(edge_ideal(g), spec.power);
  }
  MonomialIdeal J = [&] {
    try {
      return cover_ideal(g, spec.compressed);
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string("cover ideal: ") + e.what());
    }
  }();
  return power(J, spec.power);
}

json ideal_spec_json(const IdealSpec& spec) {
  return json{{"graph", spec.graph_spec},
              {"kind", spec.kind},
              {"compressed", spec.compressed},
              {"power", spec.power}};
}

json ideal_output_json(const IdealSpec& spec, const MonomialIdeal& I) {
  json out = ideal_spec_json(spec);
  out["num_vars"] = I.num_vars();
  out["grading"] = I.grading().var_degrees;
  json gens = json::array();
  json pretty = json::array();
  for (const Monomial& m : I.gens()) {
    gens.push_back(m.e);
    pretty.push_back(to_string(m));
  }
  out["generators"] = std::move(gens);
  out["generators_pretty"] = std::move(pretty);
  return out;
}

json betti_output_json(const BettiTable& t, const Grading& g) {
  json rows = json::array();
  for (const auto& [key, mult] : t.entries)
    if (mult != 0) rows.push_back({key.first, key.second, mult});
  const auto reg = regularity(t);
  const auto pd = pdim_and_depth(t, g.num_vars());
  const auto h = hilbert_series(t, g);
  return json{{"field", t.field_char},
              {"betti", std::move(rows)},
              {"pdim", pd.pdim},
              {"depth", pd.depth},
              {"reg", reg.ideal},
              {"reg_quotient", reg.quotient},
              {"hilbert",
               {{"num", h.reduced_numerator},
                {"den_pow", h.reduced_denominator_power},
                {"numerator", h.numerator},
                {"denominator_degrees", h.denominator_degrees}}}};
}

}  // namespace covres
