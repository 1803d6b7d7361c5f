#include "covres/cli.hpp"

#include "covres/explicit_complex.hpp"
#include "covres/specio.hpp"
#include "covres/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace covres {

using nlohmann::json;

namespace {

struct Options {
  std::string file;
  std::string family;
  std::vector<int> params;
  std::string kind = "cover";
  bool compressed = false;
  int power = 1;
  long long field = 32003;
  int threads = 1;
  std::size_t lattice_cap = 200000;
  bool as_json = false;
  int expand = 10;
  std::vector<std::string> suite_families;
  int max_m = 4;
  int max_s = 3;
  std::string complex_name;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("bad JSON in ") + path + ": " + e.what());
  }
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

EngineOptions engine_options(const Options& o) {
  if (o.field != 0 && !is_prime(o.field))
    throw SpecError("--field must be 0 (rationals) or a prime");
  if (o.field > (1LL << 31))
    throw SpecError("--field is limited to primes below 2^31");
  return EngineOptions{o.field, o.lattice_cap, o.threads};
}

json family_graph_spec(const Options& o) {
  return json{{"family", o.family}, {"params", o.params}};
}

Graph graph_from_options(const Options& o) {
  if (!o.file.empty()) {
    json j = load_json_file(o.file);
    if (j.is_object() && j.contains("graph")) j = j.at("graph");
    return parse_graph_spec(j);
  }
  if (!o.family.empty()) return parse_graph_spec(family_graph_spec(o));
  throw SpecError("provide --file or --family");
}

IdealSpec ideal_spec_from_options(const Options& o, const CLI::App* sub) {
  IdealSpec spec;
  bool file_carries_ideal_fields = false;
  if (!o.file.empty()) {
    const json j = load_json_file(o.file);
    if (j.is_object() && j.contains("graph")) {
      spec = parse_ideal_spec(j);
      file_carries_ideal_fields = true;
    } else {
      spec.graph_spec = j;
    }
  } else if (!o.family.empty()) {
    spec.graph_spec = family_graph_spec(o);
  } else {
    throw SpecError("provide --file or --family");
  }
  const auto use_flag = [&](const char* name) {
    return !file_carries_ideal_fields || sub->count(name) > 0;
  };
  if (use_flag("--kind")) spec.kind = o.kind;
  if (use_flag("--compressed")) spec.compressed = o.compressed;
  if (use_flag("--power")) spec.power = o.power;
  parse_graph_spec(spec.graph_spec);
  return spec;
}

std::string poly_to_string(const std::vector<long long>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (c[d] == 0) continue;
    const long long a = c[d];
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    const long long mag = a < 0 ? -a : a;
    if (mag != 1 || d == 0) os << mag;
    if (d >= 1) {
      if (mag != 1) os << "*";
      os << "t";
      if (d >= 2) os << "^" << d;
    }
  }
  if (first) os << "0";
  return os.str();
}

json value_to_json(const std::variant<long long, std::vector<long long>>& v) {
  if (v.index() == 0) return std::get<0>(v);
  return std::get<1>(v);
}

void print_betti_text(const BettiTable& t, const Grading& g, std::ostream& out) {
  for (const auto& [key, mult] : t.entries)
    if (mult != 0)
      out << "beta(" << key.first << ", " << key.second << ") = " << mult
          << "\n";
  const auto reg = regularity(t);
  const auto pd = pdim_and_depth(t, g.num_vars());
  out << "pdim = " << pd.pdim << "\n";
  out << "depth = " << pd.depth << "\n";
  out << "reg(ideal) = " << reg.ideal << "\n";
  out << "reg(quotient) = " << reg.quotient << "\n";
}

int cmd_covers(const Options& o, std::ostream& out) {
  const Graph g = graph_from_options(o);
  const auto covers = minimal_vertex_covers(g);
  if (o.as_json) {
    json arr = json::array();
    for (const auto& c : covers) {
      json names = json::array();
      for (int v : c.vertices) names.push_back(g.label(v));
      arr.push_back(std::move(names));
    }
    out << json{{"covers", std::move(arr)}}.dump(2) << "\n";
  } else {
    for (const auto& c : covers) {
      for (std::size_t i = 0; i < c.vertices.size(); ++i)
        out << (i ? " " : "") << g.label(c.vertices[i]);
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_ideal(const Options& o, const CLI::App* sub, std::ostream& out) {
  const IdealSpec spec = ideal_spec_from_options(o, sub);
  const MonomialIdeal I = realize_ideal(spec);
  if (o.as_json) {
    out << ideal_output_json(spec, I).dump(2) << "\n";
  } else {
    out << "ring: " << I.num_vars() << " variables, degrees (";
    for (int k = 0; k < I.num_vars(); ++k)
      out << (k ? "," : "") << I.grading().var_degrees[k];
    out << ")\n";
    out << "minimal generators (" << I.gens().size() << "):\n";
    for (const Monomial& m : I.gens()) out << "  " << to_string(m) << "\n";
  }
  return kExitOk;
}

int cmd_betti(const Options& o, const CLI::App* sub, std::ostream& out) {
  const IdealSpec spec = ideal_spec_from_options(o, sub);
  const MonomialIdeal I = realize_ideal(spec);
  const BettiTable t = betti_table(I, engine_options(o));
  if (o.as_json)
    out << betti_output_json(t, I.grading()).dump(2) << "\n";
  else
    print_betti_text(t, I.grading(), out);
  return kExitOk;
}

int cmd_reg(const Options& o, const CLI::App* sub, std::ostream& out) {
  const IdealSpec spec = ideal_spec_from_options(o, sub);
  const MonomialIdeal I = realize_ideal(spec);
  const BettiTable t = betti_table(I, engine_options(o));
  const auto reg = regularity(t);
  if (o.as_json)
    out << json{{"reg", reg.ideal}, {"reg_quotient", reg.quotient}}.dump(2)
        << "\n";
  else
    out << "reg = " << reg.ideal << "\n";
  return kExitOk;
}

int cmd_hilbert(const Options& o, const CLI::App* sub, std::ostream& out) {
  const IdealSpec spec = ideal_spec_from_options(o, sub);
  const MonomialIdeal I = realize_ideal(spec);
  const BettiTable t = betti_table(I, engine_options(o));
  const HilbertSeries h = hilbert_series(t, I.grading());
  const auto expansion = expand_hilbert_series(h, o.expand);
  if (o.as_json) {
    out << json{{"num", h.reduced_numerator},
                {"den_pow", h.reduced_denominator_power},
                {"numerator", h.numerator},
                {"denominator_degrees", h.denominator_degrees},
                {"expansion", expansion}}
               .dump(2)
        << "\n";
  } else {
    out << "numerator: " << poly_to_string(h.numerator) << "\n";
    out << "denominator degrees:";
    for (int d : h.denominator_degrees) out << " " << d;
    out << "\n";
    out << "reduced numerator: " << poly_to_string(h.reduced_numerator) << "\n";
    out << "pole order at t=1: " << h.reduced_denominator_power << "\n";
    out << "series coefficients (degree 0.." << o.expand << "):";
    for (long long c : expansion) out << " " << c;
    out << "\n";
  }
  return kExitOk;
}

int cmd_syzygy_check(const Options& o, std::ostream& out) {
  ComplexFamily fam;
  Graph g = build_complete_multipartite({1, 1, 1});
  if (o.complex_name == "k3") {
    fam = ComplexFamily::K3;
  } else if (o.complex_name == "k4") {
    fam = ComplexFamily::K4;
    g = build_complete_multipartite({1, 1, 1, 1});
  } else if (o.complex_name == "p4") {
    fam = ComplexFamily::P4;
    g = build_nested_bipartite(1, 1, 1, 1);
  } else {
    throw SpecError("--complex must be one of k3, k4, p4");
  }
  const MonomialIdeal Js = power(cover_ideal(g, true), o.power);
  const BettiTable t = betti_table(Js, engine_options(o));
  const ExplicitComplex c = build_explicit_complex(fam, o.power, Js.grading());
  const ComplexValidation v = validate_explicit_complex(c, Js, t);
  if (o.as_json) {
    json sizes = json::array();
    for (const auto& m : c.matrices) sizes.push_back(m.cols);
    out << json{{"composes_to_zero", v.composes_to_zero},
                {"generators_match", v.generators_match},
                {"entries_nonunit", v.entries_nonunit},
                {"betti_match", v.betti_match},
                {"last_map_injective", v.last_map_injective},
                {"ok", v.all()},
                {"detail", v.detail},
                {"ranks", std::move(sizes)}}
               .dump(2)
        << "\n";
  } else {
    const auto line = [&](const char* name, bool ok) {
      out << name << ": " << (ok ? "ok" : "FAIL") << "\n";
    };
    line("composes to zero", v.composes_to_zero);
    line("generators match", v.generators_match);
    line("entries non-unit", v.entries_nonunit);
    line("betti numbers match", v.betti_match);
    line("last map injective", v.last_map_injective);
    if (!v.all()) out << "detail: " << v.detail << "\n";
  }
  return v.all() ? kExitOk : kExitTheoremMismatch;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.max_m = o.max_m;
  so.max_s = o.max_s;
  so.families =
      o.suite_families.empty() ? all_verification_families() : o.suite_families;
  so.field_char = engine_options(o).field_char;
  so.lattice_cap = o.lattice_cap;
  so.threads = o.threads;
  VerificationReport report;
  try {
    report = run_verification_suite(so);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  if (o.as_json) {
    json cases = json::array();
    for (const CaseResult& r : report.cases) {
      json params = json::object();
      for (const auto& [k, v] : r.prediction.parameters) params[k] = v;
      cases.push_back({{"family", r.family},
                       {"source", r.prediction.source},
                       {"quantity", quantity_name(r.prediction.quantity)},
                       {"params", std::move(params)},
                       {"conjecture", r.prediction.conjecture},
                       {"predicted", value_to_json(r.prediction.value)},
                       {"engine", value_to_json(r.engine_value)},
                       {"match", r.match},
                       {"seconds", r.seconds}});
    }
    out << json{{"cases", std::move(cases)},
                {"theorem_mismatches", report.theorem_mismatches},
                {"conjecture_mismatches", report.conjecture_mismatches},
                {"seconds", report.total_seconds}}
               .dump(2)
        << "\n";
  } else {
    out << render_report(report);
  }
  if (report.theorem_mismatches > 0) return kExitTheoremMismatch;
  if (report.conjecture_mismatches > 0) return kExitConjectureMismatch;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact graded resolutions of graph cover ideals"};
  app.require_subcommand(1);
  Options o;

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--file", o.file, "JSON graph or ideal spec file");
    sub->add_option("--family", o.family,
                    "graph family: complete_multipartite, cm_bipartite, "
                    "nested_bipartite");
    sub->add_option("--params,--parts", o.params, "family parameters")
        ->delimiter(',');
  };
  const auto add_ideal = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "cover or edge ideal")
        ->check(CLI::IsMember({"cover", "edge"}));
    sub->add_flag("--compressed", o.compressed,
                  "one variable per part, graded by part sizes");
    sub->add_option("--power", o.power, "ideal power s")
        ->check(CLI::Range(1, 64));
  };
  const auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--field", o.field,
                    "coefficient field characteristic, 0 for the rationals");
    sub->add_option("--threads", o.threads, "worker threads")
        ->check(CLI::Range(1, 256));
    sub->add_option("--lattice-cap", o.lattice_cap,
                    "maximum lcm lattice size");
  };
  const auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.as_json, "JSON output");
  };

  CLI::App* covers =
      app.add_subcommand("covers", "list the minimal vertex covers");
  add_input(covers);
  add_json(covers);

  CLI::App* ideal =
      app.add_subcommand("ideal", "print the minimal generators of the ideal");
  add_input(ideal);
  add_ideal(ideal);
  add_json(ideal);

  CLI::App* betti = app.add_subcommand(
      "betti", "graded Betti numbers of the quotient by the ideal");
  add_input(betti);
  add_ideal(betti);
  add_engine(betti);
  add_json(betti);

  CLI::App* reg =
      app.add_subcommand("reg", "Castelnuovo-Mumford regularity of the ideal");
  add_input(reg);
  add_ideal(reg);
  add_engine(reg);
  add_json(reg);

  CLI::App* hilbert =
      app.add_subcommand("hilbert", "Hilbert series of the quotient");
  add_input(hilbert);
  add_ideal(hilbert);
  add_engine(hilbert);
  add_json(hilbert);
  hilbert->add_option("--expand", o.expand,
                      "expand the series through this degree")
      ->check(CLI::Range(0, 1000));

  CLI::App* syz = app.add_subcommand(
      "syzygy-check",
      "validate the closed-form resolution of a cover ideal power");
  syz->add_option("--complex", o.complex_name, "one of k3, k4, p4")
      ->required();
  syz->add_option("--power", o.power, "ideal power s")->check(CLI::Range(1, 16));
  add_engine(syz);
  add_json(syz);

  CLI::App* verify = app.add_subcommand(
      "verify", "recompute the closed-form predictions with the engine");
  verify->add_option("--families", o.suite_families,
                     "verification families (default: all)")
      ->delimiter(',');
  verify->add_option("--max-m", o.max_m, "largest family size")
      ->check(CLI::Range(1, 8));
  verify->add_option("--max-s", o.max_s, "largest power")
      ->check(CLI::Range(1, 8));
  add_engine(verify);
  add_json(verify);

  try {
    std::vector<const char*> argv;
    argv.push_back("covres");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (covers->parsed()) return cmd_covers(o, out);
    if (ideal->parsed()) return cmd_ideal(o, ideal, out);
    if (betti->parsed()) return cmd_betti(o, betti, out);
    if (reg->parsed()) return cmd_reg(o, reg, out);
    if (hilbert->parsed()) return cmd_hilbert(o, hilbert, out);
    if (syz->parsed()) return cmd_syzygy_check(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace covres
