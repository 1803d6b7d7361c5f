#include "covres/verification.hpp"

#include "covres/explicit_complex.hpp"
#include "covres/graph.hpp"
#include "covres/ideal.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace covres {

namespace {

using Value = std::variant<long long, std::vector<long long>>;
using Clock = std::chrono::steady_clock;

std::vector<long long> strip_zeros(std::vector<long long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

bool values_equal(const Value& a, const Value& b) {
  if (a.index() != b.index()) return false;
  if (a.index() == 0) return std::get<0>(a) == std::get<0>(b);
  return strip_zeros(std::get<1>(a)) == strip_zeros(std::get<1>(b));
}

std::string value_to_string(const Value& v) {
  if (v.index() == 0) return std::to_string(std::get<0>(v));
  std::string out = "(";
  const auto& vec = std::get<1>(v);
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vec[i]);
  }
  return out + ")";
}

std::string dump_table(const BettiTable& t) {
  std::ostringstream os;
  os << "betti table (quotient convention):\n";
  for (const auto& [key, mult] : t.entries)
    if (mult != 0)
      os << "  beta(" << key.first << ", " << key.second << ") = " << mult
         << "\n";
  return os.str();
}

struct SuiteRunner {
  const SuiteOptions& opt;
  VerificationReport report;
  std::set<std::string> wanted;

  explicit SuiteRunner(const SuiteOptions& o)
      : opt(o), wanted(o.families.begin(), o.families.end()) {
    const auto known = all_verification_families();
    for (const std::string& f : o.families)
      if (std::find(known.begin(), known.end(), f) == known.end())
        throw std::invalid_argument("unknown verification family: " + f);
  }

  bool on(const std::string& family) const { return wanted.count(family) > 0; }

  EngineOptions engine() const {
    return EngineOptions{opt.field_char, opt.lattice_cap, opt.threads};
  }

  template <typename Fn>
  void run_case(const std::string& family, Prediction pred, Fn&& fn) {
    CaseResult r;
    r.family = family;
    const auto t0 = Clock::now();
    std::string dump;
    r.engine_value = fn(dump);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r.match = values_equal(r.engine_value, pred.value);
    if (!r.match) {
      if (pred.conjecture) {
        ++report.conjecture_mismatches;
        r.engine_dump = dump;
      } else {
        ++report.theorem_mismatches;
      }
    }
    r.prediction = std::move(pred);
    report.total_seconds += r.seconds;
    report.cases.push_back(std::move(r));
  }

  MonomialIdeal multipartite_power(const std::vector<int>& parts, int s) const {
    const Graph g = build_complete_multipartite(parts);
    return power(cover_ideal(g, true), s);
  }

  void complete_bipartite() {
    for (int m = 1; m <= opt.max_m; ++m)
      for (int n = m; n <= opt.max_m; ++n)
        for (int s = 1; s <= opt.max_s; ++s) {
          Prediction p{"complete_bipartite.reg", Quantity::Reg,
                       {{"m", m}, {"n", n}, {"s", s}}, false,
                       predict_reg_complete_bipartite(m, n, s)};
          run_case("complete_bipartite", std::move(p), [&](std::string& dump) {
            const auto t = betti_table(multipartite_power({m, n}, s), engine());
            dump = dump_table(t);
            return Value{regularity(t).ideal};
          });
        }
  }

  void km(bool conjectural) {
    std::vector<int> ms;
    if (conjectural) {
      ms.push_back(5);
    } else {
      for (int m = 3; m <= std::min(opt.max_m, 4); ++m) ms.push_back(m);
    }
    const std::string family = conjectural ? "km_conjecture" : "km";
    for (int m : ms)
      for (int s = 1; s <= opt.max_s; ++s) {
        BettiTable t;
        bool have = false;
        auto compute = [&](std::string& dump) -> const BettiTable& {
          if (!have) {
            t = betti_table(multipartite_power(std::vector<int>(m, 1), s),
                            engine());
            have = true;
          }
          dump = dump_table(t);
          return t;
        };
        Prediction betti{family + ".betti", Quantity::BettiVector,
                         {{"m", m}, {"s", s}}, conjectural,
                         predict_betti_km_power(m, s)};
        run_case(family, std::move(betti), [&](std::string& dump) {
          return Value{compute(dump).ideal_betti_vector()};
        });
        Prediction reg{family + ".reg", Quantity::Reg,
                       {{"m", m}, {"s", s}}, conjectural,
                       (long long)s * (m - 1)};
        run_case(family, std::move(reg), [&](std::string& dump) {
          return Value{regularity(compute(dump)).ideal};
        });
      }
  }

  void multipartite(int parts_count) {
    const std::string family =
        parts_count == 3 ? "tripartite" : "four_partite";
    const int min_s = parts_count == 3 ? 2 : 3;
    const int size_cap = parts_count == 3 ? 3 : 2;
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur(parts_count, 1);
    std::function<void(int, int)> walk = [&](int idx, int lo) {
      if (idx == parts_count) {
        shapes.push_back(cur);
        return;
      }
      for (int v = lo; v <= size_cap; ++v) {
        cur[idx] = v;
        walk(idx + 1, v);
      }
    };
    walk(0, 1);
    for (const auto& shape : shapes)
      for (int s = min_s; s <= opt.max_s; ++s) {
        std::map<std::string, long long> params{{"s", s}};
        for (int i = 0; i < parts_count; ++i)
          params["n" + std::to_string(i + 1)] = shape[i];
        Prediction p{family + ".reg", Quantity::Reg, std::move(params), false,
                     predict_reg_multipartite(shape, s)};
        run_case(family, std::move(p), [&](std::string& dump) {
          const auto t = betti_table(multipartite_power(shape, s), engine());
          dump = dump_table(t);
          return Value{regularity(t).ideal};
        });
      }
  }

  void multipartite_conjecture() {
    const std::vector<std::vector<int>> shapes{{1, 1, 1, 1, 1},
                                               {1, 1, 1, 1, 2}};
    for (const auto& shape : shapes) {
      const int s = static_cast<int>(shape.size()) - 1;
      std::map<std::string, long long> params{{"s", s}};
      for (std::size_t i = 0; i < shape.size(); ++i)
        params["n" + std::to_string(i + 1)] = shape[i];
      Prediction p{"multipartite_conjecture.reg", Quantity::Reg,
                   std::move(params), true,
                   predict_reg_multipartite(shape, s)};
      run_case("multipartite_conjecture", std::move(p),
               [&](std::string& dump) {
                 const auto t =
                     betti_table(multipartite_power(shape, s), engine());
                 dump = dump_table(t);
                 return Value{regularity(t).ideal};
               });
    }
  }

  void cm_family() {
    for (int n = 2; n <= opt.max_m; ++n) {
      const auto pred = predict_mu_and_pdim_cm_family(n);
      const Graph g = build_cm_bipartite_family(n);
      const MonomialIdeal J = cover_ideal(g);
      run_case("cm_family",
               Prediction{"cm.mu", Quantity::Mu, {{"n", n}}, false, pred.mu},
               [&](std::string&) {
                 return Value{(long long)J.gens().size()};
               });
      run_case("cm_family",
               Prediction{"cm.pdim", Quantity::Pdim, {{"n", n}}, false,
                          (long long)pred.pdim},
               [&](std::string& dump) {
                 const auto t = betti_table(J, engine());
                 dump = dump_table(t);
                 return Value{(long long)pdim_and_depth(t, 2 * n).pdim};
               });
      for (int s = 1; s <= opt.max_s; ++s) {
        const MonomialIdeal Js = power(J, s);
        run_case("cm_family",
                 Prediction{"cm.linear_quotients", Quantity::LinearQuotients,
                            {{"n", n}, {"s", s}}, false, 1LL},
                 [&](std::string&) {
                   return Value{has_linear_quotients(Js).has ? 1LL : 0LL};
                 });
        run_case("cm_family",
                 Prediction{"cm.reg", Quantity::Reg, {{"n", n}, {"s", s}},
                            false, (long long)pred.reg_slope * s},
                 [&](std::string& dump) {
                   const auto t = betti_table(Js, engine());
                   dump = dump_table(t);
                   return Value{regularity(t).ideal};
                 });
      }
    }
  }

  void nested_bipartite() {
    for (int n1 = 1; n1 <= 2; ++n1)
      for (int n2 = 1; n2 <= 2; ++n2)
        for (int m1 = 1; m1 <= 2; ++m1)
          for (int m2 = 1; m2 <= 2; ++m2)
            for (int s = 1; s <= opt.max_s; ++s) {
              const Graph g = build_nested_bipartite(n1, n2, m1, m2);
              const MonomialIdeal Js = power(cover_ideal(g, true), s);
              Prediction p{
                  "nested.reg", Quantity::Reg,
                  {{"n1", n1}, {"n2", n2}, {"m1", m1}, {"m2", m2}, {"s", s}},
                  false, predict_reg_nested_bipartite(n1, n2, m1, m2, s)};
              run_case("nested_bipartite", std::move(p),
                       [&](std::string& dump) {
                         const auto t = betti_table(Js, engine());
                         dump = dump_table(t);
                         return Value{regularity(t).ideal};
                       });
            }
    for (int s = 1; s <= opt.max_s; ++s) {
      const Graph g = build_nested_bipartite(1, 1, 1, 1);
      const MonomialIdeal Js = power(cover_ideal(g, true), s);
      Prediction p{"nested.betti_p4", Quantity::BettiVector, {{"s", s}},
                   false, predict_betti_p4_power(s)};
      run_case("nested_bipartite", std::move(p), [&](std::string& dump) {
        const auto t = betti_table(Js, engine());
        dump = dump_table(t);
        return Value{t.ideal_betti_vector()};
      });
    }
  }

  void syzygy() {
    struct Item {
      ComplexFamily fam;
      const char* tag;
      int max_s;
    };
    const Item items[] = {{ComplexFamily::K3, "syzygy.k3", opt.max_s},
                          {ComplexFamily::P4, "syzygy.p4", opt.max_s},
                          {ComplexFamily::K4, "syzygy.k4",
                           std::min(opt.max_s, 3)}};
    for (const Item& item : items)
      for (int s = 1; s <= item.max_s; ++s) {
        Prediction p{item.tag, Quantity::ComplexValid, {{"s", s}}, false, 1LL};
        run_case("syzygy", std::move(p), [&](std::string& dump) {
          const Graph g =
              item.fam == ComplexFamily::K3
                  ? build_complete_multipartite({1, 1, 1})
                  : (item.fam == ComplexFamily::K4
                         ? build_complete_multipartite({1, 1, 1, 1})
                         : build_nested_bipartite(1, 1, 1, 1));
          const MonomialIdeal Js = power(cover_ideal(g, true), s);
          const BettiTable t = betti_table(Js, engine());
          const auto c = build_explicit_complex(item.fam, s, Js.grading());
          const auto v = validate_explicit_complex(c, Js, t);
          dump = v.detail;
          return Value{v.all() ? 1LL : 0LL};
        });
      }
  }
};

}  // namespace

std::vector<std::string> all_verification_families() {
  return {"complete_bipartite",
          "km",
          "tripartite",
          "four_partite",
          "cm_family",
          "nested_bipartite",
          "syzygy",
          "km_conjecture",
          "multipartite_conjecture"};
}

VerificationReport run_verification_suite(const SuiteOptions& opt) {
  SuiteRunner runner(opt);
  if (runner.on("complete_bipartite")) runner.complete_bipartite();
  if (runner.on("km")) runner.km(false);
  if (runner.on("tripartite")) runner.multipartite(3);
  if (runner.on("four_partite")) runner.multipartite(4);
  if (runner.on("cm_family")) runner.cm_family();
  if (runner.on("nested_bipartite")) runner.nested_bipartite();
  if (runner.on("syzygy")) runner.syzygy();
  if (runner.on("km_conjecture")) runner.km(true);
  if (runner.on("multipartite_conjecture")) runner.multipartite_conjecture();
  return runner.report;
}

std::string render_report(const VerificationReport& report) {
  std::ostringstream os;
  for (const CaseResult& r : report.cases) {
    const Prediction& p = r.prediction;
    os << (r.match ? "[ok]      "
                   : (p.conjecture ? "[CONJECTURE MISMATCH] "
                                   : "[THEOREM MISMATCH]    "))
       << p.source << " " << quantity_name(p.quantity);
    for (const auto& [k, v] : p.parameters) os << " " << k << "=" << v;
    os << ": predicted " << value_to_string(p.value) << ", engine "
       << value_to_string(r.engine_value);
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
    os << buf << "\n";
    if (!r.match && p.conjecture && !r.engine_dump.empty())
      os << r.engine_dump << "\n";
  }
  os << report.cases.size() << " cases, " << report.theorem_mismatches
     << " theorem mismatches, " << report.conjecture_mismatches
     << " conjecture mismatches";
  char buf[32];
  std::snprintf(buf, sizeof buf, ", %.1fs total\n", report.total_seconds);
  os << buf;
  return os.str();
}

}  // namespace covres
