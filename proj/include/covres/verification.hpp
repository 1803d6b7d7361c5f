#pragma once

#include "covres/predictions.hpp"
#include "covres/resolution.hpp"

#include <string>
#include <vector>

namespace covres {

struct SuiteOptions {
  int max_m = 4;                      // largest part/family count exercised
  int max_s = 3;                      // largest power exercised
  std::vector<std::string> families;  // empty list = empty report
  long long field_char = 32003;
  std::size_t lattice_cap = 200000;
  int threads = 1;
};

// Family tags accepted in SuiteOptions::families.
std::vector<std::string> all_verification_families();

struct CaseResult {
  std::string family;
  Prediction prediction;
  std::variant<long long, std::vector<long long>> engine_value;
  bool match = false;
  double seconds = 0.0;
  // Engine dump attached to conjecture mismatches.
  std::string engine_dump;
};

struct VerificationReport {
  std::vector<CaseResult> cases;
  int theorem_mismatches = 0;
  int conjecture_mismatches = 0;
  double total_seconds = 0.0;
};

// Recomputes every predicted quantity with the engine and compares.
VerificationReport run_verification_suite(const SuiteOptions& opt);

std::string render_report(const VerificationReport& report);

}  // namespace covres
