#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tyind/finfield.hpp"

namespace tyind {

struct CheckResult {
  std::string anchor;
  int64_t instances = 0;
  bool pass = true;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;

  void add(CheckResult r) {
    pass = pass && r.pass;
    checks.push_back(std::move(r));
  }
};

// Runs a named verification suite against (group, chi, tau). Suites fourier
// and lifts accept degenerate symmetric bicharacters; the others construct
// the category and require non-degeneracy. Suite "all" runs everything
// applicable. kmax bounds the indicator orders exercised (n <= 2 kmax).
VerifyReport run_suite(const std::string& suite, const Bicharacter& chi, int tau_sign,
                       int64_t kmax, const WorkBounds& wb = {}, int64_t random_pairs = 100);

std::vector<std::string> verify_suite_names();

}  // namespace tyind
