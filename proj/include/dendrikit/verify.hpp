#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dendrikit/words.hpp"

namespace dendrikit {

struct VerifyOptions {
  int max_degree = 0;  // 0 = per-family spec defaults
  unsigned long long seed = 20240601;
  int jobs = 1;
  int samples = 200;       // random triples in the axioms suite
  std::size_t limit = 25;  // counterexamples kept per suite
  bool corrupt = false;    // test hook: drop the first term of full products
  int bound = kDefaultDegreeBound;
};

struct SuiteReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::size_t checks = 0;
  bool pass = true;
  std::vector<std::string> counterexamples;  // canonically ordered, capped at limit
  double seconds = 0.0;
};

// axioms oracle hopf tits sylvester parking qsym freeness dims
const std::vector<std::string>& verify_suite_names();

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt);

// name = suite or "all"; one report per suite run.
std::vector<SuiteReport> run_verify(const std::string& name, const VerifyOptions& opt);

}  // namespace dendrikit
