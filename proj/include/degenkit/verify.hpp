#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace degenkit {

// Outcome of one named check suite. `notes` are short human findings,
// `data` the numbers behind them.
struct SuiteResult {
  std::string suite;
  bool pass = false;
  double seconds = 0;
  std::vector<std::string> notes;
  nlohmann::json data = nlohmann::json::object();
};

// bijection, t-equals-minus-Cv, connected-support, kmn-bound, vm-growth,
// kk3-family, dtilde-family, defect-lemma, reflection, empirical-k,
// s-family, tame-wild
const std::vector<std::string>& suite_names();

// Runs one suite; throws UnknownSuite. "all" is handled by callers.
SuiteResult run_suite(std::string_view id);

// Timings are left out by default so repeated runs print identical bytes.
nlohmann::json to_json(const SuiteResult& r, bool timing = false);

}  // namespace degenkit
