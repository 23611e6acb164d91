// Command results as ordered JSON documents with an exit-code policy.
#pragma once

#include <cstdint>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "json.hpp"
#include "galcrem/scenario.hpp"

namespace galcrem {

using Json = nlohmann::ordered_json;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int input_error = 2;
inline constexpr int undetermined = 3;
}  // namespace exit_code

struct RunOptions {
  std::uint64_t seed = 0x5eed;
  std::optional<unsigned> degree_bound;
  PrecisionBudget budget;
  bool timings = false;
  std::stop_token stop;
  /// `galois extend`: index into the scenario generators.
  std::optional<std::size_t> generator;
};

struct Report {
  Json data = Json::object();
  std::vector<std::string> failures;  // failed checks, unmet expectations, oracle disagreements
  bool undetermined = false;

  int exit_code() const;
};

enum class ReportFormat { human, json };
std::string render_report(const Report& r, ReportFormat f);

Report curve_info(const Scenario& s, const RunOptions& o = {});
/// Requires s.point.
Report galois_test(const Scenario& s, const RunOptions& o = {});
Report galois_extend(const Scenario& s, const RunOptions& o = {});
/// Replays the scenario chain, or builds one greedily when absent.
Report cremona_reduce(const Scenario& s, const RunOptions& o = {});
/// Every section above plus the scenario expectations.
Report verify_scenario(const Scenario& s, const RunOptions& o = {});

}  // namespace galcrem
