#pragma once

#include "json_io.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace picard::verify {

struct Options {
  std::uint64_t seed = 7;
  /// Random cases per suite (pairs, maps or matrices depending on the suite).
  int iterations = 50;
  /// Run the enumerative suites over their full ranges instead of a sample.
  bool exhaustive = false;
};

struct SuiteReport {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// Sizes of what was exercised, e.g. number of pairs or of Ext elements.
  std::map<std::string, std::uint64_t> counts;
  /// First few failure descriptions.
  std::vector<std::string> failed;

  bool passed() const { return failures == 0 && cases > 0; }
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const Options& opts);
std::vector<SuiteReport> run_all(const Options& opts);

io::Json to_json(const SuiteReport& r);
io::Json report_json(const Options& opts, const std::vector<SuiteReport>& reports);

}  // namespace picard::verify
