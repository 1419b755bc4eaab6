#pragma once

// Command-line front end. run() is the whole program minus process setup, so
// tests can drive it with captured streams.

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbital::cli {

enum class Format { table, json, csv };

/// One output row. Integers are kept as decimal strings so values of any size
/// survive JSON round trips.
struct OutputRecord {
  std::string kind;  // count, series, oracle, verify, tdos, pdotze
  unsigned dim = 0;
  std::uint64_t q = 0;
  unsigned n = 0;  // coefficient index, or r for tdos rows
  bool multiset = false;
  std::optional<std::string> stratum;
  std::string value;  // empty when the formula side could not run
  std::optional<std::vector<std::pair<std::string, std::string>>> terms;
  std::optional<std::string> oracle;
  std::optional<bool> match;  // present iff the oracle ran
  std::optional<std::uint64_t> elements;  // group elements checked (tdos / pdotze)
  std::optional<std::string> error;
  double millis = 0;

  bool operator==(const OutputRecord&) const = default;
};

nlohmann::json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::json& j);

std::string csv_header();
std::string to_csv(const OutputRecord& r);

/// Exit codes: 0 success, 1 a comparison mismatched, 2 usage or input error,
/// 3 no mismatch but some comparison was skipped for budget.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbital::cli
