#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "critgroup/int_matrix.hpp"

namespace critgroup {

enum class CheckStatus { kPass, kFail, kSkip };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Result of one CLI command. Big integers always travel as decimal strings.
struct Report {
  std::string subject;
  std::vector<BigInt> invariant_factors;
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;
  std::optional<BigInt> spanning_trees;  // empty when disconnected / not a graph
  std::vector<Check> checks;
  std::vector<std::string> notices;
  std::optional<IntMatrix> p;
  std::optional<IntMatrix> q;

  bool all_passed() const;

  friend bool operator==(const Report&, const Report&) = default;
};

const char* to_string(CheckStatus status);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);
std::string to_text(const Report& report);

}  // namespace critgroup
