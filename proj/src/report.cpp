#include "critgroup/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace critgroup {

namespace {

nlohmann::json to_strings(const std::vector<BigInt>& xs) {
  auto out = nlohmann::json::array();
  for (const BigInt& x : xs) out.push_back(x.str());
  return out;
}

std::vector<BigInt> from_strings(const nlohmann::json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(parse_bigint(x.get<std::string>()));
  return out;
}

nlohmann::json matrix_to_json(const IntMatrix& a) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (const BigInt& x : a.row(i)) row.push_back(x.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw std::invalid_argument("report: ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) a(i, k) = parse_bigint(j.at(i).at(k).get<std::string>());
  }
  return a;
}

CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::kPass;
  if (s == "fail") return CheckStatus::kFail;
  if (s == "skip") return CheckStatus::kSkip;
  throw std::invalid_argument("report: unknown check status '" + s + "'");
}

void join_line(std::ostream& os, const std::vector<BigInt>& xs) {
  if (xs.empty()) {
    os << "(none)";
    return;
  }
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
}

}  // namespace

bool Report::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::kFail; });
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkip:
      return "skip";
  }
  return "?";
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["subject"] = report.subject;
  j["invariant_factors"] = to_strings(report.invariant_factors);
  j["torsion"] = to_strings(report.torsion);
  j["free_rank"] = report.free_rank;
  j["spanning_trees"] =
      report.spanning_trees ? nlohmann::json(report.spanning_trees->str()) : nlohmann::json(nullptr);
  auto checks = nlohmann::json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["notices"] = report.notices;
  if (report.p) j["p"] = matrix_to_json(*report.p);
  if (report.q) j["q"] = matrix_to_json(*report.q);
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.subject = j.at("subject").get<std::string>();
  r.invariant_factors = from_strings(j.at("invariant_factors"));
  r.torsion = from_strings(j.at("torsion"));
  r.free_rank = j.at("free_rank").get<std::size_t>();
  if (!j.at("spanning_trees").is_null()) {
    r.spanning_trees = parse_bigint(j.at("spanning_trees").get<std::string>());
  }
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(),
                        status_from_string(c.at("status").get<std::string>()),
                        c.at("detail").get<std::string>()});
  }
  if (j.contains("notices")) r.notices = j.at("notices").get<std::vector<std::string>>();
  if (j.contains("p")) r.p = matrix_from_json(j.at("p"));
  if (j.contains("q")) r.q = matrix_from_json(j.at("q"));
  return r;
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  os << "subject: " << report.subject << '\n';
  for (const std::string& note : report.notices) os << "notice: " << note << '\n';
  if (!report.invariant_factors.empty()) {
    os << "invariant factors: ";
    join_line(os, report.invariant_factors);
    os << '\n';
    os << "torsion: ";
    join_line(os, report.torsion);
    os << '\n';
    os << "free rank: " << report.free_rank << '\n';
  }
  if (report.spanning_trees) os << "spanning trees: " << *report.spanning_trees << '\n';
  if (report.p) os << "P: " << to_string(*report.p) << '\n';
  if (report.q) os << "Q: " << to_string(*report.q) << '\n';
  for (const Check& c : report.checks) {
    os << "check " << c.name << ": " << to_string(c.status);
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  return os.str();
}

}  // namespace critgroup
