#include "iso2/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "iso2/errors.hpp"
#include "json.hpp"

namespace iso2 {

namespace {

nlohmann::ordered_json matrix_json(const IntMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kStructuredOK: return "StructuredOK";
    case Outcome::kBruteForceOK: return "BruteForceOK";
    case Outcome::kFail: return "Fail";
  }
  return "Fail";
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const ProofStep& s) { return s.outcome == Outcome::kFail; }));
}

std::map<std::string, std::size_t> VerificationReport::branch_counts() const {
  std::map<std::string, std::size_t> out;
  for (const auto& s : steps) ++out[s.outcome == Outcome::kFail ? "FAIL" : s.branch];
  return out;
}

void VerificationReport::append(const VerificationReport& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

void VerificationReport::sort() {
  std::stable_sort(steps.begin(), steps.end(), [](const ProofStep& x, const ProofStep& y) {
    return std::tie(x.subject, x.p, x.ell) < std::tie(y.subject, y.p, y.ell);
  });
}

std::string to_json(const VerificationReport& report, int indent) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : report.steps) {
    nlohmann::ordered_json j;
    j["subject"] = s.subject;
    j["prime"] = s.p;
    j["ell"] = matrix_json(s.ell.gram());
    j["branch"] = s.branch;
    if (!s.expected_case.empty()) j["expected_case"] = s.expected_case;
    j["outcome"] = to_string(s.outcome);
    if (s.outcome == Outcome::kFail) j["reason"] = s.reason;
    j["witness"] = s.witness ? matrix_json(*s.witness) : nlohmann::ordered_json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

std::string summary(const VerificationReport& report) {
  std::ostringstream os;
  os << report.subject << ": " << report.steps.size() << " steps, " << report.failures() << " failures\n";
  for (const auto& [branch, n] : report.branch_counts()) os << "  " << branch << ": " << n << '\n';
  for (const auto& s : report.steps)
    if (s.outcome == Outcome::kFail) os << "  FAIL " << s.subject << " p=" << s.p << ' ' << s.ell << ": " << s.reason << '\n';
  return os.str();
}

std::string form_to_json(const QuadraticForm& f, int indent) {
  nlohmann::ordered_json j;
  j["rank"] = f.rank();
  j["gram"] = matrix_json(f.gram());
  return j.dump(indent);
}

QuadraticForm form_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw InvalidInput("not a JSON object");
  if (!j.contains("rank") || !j["rank"].is_number_integer()) throw InvalidInput("missing integer \"rank\"");
  if (!j.contains("gram") || !j["gram"].is_array()) throw InvalidInput("missing array \"gram\"");
  const auto n = j["rank"].get<i64>();
  const auto& rows = j["gram"];
  if (n < 1 || n > 8 || rows.size() != static_cast<std::size_t>(n)) throw InvalidInput("gram must be rank x rank");
  IntMatrix g(static_cast<int>(n), static_cast<int>(n));
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(n)) throw InvalidInput("gram must be rank x rank");
    for (int k = 0; k < n; ++k) {
      if (!rows[i][k].is_number_integer()) throw InvalidInput("gram entries must be integers");
      g(i, k) = rows[i][k].get<i64>();
    }
  }
  return QuadraticForm(g);
}

}  // namespace iso2
