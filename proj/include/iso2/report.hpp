#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iso2/qf.hpp"

namespace iso2 {

enum class Outcome { kStructuredOK, kBruteForceOK, kFail };
std::string to_string(Outcome o);

struct ProofStep {
  std::string subject;  ///< lattice or row id
  i64 p = 0;            ///< index of ell in I_2; 1 for the I_2 check itself
  BinaryForm ell;
  std::string branch;
  std::string expected_case;  ///< case of the written argument this ell falls under, if any
  Outcome outcome = Outcome::kFail;
  std::string reason;               ///< set for failures
  std::optional<IntMatrix> witness;  ///< ell -> L, validated
};

struct VerificationReport {
  std::string subject;
  std::vector<ProofStep> steps;

  std::size_t failures() const;
  /// branch -> number of steps that ended with it
  std::map<std::string, std::size_t> branch_counts() const;
  void append(const VerificationReport& other);
  /// Stable order: subject, p, ell.
  void sort();
};

/// JSON array of the steps.
std::string to_json(const VerificationReport& report, int indent = 2);
std::string summary(const VerificationReport& report);

/// {"rank": n, "gram": [[...]]}
std::string form_to_json(const QuadraticForm& f, int indent = -1);
/// Inverse of form_to_json. Throws InvalidInput or NotPositiveDefinite.
QuadraticForm form_from_json(const std::string& text);

}  // namespace iso2
