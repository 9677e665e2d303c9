#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ksat {

// An operation refused because it would exceed a desk-scale enumeration
// budget (2^n assignments, clause-space size, histogram pair loop, ...).
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// What a sign scan of r'(s) and r''(s) over [0.5, 1) found; attached to
// regime_error so a refusal for k outside the proven regime still reports
// the observed root structure.
struct ScanReport {
  int k = 0;
  int points = 0;
  std::vector<double> r_prime_sign_changes;
  std::vector<double> r_double_prime_sign_changes;

  std::string to_string() const;
};

// Threshold machinery refused: the lemma structure (one inflection, two
// extrema of r(s)) is only established for k >= 5, or the scan did not
// find the expected brackets.
class regime_error : public std::runtime_error {
 public:
  regime_error(const std::string& message, ScanReport report)
      : std::runtime_error(message + "\n" + report.to_string()),
        report_(std::move(report)) {}

  const ScanReport& report() const { return report_; }

 private:
  ScanReport report_;
};

}  // namespace ksat
