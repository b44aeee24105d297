#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padic/series.hpp"

namespace padic {

enum class Outcome { kPass, kFail, kInconclusive, kSkipped, kInfo };

std::string outcome_name(Outcome o);
Outcome parse_outcome(const std::string& s);

/// Result of one exact check. `lhs`/`rhs` are present for series identities;
/// scalar checks put their values in `values`.
struct VerificationReport {
  std::string check;
  std::string group;
  long p = 0;
  std::map<std::string, std::string> parameters;
  std::optional<TruncatedSeries> lhs, rhs;
  long order_compared = 0;
  Outcome outcome = Outcome::kPass;
  std::map<std::string, std::string> values;
  std::string detail;

  /// Failures are the only outcome that makes a run unsuccessful; INFO and
  /// SKIPPED entries are reported but not counted against it.
  bool failed() const { return outcome == Outcome::kFail; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Compares two series up to `order` and fills lhs, rhs, order_compared and
/// outcome (INCONCLUSIVE when either side is truncated below `order`).
void set_series_comparison(VerificationReport& r, const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                           long order);

std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const std::string& text);

/// Rows (t-exponent, cyclotomic level, coefficient) for every stored
/// coefficient, coefficient as space-separated power-basis coordinates.
std::vector<std::vector<std::string>> series_csv_rows(const TruncatedSeries& s);
std::string report_to_csv(const VerificationReport& r);

}  // namespace padic
