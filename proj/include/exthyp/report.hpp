#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "exthyp/integrals.hpp"
#include "exthyp/quadrature.hpp"
#include "exthyp/suite.hpp"
#include "exthyp/verifier.hpp"

namespace exthyp {

enum class ReportFormat { json, csv };

/// Shortest decimal string that parses back to the same double.
std::string shortest_repr(double v);

/// Per-case JSON record:
/// {theorem_id, variant, params:{a_list, beta_list, p, delta, mu, b, y},
///  lhs:{value, error_estimate, evaluations}, rhs:{prefactor, series_value, terms_used, tail_estimate},
///  abs_diff, rel_diff, tolerance_used, verdict, errata_note}
/// plus "error" when the case raised.
nlohmann::json to_json(const IdentityReport& r);

nlohmann::json params_to_json(const IdentityCase& c);

/// Config case: {theorem_id, variant?, params:{...}}. Returns false when no
/// variant was given (the caller chooses). Throws DomainError on bad input.
IdentityCase case_from_json(const nlohmann::json& j, bool& has_variant);

Tolerances tolerances_from_json(const nlohmann::json& j, Tolerances defaults);
nlohmann::json to_json(const Tolerances& tol);

struct VerdictCounts {
  std::map<std::string, long> counts;  // verdict -> number of cases
  long errata_candidates = 0;

  bool operator==(const VerdictCounts&) const = default;
};

VerdictCounts count_verdicts(std::span<const IdentityReport> reports);

/// Whole report document: {"tolerances", "summary", "cases": [...]}.
nlohmann::json report_document(std::span<const IdentityReport> reports, const Tolerances& tol);

void write_csv(std::ostream& os, std::span<const IdentityReport> reports);

/// Reads back either a JSON report document or a CSV report.
VerdictCounts summarize_report(std::istream& is);

/// 0 when every non-errata case passes, 1 if any fails, else 3 if any is
/// inconclusive. As-printed T2/C32/C34 cases never affect the code.
int verify_exit_code(std::span<const IdentityReport> reports);

}  // namespace exthyp
