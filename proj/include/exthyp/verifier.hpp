#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "exthyp/hyper.hpp"
#include "exthyp/integrals.hpp"
#include "exthyp/quadrature.hpp"

namespace exthyp {

/// `invalid` marks a case that failed validation inside a suite run.
enum class Verdict { pass, fail, inconclusive, invalid };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

struct RhsValue {
  double prefactor = 0.0;
  SeriesValue series;
  HypergeometricSpec augmented;  // the series actually summed

  double value() const { return prefactor * series.value; }
};

struct IdentityReport {
  IdentityCase identity;
  QuadratureResult lhs;
  SeriesValue rhs;
  double rhs_prefactor = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tolerance_used = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::string errata_note;
  std::optional<std::string> error;
};

/// True for the as-printed T2, C32 and C34 right-hand sides.
bool is_errata_candidate(const IdentityCase& c);

/// Gamma(2d) b^(d-mu) Gamma(mu+1) Gamma(mu-d) / (2^(d-1) Gamma(mu) Gamma(1+d+mu)) times
/// r+2Fs+2[..., mu+1, mu-d; ..., mu, mu+d+1; y/b].
RhsValue rhs_theorem1(const IdentityCase& c, const Tolerances& tol = {});

/// Right-hand side of T2 as printed (argument read as y/b) or corrected
/// (argument y/2, extra numerator d, Gamma(2d) prefactor).
RhsValue rhs_theorem2(const IdentityCase& c, const Tolerances& tol = {});

/// C31/C33 route through rhs_theorem1; corrected C32/C34 through rhs_theorem2.
RhsValue rhs_corollary(const IdentityCase& c, const Tolerances& tol = {});

/// rhs_theorem1 / rhs_theorem2 / rhs_corollary by theorem_id.
RhsValue identity_rhs(const IdentityCase& c, const Tolerances& tol = {});

/// Compares LHS quadrature against RHS series. A mismatch is a verdict;
/// only an invalid case throws (DomainError).
IdentityReport verify_identity(const IdentityCase& c, const Tolerances& tol = {});

}  // namespace exthyp
