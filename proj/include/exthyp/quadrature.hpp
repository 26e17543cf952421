#pragma once

#include <algorithm>
#include <cmath>
#include <functional>

namespace exthyp {

/// Accuracy targets shared by the quadrature engine and the series summers.
struct Tolerances {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_levels = 12;
  int max_terms = 10000;

  /// Throws DomainError unless rel_tol > 0, abs_tol > 0, max_levels >= 3, max_terms >= 1.
  void validate() const;

  double bound(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }

  /// Same tolerances with rel_tol scaled by `factor`.
  Tolerances tightened(double factor) const {
    Tolerances t = *this;
    t.rel_tol *= factor;
    return t;
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  long evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Trapezoidal rule on the whole real line with step halving.
///
/// The integrand must decay fast (Gaussian or doubly-exponentially) at both
/// infinities; the rule is then spectrally accurate. Nodes are laid out on a
/// unit-spaced base grid around the origin, truncated once the integrand has
/// fallen below 1e-20 of its peak, and refined by halving until two
/// successive levels agree to `tol`. Failure is reported through
/// `converged == false`, never by throwing.
QuadratureResult integrate_real_line(const Integrand& f, const Tolerances& tol);

/// Integral of f over (0, inf) with an exp-sinh change of variables.
///
/// `singular_exponent` s describes f(z) ~ C z^s as z -> 0+; it must exceed -1.
/// For s < 0 the map is stretched so that the transformed integrand is
/// bounded at the left end. f must decay algebraically (faster than 1/z) or
/// better at infinity. Throws DomainError if s <= -1.
QuadratureResult integrate_semi_infinite(const Integrand& f, double singular_exponent,
                                         const Tolerances& tol);

}  // namespace exthyp
