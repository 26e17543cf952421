#pragma once

#include <cstddef>
#include <span>

#include "exthyp/quadrature.hpp"

namespace exthyp {

/// A numerator parameter paired with its extension parameter p >= 0.
struct ExtendedParameter {
  double value = 0.0;
  double extension = 0.0;

  void validate() const;
  bool is_classical() const { return extension == 0.0; }
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(x) for 0 < x <= 170, or any non-integer-pole x in that magnitude range.
double gamma_fn(double x);

/// prod Gamma(num_i) / prod Gamma(den_j), evaluated in log space. All arguments must be > 0.
double gamma_ratio(std::span<const double> num, std::span<const double> den);
double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den);

/// Rising factorial (mu)_n; (mu)_0 = 1.
double pochhammer(double mu, std::size_t n);

/// Gamma_p(z) = int_0^inf t^{z-1} exp(-t - p/t) dt.
///
/// p = 0 dispatches to Gamma(z) (requires z > 0). For p > 0 the integral is
/// taken on the line t = e^u, recentred on the saddle of the exponent and
/// scaled by its curvature. Throws NonConvergenceError when the quadrature
/// misses `tol`.
QuadratureResult extended_gamma(double z, double p, const Tolerances& tol = {});

/// Gamma_p(z) / Gamma(z), computed without forming either factor. Returns a
/// result with converged=false instead of throwing on quadrature failure.
/// Requires z not a nonpositive integer.
QuadratureResult extended_gamma_ratio(double z, double p, const Tolerances& tol = {});

/// (mu; p)_n = Gamma_p(mu + n) / Gamma(mu); p = 0 dispatches to pochhammer.
///
/// Note (mu; p)_0 = Gamma_p(mu)/Gamma(mu), which is below 1 for p > 0.
double extended_pochhammer(const ExtendedParameter& mu, std::size_t n, const Tolerances& tol = {});

}  // namespace exthyp
