#include "exthyp/special.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "exthyp/errors.hpp"

namespace exthyp {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

// lgamma with sign, without touching the global signgam.
double log_abs_gamma(double x, int& sign) {
#if defined(__GLIBC__) || defined(__APPLE__)
  return ::lgamma_r(x, &sign);
#else
  sign = (x > 0.0 || std::fmod(std::floor(x), 2.0) != 0.0) ? 1 : -1;
  return std::lgamma(x);
#endif
}

struct Saddle {
  double log_peak;  // exponent value at the saddle
  double center;    // u0
  double width;     // 1 / sqrt(-phi''(u0))
  double w;         // e^{u0}
};

// Exponent phi(u) = z u - e^u - p e^{-u} of the integrand of Gamma_p on t = e^u.
Saddle saddle(double z, double p) {
  // phi'(u) = 0  <=>  w^2 - z w - p = 0,  w = e^u.
  const double disc = std::sqrt(z * z + 4.0 * p);
  const double w = z >= 0.0 ? 0.5 * (z + disc) : 2.0 * p / (disc - z);
  const double u0 = std::log(w);
  const double curvature = w + p / w;
  return {z * u0 - w - p / w, u0, 1.0 / std::sqrt(curvature), w};
}

// int exp(phi(u) - phi(u0)) du, and the log of the peak factor.
QuadratureResult scaled_integral(double z, double p, const Tolerances& tol, double& log_peak) {
  const Saddle s = saddle(z, p);
  log_peak = s.log_peak;
  const double pw = p / s.w;
  auto g = [&](double v) {
    const double d = s.width * v;
    const double expo = z * d - s.w * std::expm1(d) - pw * std::expm1(-d);
    return s.width * std::exp(expo);
  };
  return integrate_real_line(g, tol);
}

}  // namespace

void ExtendedParameter::validate() const {
  if (!std::isfinite(value)) throw DomainError("extended parameter: value must be finite");
  if (!(extension >= 0.0) || !std::isfinite(extension))
    throw DomainError("extended parameter: extension p must be a finite real >= 0");
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  int sign = 1;
  return log_abs_gamma(x, sign);
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) throw DomainError("gamma: pole at nonpositive integer");
  if (std::abs(x) > 170.0) throw DomainError("gamma: |x| > 170 overflows; use gamma_ratio");
  return std::tgamma(x);
}

double gamma_ratio(std::span<const double> num, std::span<const double> den) {
  double acc = 0.0;
  for (double x : num) acc += log_gamma(x);
  for (double x : den) acc -= log_gamma(x);
  return std::exp(acc);
}

double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  return gamma_ratio(std::span<const double>(num.begin(), num.size()),
                     std::span<const double>(den.begin(), den.size()));
}

double pochhammer(double mu, std::size_t n) {
  double acc = 1.0;
  for (std::size_t k = 0; k < n; ++k) acc *= mu + static_cast<double>(k);
  return acc;
}

QuadratureResult extended_gamma(double z, double p, const Tolerances& tol) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw DomainError("extended_gamma: p must be a finite real >= 0");
  if (p == 0.0) {
    if (!(z > 0.0)) throw DomainError("extended_gamma: p = 0 requires z > 0");
    QuadratureResult r;
    r.value = std::tgamma(z);
    r.converged = true;
    return r;
  }
  double log_peak = 0.0;
  QuadratureResult r = scaled_integral(z, p, tol, log_peak);
  if (!r.converged)
    throw NonConvergenceError("extended_gamma: quadrature did not converge for z = " +
                              std::to_string(z) + ", p = " + std::to_string(p));
  const double scale = std::exp(log_peak);
  r.value *= scale;
  r.error_estimate *= scale;
  return r;
}

QuadratureResult extended_gamma_ratio(double z, double p, const Tolerances& tol) {
  if (is_nonpositive_integer(z)) throw DomainError("extended_gamma_ratio: Gamma(z) has a pole");
  if (!(p >= 0.0) || !std::isfinite(p)) throw DomainError("extended_gamma_ratio: p must be >= 0");
  if (p == 0.0) {
    QuadratureResult r;
    r.value = 1.0;
    r.converged = true;
    return r;
  }
  double log_peak = 0.0;
  QuadratureResult r = scaled_integral(z, p, tol, log_peak);
  int sign = 1;
  const double lg = log_abs_gamma(z, sign);
  const double scale = sign * std::exp(log_peak - lg);
  r.value *= scale;
  r.error_estimate *= std::abs(scale);
  return r;
}

double extended_pochhammer(const ExtendedParameter& mu, std::size_t n, const Tolerances& tol) {
  mu.validate();
  if (mu.is_classical()) return pochhammer(mu.value, n);
  if (is_nonpositive_integer(mu.value))
    throw DomainError("extended_pochhammer: mu must not be a nonpositive integer when p > 0");
  // mu is not an integer pole, so neither is mu + n.
  const QuadratureResult ratio = extended_gamma_ratio(mu.value + static_cast<double>(n), mu.extension, tol);
  if (!ratio.converged) throw NonConvergenceError("extended_pochhammer: quadrature did not converge");
  return ratio.value * pochhammer(mu.value, n);
}

}  // namespace exthyp
