#include "exthyp/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "exthyp/errors.hpp"

namespace exthyp {

void Tolerances::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw DomainError("tolerances: rel_tol and abs_tol must be positive");
  if (max_levels < 3) throw DomainError("tolerances: max_levels must be at least 3");
  if (max_terms < 1) throw DomainError("tolerances: max_terms must be positive");
}

namespace {

constexpr double kTailRatio = 1e-20;

struct Range {
  long lo = 0;  // base-grid index bounds, inclusive
  long hi = 0;
  bool truncated = true;  // false when a cap was hit before the integrand decayed
};

// Trapezoid on a unit base grid [lo, hi] (in units of h0), refined by halving.
// `cap_lo`/`cap_hi` bound t on either side; `min_extent` is how far out to walk before the tail test applies.
QuadratureResult trapezoid(const Integrand& g, double h0, double cap_lo, double cap_hi, double min_extent,
                           const Tolerances& tol) {
  QuadratureResult out;
  double sum = 0.0;
  double peak = 0.0;

  auto eval = [&](double t, bool& ok) {
    const double v = g(t);
    ++out.evaluations;
    if (!std::isfinite(v)) ok = false;
    return v;
  };

  bool ok = true;
  sum = eval(0.0, ok);
  peak = std::abs(sum);

  Range range;
  for (int dir : {+1, -1}) {
    int quiet = 0;
    long k = 1;
    bool decayed = false;
    for (;; ++k) {
      const double t = dir * k * h0;
      if (t > cap_hi || t < -cap_lo) break;
      const double v = eval(t, ok);
      if (!ok) break;
      sum += v;
      peak = std::max(peak, std::abs(v));
      if (std::abs(t) >= min_extent && std::abs(v) <= kTailRatio * peak) {
        if (++quiet >= 2) {
          decayed = true;
          break;
        }
      } else {
        quiet = 0;
      }
    }
    if (!decayed) range.truncated = false;
    if (dir > 0)
      range.hi = decayed ? k : k - 1;
    else
      range.lo = -(decayed ? k : k - 1);
    if (!ok) break;
  }

  if (!ok) {
    out.value = std::nan("");
    out.error_estimate = std::numeric_limits<double>::infinity();
    return out;
  }

  double estimate = h0 * sum;
  double h = h0;
  double error = std::numeric_limits<double>::infinity();
  const double t_lo = range.lo * h0;
  for (int level = 1; level <= tol.max_levels; ++level) {
    h *= 0.5;
    double fresh = 0.0;
    const long fresh_nodes = (range.hi - range.lo) << (level - 1);
    for (long j = 0; j < fresh_nodes; ++j) {
      fresh += eval(t_lo + static_cast<double>(2 * j + 1) * h, ok);
      if (!ok) break;
    }
    if (!ok) {
      out.value = std::nan("");
      out.error_estimate = std::numeric_limits<double>::infinity();
      return out;
    }
    sum += fresh;
    const double next = h * sum;
    error = std::abs(next - estimate);
    estimate = next;
    if (level >= 2 && error <= tol.bound(estimate)) {
      out.converged = range.truncated;
      break;
    }
  }
  out.value = estimate;
  out.error_estimate = error;
  return out;
}

}  // namespace

QuadratureResult integrate_real_line(const Integrand& f, const Tolerances& tol) {
  tol.validate();
  return trapezoid(f, 1.0, 1000.0, 1000.0, 3.0, tol);
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double singular_exponent,
                                         const Tolerances& tol) {
  tol.validate();
  if (!(singular_exponent > -1.0))
    throw DomainError("integrate_semi_infinite: singular exponent must exceed -1");

  // z = exp(c sinh t). With c = pi / (2 (s + 1)) for s < 0 the left end decays like
  // exp(-pi/2 sinh|t|) regardless of how close s is to -1.
  const double c = singular_exponent < 0.0 ? 0.5 * std::numbers::pi / (singular_exponent + 1.0)
                                           : 0.5 * std::numbers::pi;
  // Past the right cap z overflows. On the left z underflows to 0 first, which is a
  // genuine zero of the mapped integrand, so that side gets extra room.
  const double cap_hi = std::asinh(700.0 / c);
  const double cap_lo = std::asinh(800.0 / c) + 2.0;
  auto g = [&](double t) {
    const double z = std::exp(c * std::sinh(t));
    if (z == 0.0 || std::isinf(z)) return 0.0;
    const double fz = f(z);
    if (fz == 0.0) return 0.0;
    return fz * z * c * std::cosh(t);
  };
  return trapezoid(g, 1.0, cap_lo, cap_hi, 1.0, tol);
}

}  // namespace exthyp
