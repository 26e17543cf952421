#include "exthyp/integrals.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "exthyp/errors.hpp"
#include "exthyp/special.hpp"

namespace exthyp {

namespace {

// ln sinh(x), x > 0, without overflow.
double log_sinh(double x) {
  if (x > 20.0) return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

// ln(cosh u - 1) = ln 2 + 2 ln sinh(u/2).
double log_cosh_minus_one(double u) { return std::numbers::ln2 + 2.0 * log_sinh(0.5 * u); }

// Log of z^(alpha-1) K(z)^(-beta) dz/du on z = b (cosh u - 1), where K = b e^u.
double log_kernel_weight(double u, double alpha, double beta, double b) {
  const double lb = std::log(b);
  return (alpha - 1.0) * (lb + log_cosh_minus_one(u)) - beta * (lb + u) + lb + log_sinh(u);
}

// Inner series argument at node u for a case.
double inner_argument(const IdentityCase& c, double u) {
  if (uses_scaled_argument(c.theorem_id)) {
    // z / K(z) = (1 - e^-u)^2 / 2
    const double q = -std::expm1(-u);
    return 0.5 * c.y * q * q;
  }
  return c.y * std::exp(-u) / c.b;
}

std::string node_message(const IdentityCase& c, double u) {
  std::ostringstream os;
  os.precision(17);
  os << "inner series did not converge at node z = " << c.b * 2.0 * std::pow(std::sinh(0.5 * u), 2)
     << " (u = " << u << ") for " << to_string(c.theorem_id);
  return os.str();
}

template <class Inner>
QuadratureResult kernel_integral(const IdentityCase& c, const Tolerances& tol, Inner&& inner) {
  auto f = [&](double u) {
    const double lw = log_kernel_weight(u, c.delta, c.mu, c.b);
    if (lw < -745.0) return 0.0;
    return std::exp(lw) * inner(u);
  };
  return integrate_semi_infinite(f, 2.0 * c.delta - 1.0, tol);
}

QuadratureResult lhs_impl(const IdentityCase& c, const Tolerances& tol) {
  tol.validate();
  c.validate();
  const Tolerances inner_tol = tol.tightened(0.1);
  ExtendedRatioCache cache(c.hyper.first_numerator, inner_tol);
  HypergeometricSpec spec = c.hyper;
  return kernel_integral(c, tol, [&](double u) {
    spec.argument = inner_argument(c, u);
    const SeriesValue sv = eval_ext_hyper(spec, inner_tol, cache);
    if (!sv.converged) throw NonConvergenceError(node_message(c, u));
    return sv.value;
  });
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::C31: return "C31";
    case TheoremId::C32: return "C32";
    case TheoremId::C33: return "C33";
    case TheoremId::C34: return "C34";
  }
  return "?";
}

std::string_view to_string(Variant v) { return v == Variant::as_printed ? "as_printed" : "corrected"; }

TheoremId theorem_from_string(std::string_view s) {
  for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::C31, TheoremId::C32, TheoremId::C33,
                       TheoremId::C34})
    if (s == to_string(id)) return id;
  throw DomainError("unknown theorem id '" + std::string(s) + "'");
}

Variant variant_from_string(std::string_view s) {
  if (s == "as_printed" || s == "printed") return Variant::as_printed;
  if (s == "corrected") return Variant::corrected;
  throw DomainError("unknown variant '" + std::string(s) + "'");
}

bool uses_scaled_argument(TheoremId id) {
  return id == TheoremId::T2 || id == TheoremId::C32 || id == TheoremId::C34;
}

void OberhettingerParams::validate() const {
  if (!(alpha > 0.0 && alpha < beta) || !std::isfinite(beta))
    throw DomainError("oberhettinger: requires 0 < alpha < beta");
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("oberhettinger: requires b > 0");
}

void IdentityCase::validate() const {
  if (!(delta > 0.0) || !(mu > delta) || !std::isfinite(mu))
    throw DomainError("identity case: requires mu > delta > 0");
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("identity case: requires b > 0");
  if (!std::isfinite(y)) throw DomainError("identity case: y must be finite");
  hyper.validate_parameters();

  const bool corollary = theorem_id != TheoremId::T1 && theorem_id != TheoremId::T2;
  if (corollary && (hyper.r() != 2 || hyper.s() != 1))
    throw DomainError("identity case: corollaries need a 2F1 template (r = 2, s = 1)");
  if ((theorem_id == TheoremId::C33 || theorem_id == TheoremId::C34) && !hyper.first_numerator.is_classical())
    throw DomainError("identity case: C33/C34 are the p = 0 corollaries");

  if (hyper.terminates() || y == 0.0) return;
  if (hyper.r() > hyper.s() + 1)
    throw DomainError("identity case: inner series has r > s + 1 and diverges");
  if (hyper.r() == hyper.s() + 1) {
    // sup over z of |y/K(z)| is |y|/b; of |y z/K(z)| it is |y|/2.
    const double sup = uses_scaled_argument(theorem_id) ? std::abs(y) / 2.0 : std::abs(y) / b;
    if (sup >= 1.0)
      throw DomainError(uses_scaled_argument(theorem_id) ? "identity case: requires |y| < 2"
                                                         : "identity case: requires |y/b| < 1");
  }
}

double kernel(double z, double b) {
  if (!(z >= 0.0)) throw DomainError("kernel: requires z >= 0");
  if (!(b > 0.0)) throw DomainError("kernel: requires b > 0");
  return z + b + std::sqrt(z * z + 2.0 * b * z);
}

double oberhettinger_closed_form(const OberhettingerParams& params) {
  params.validate();
  const double a = params.alpha;
  const double be = params.beta;
  const double lb = std::log(params.b);
  const double g = gamma_ratio({2.0 * a, be - a}, {1.0 + a + be});
  return 2.0 * be * std::exp(-be * lb + a * (lb - std::numbers::ln2)) * g;
}

QuadratureResult oberhettinger_numeric(const OberhettingerParams& params, const Tolerances& tol) {
  params.validate();
  tol.validate();
  auto f = [&](double u) {
    const double lw = log_kernel_weight(u, params.alpha, params.beta, params.b);
    return lw < -745.0 ? 0.0 : std::exp(lw);
  };
  return integrate_semi_infinite(f, 2.0 * params.alpha - 1.0, tol);
}

QuadratureResult theorem1_lhs(const IdentityCase& c, const Tolerances& tol) {
  if (uses_scaled_argument(c.theorem_id))
    throw DomainError("theorem1_lhs: " + std::string(to_string(c.theorem_id)) + " uses the y z/K(z) argument");
  return lhs_impl(c, tol);
}

QuadratureResult theorem2_lhs(const IdentityCase& c, const Tolerances& tol) {
  if (!uses_scaled_argument(c.theorem_id))
    throw DomainError("theorem2_lhs: " + std::string(to_string(c.theorem_id)) + " uses the y/K(z) argument");
  return lhs_impl(c, tol);
}

QuadratureResult identity_lhs(const IdentityCase& c, const Tolerances& tol) { return lhs_impl(c, tol); }

QuadratureResult truncated_lhs(const IdentityCase& c, std::size_t last_index, const Tolerances& tol) {
  tol.validate();
  c.validate();
  ExtendedRatioCache cache(c.hyper.first_numerator, tol.tightened(0.1));
  HypergeometricSpec spec = c.hyper;
  return kernel_integral(c, tol, [&](double u) {
    spec.argument = inner_argument(c, u);
    return ext_hyper_partial_sum(spec, last_index, cache);
  });
}

}  // namespace exthyp
