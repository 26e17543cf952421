#pragma once

#include <cstddef>
#include <string_view>

#include "exthyp/hyper.hpp"
#include "exthyp/quadrature.hpp"

namespace exthyp {

struct OberhettingerParams {
  double alpha = 1.0;
  double beta = 2.0;
  double b = 1.0;

  /// Requires 0 < alpha < beta and b > 0.
  void validate() const;
};

enum class TheoremId { T1, T2, C31, C32, C33, C34 };
enum class Variant { as_printed, corrected };

std::string_view to_string(TheoremId id);
std::string_view to_string(Variant v);
TheoremId theorem_from_string(std::string_view s);
Variant variant_from_string(std::string_view s);

/// Inner argument y/K(z) (T1, C31, C33) or y z/K(z) (T2, C32, C34).
bool uses_scaled_argument(TheoremId id);

/// One instance of an integral identity. hyper.argument is ignored.
struct IdentityCase {
  TheoremId theorem_id = TheoremId::T1;
  HypergeometricSpec hyper;
  double delta = 1.0;
  double mu = 2.0;
  double b = 1.0;
  double y = 0.0;
  Variant variant = Variant::as_printed;

  /// Throws DomainError when the case violates the theorem hypotheses or
  /// the inner series would leave its convergence region on (0, inf).
  void validate() const;
};

/// K(z) = z + b + sqrt(z^2 + 2bz).
double kernel(double z, double b);

/// 2 beta b^-beta (b/2)^alpha Gamma(2 alpha) Gamma(beta - alpha) / Gamma(1 + alpha + beta).
double oberhettinger_closed_form(const OberhettingerParams& params);

/// int_0^inf z^(alpha-1) K(z)^-beta dz by quadrature after z = b(cosh u - 1).
QuadratureResult oberhettinger_numeric(const OberhettingerParams& params, const Tolerances& tol = {});

/// Left-hand side of the T1 family. Inner series run at tol.rel_tol / 10
/// and share one extended-ratio cache across nodes. Throws
/// NonConvergenceError naming the node z when an inner series fails.
QuadratureResult theorem1_lhs(const IdentityCase& c, const Tolerances& tol = {});

/// Left-hand side of the T2 family (inner argument y z / K(z)).
QuadratureResult theorem2_lhs(const IdentityCase& c, const Tolerances& tol = {});

/// theorem1_lhs / theorem2_lhs chosen by c.theorem_id.
QuadratureResult identity_lhs(const IdentityCase& c, const Tolerances& tol = {});

/// Left-hand side with the inner series cut after the z^N term.
QuadratureResult truncated_lhs(const IdentityCase& c, std::size_t last_index, const Tolerances& tol = {});

}  // namespace exthyp
