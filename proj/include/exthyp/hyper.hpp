#pragma once

#include <cstddef>
#include <vector>

#include "exthyp/quadrature.hpp"
#include "exthyp/special.hpp"

namespace exthyp {

/// Parameters of rFs[(a1,p), a2..ar; b1..bs; z].
struct HypergeometricSpec {
  ExtendedParameter first_numerator;
  std::vector<double> other_numerators;
  std::vector<double> denominators;
  double argument = 0.0;

  std::size_t r() const { return 1 + other_numerators.size(); }
  std::size_t s() const { return denominators.size(); }

  /// True when some classical numerator Pochhammer vanishes, so the series is a polynomial.
  bool terminates() const;

  /// Parameter checks only (denominator poles, extension >= 0); ignores the argument.
  void validate_parameters() const;

  /// Full check: parameters plus the convergence region of the argument.
  /// Throws DomainError on bad parameters and DivergenceError when r > s+1
  /// or (r = s+1 and |z| >= 1), unless the series terminates.
  void validate() const;
};

struct SeriesValue {
  double value = 0.0;
  long terms_used = 0;
  double tail_estimate = 0.0;
  bool converged = false;
};

/// Lazily filled table of Gamma_p(a + n) / Gamma(a + n), one quadrature per n.
///
/// Shared by every series evaluation with the same (a, p): node-by-node
/// evaluations inside an integrand reuse the same entries. Not thread-safe;
/// keep one instance per thread.
class ExtendedRatioCache {
 public:
  ExtendedRatioCache(ExtendedParameter first, const Tolerances& tol);

  double ratio(std::size_t n);
  bool all_converged() const { return all_converged_; }
  std::size_t size() const { return ratios_.size(); }
  const ExtendedParameter& parameter() const { return first_; }

 private:
  ExtendedParameter first_;
  Tolerances tol_;
  std::vector<double> ratios_;
  bool all_converged_ = true;
};

/// Sum of the extended rFs series with the truncation rule below.
///
/// Stops at the first index n >= 5 where the last three terms are all below
/// tol.bound(partial sum) and the geometric tail estimate |t_n| rho/(1-rho)
/// is below the same bound; for p > 0 the last three term ratios must also
/// be < 1. z = 0 returns the n = 0 term, which is (a1;p)_0 = 1 only for p = 0.
SeriesValue eval_ext_hyper(const HypergeometricSpec& spec, const Tolerances& tol = {});
SeriesValue eval_ext_hyper(const HypergeometricSpec& spec, const Tolerances& tol,
                           ExtendedRatioCache& cache);

/// Sum of terms n = 0..last_index, no convergence test and no region check.
double ext_hyper_partial_sum(const HypergeometricSpec& spec, std::size_t last_index,
                             ExtendedRatioCache& cache);

/// Coefficient of z^n: (a1;p)_n (a2)_n...(ar)_n / ((b1)_n...(bs)_n n!).
double ext_hyper_coefficient(const HypergeometricSpec& spec, std::size_t n,
                             ExtendedRatioCache& cache);

SeriesValue eval_ext_gauss_2f1(const ExtendedParameter& a, double beta, double gamma, double z,
                               const Tolerances& tol = {});

SeriesValue eval_ext_kummer_1f1(const ExtendedParameter& a, double gamma, double z,
                                const Tolerances& tol = {});

}  // namespace exthyp
