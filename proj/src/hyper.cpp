#include "exthyp/hyper.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "exthyp/errors.hpp"

namespace exthyp {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

std::size_t required_terms(const Tolerances& tol) { return static_cast<std::size_t>(tol.max_terms); }

// Ratio of the classical coefficient for n + 1 to that for n, times z.
double classical_step(const HypergeometricSpec& spec, std::size_t n) {
  const double k = static_cast<double>(n);
  double step = (spec.first_numerator.value + k);
  for (double a : spec.other_numerators) step *= a + k;
  for (double b : spec.denominators) step /= b + k;
  return step * spec.argument / (k + 1.0);
}

void check_cache(const HypergeometricSpec& spec, const ExtendedRatioCache& cache) {
  const auto& c = cache.parameter();
  if (c.value != spec.first_numerator.value || c.extension != spec.first_numerator.extension)
    throw std::invalid_argument("extended ratio cache built for a different first numerator");
}

}  // namespace

bool HypergeometricSpec::terminates() const {
  if (first_numerator.is_classical() && is_nonpositive_integer(first_numerator.value)) return true;
  for (double a : other_numerators)
    if (is_nonpositive_integer(a)) return true;
  return false;
}

void HypergeometricSpec::validate_parameters() const {
  first_numerator.validate();
  if (!first_numerator.is_classical() && is_nonpositive_integer(first_numerator.value))
    throw DomainError("hypergeometric: extended numerator must not be a nonpositive integer when p > 0");
  for (double a : other_numerators)
    if (!std::isfinite(a)) throw DomainError("hypergeometric: numerator parameters must be finite");
  for (double b : denominators) {
    if (!std::isfinite(b)) throw DomainError("hypergeometric: denominator parameters must be finite");
    if (is_nonpositive_integer(b))
      throw DomainError("hypergeometric: denominator " + std::to_string(b) + " is zero or a negative integer");
  }
}

void HypergeometricSpec::validate() const {
  validate_parameters();
  if (!std::isfinite(argument)) throw DomainError("hypergeometric: argument must be finite");
  if (terminates() || argument == 0.0) return;
  if (r() > s() + 1)
    throw DivergenceError("hypergeometric: r > s + 1, the series diverges for z != 0");
  if (r() == s() + 1 && std::abs(argument) >= 1.0)
    throw DivergenceError("hypergeometric: r = s + 1 requires |z| < 1");
}

ExtendedRatioCache::ExtendedRatioCache(ExtendedParameter first, const Tolerances& tol)
    : first_(first), tol_(tol) {
  first_.validate();
}

double ExtendedRatioCache::ratio(std::size_t n) {
  if (first_.is_classical()) return 1.0;
  while (ratios_.size() <= n) {
    const double z = first_.value + static_cast<double>(ratios_.size());
    const QuadratureResult q = extended_gamma_ratio(z, first_.extension, tol_);
    if (!q.converged) all_converged_ = false;
    ratios_.push_back(q.value);
  }
  return ratios_[n];
}

SeriesValue eval_ext_hyper(const HypergeometricSpec& spec, const Tolerances& tol) {
  ExtendedRatioCache cache(spec.first_numerator, tol);
  return eval_ext_hyper(spec, tol, cache);
}

SeriesValue eval_ext_hyper(const HypergeometricSpec& spec, const Tolerances& tol,
                           ExtendedRatioCache& cache) {
  tol.validate();
  spec.validate();
  check_cache(spec, cache);

  SeriesValue out;
  if (spec.argument == 0.0) {
    out.value = cache.ratio(0);
    out.terms_used = 1;
    out.converged = cache.all_converged();
    return out;
  }

  const bool extended = !spec.first_numerator.is_classical();
  const std::size_t limit = required_terms(tol);
  double classical = 1.0;
  double sum = 0.0;
  double previous = 0.0;
  double rho = 1.0;
  int small_run = 0;
  int contracting_run = 0;
  std::size_t n = 0;
  bool stopped = false;

  for (; n < limit; ++n) {
    const double term = classical * cache.ratio(n);
    sum += term;

    small_run = std::abs(term) <= tol.bound(sum) ? small_run + 1 : 0;
    if (n > 0) {
      if (previous != 0.0)
        rho = std::abs(term / previous);
      else if (term == 0.0)
        rho = 0.0;  // both underflowed
      contracting_run = rho < 1.0 ? contracting_run + 1 : 0;
    }

    const double step = classical_step(spec, n);
    if (step == 0.0 && classical != 0.0) {
      // A numerator Pochhammer vanished: every later term is exactly zero.
      out.value = sum;
      out.terms_used = static_cast<long>(n + 1);
      out.tail_estimate = 0.0;
      out.converged = cache.all_converged();
      return out;
    }

    if (n >= 5 && small_run >= 3 && (!extended || contracting_run >= 3)) {
      const double tail = rho < 1.0 ? std::abs(term) * rho / (1.0 - rho)
                                    : std::abs(term) * static_cast<double>(tol.max_terms);
      if (tail <= tol.bound(sum)) {
        out.tail_estimate = tail;
        stopped = true;
        break;
      }
    }
    previous = term;
    classical *= step;
    if (!std::isfinite(classical)) break;
  }

  out.value = sum;
  out.terms_used = static_cast<long>(stopped ? n + 1 : n);
  if (!stopped) {
    out.tail_estimate = rho < 1.0 ? std::abs(previous) * rho / (1.0 - rho)
                                  : std::abs(previous) * static_cast<double>(tol.max_terms);
    if (!std::isfinite(out.tail_estimate)) out.tail_estimate = std::numeric_limits<double>::infinity();
  }
  out.converged = stopped && cache.all_converged();
  return out;
}

double ext_hyper_coefficient(const HypergeometricSpec& spec, std::size_t n, ExtendedRatioCache& cache) {
  spec.validate_parameters();
  check_cache(spec, cache);
  // Factor by factor, so the Pochhammers and n! never overflow separately.
  HypergeometricSpec unit = spec;
  unit.argument = 1.0;
  double c = cache.ratio(n);
  for (std::size_t k = 0; k < n; ++k) c *= classical_step(unit, k);
  return c;
}

double ext_hyper_partial_sum(const HypergeometricSpec& spec, std::size_t last_index,
                             ExtendedRatioCache& cache) {
  spec.validate_parameters();
  check_cache(spec, cache);
  double classical = 1.0;
  double sum = 0.0;
  for (std::size_t n = 0; n <= last_index; ++n) {
    sum += classical * cache.ratio(n);
    classical *= classical_step(spec, n);
  }
  return sum;
}

SeriesValue eval_ext_gauss_2f1(const ExtendedParameter& a, double beta, double gamma, double z,
                               const Tolerances& tol) {
  return eval_ext_hyper(HypergeometricSpec{a, {beta}, {gamma}, z}, tol);
}

SeriesValue eval_ext_kummer_1f1(const ExtendedParameter& a, double gamma, double z, const Tolerances& tol) {
  return eval_ext_hyper(HypergeometricSpec{a, {}, {gamma}, z}, tol);
}

}  // namespace exthyp
