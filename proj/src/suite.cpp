#include "exthyp/suite.hpp"

#include <omp.h>

#include <cmath>
#include <exception>

#include "exthyp/errors.hpp"

namespace exthyp {

namespace {

IdentityReport run_one(const IdentityCase& c, const Tolerances& tol) {
  try {
    return verify_identity(c, tol);
  } catch (const std::exception& e) {
    IdentityReport r;
    r.identity = c;
    r.verdict = Verdict::invalid;
    r.lhs.value = r.rhs.value = std::nan("");
    r.abs_diff = r.rel_diff = std::nan("");
    r.error = e.what();
    return r;
  }
}

}  // namespace

std::vector<IdentityReport> run_suite(std::span<const IdentityCase> cases, const Tolerances& tol, int jobs) {
  tol.validate();
  std::vector<IdentityReport> reports(cases.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const long n = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < n; ++i) reports[i] = run_one(cases[i], tol);
  return reports;
}

std::vector<IdentityReport> run_suite_serial(std::span<const IdentityCase> cases, const Tolerances& tol) {
  tol.validate();
  std::vector<IdentityReport> reports;
  reports.reserve(cases.size());
  for (const IdentityCase& c : cases) reports.push_back(run_one(c, tol));
  return reports;
}

std::vector<IdentityCase> builtin_suite(VariantSelection which) {
  std::vector<IdentityCase> out;
  const bool printed = which != VariantSelection::corrected;
  const bool corrected = which != VariantSelection::printed;

  auto add = [&](TheoremId id, const HypergeometricSpec& h, double delta, double mu, double b, double y) {
    if (!uses_scaled_argument(id)) {
      out.push_back({id, h, delta, mu, b, y, Variant::as_printed});
      return;
    }
    if (corrected) out.push_back({id, h, delta, mu, b, y, Variant::corrected});
    if (printed) out.push_back({id, h, delta, mu, b, y, Variant::as_printed});
  };

  for (TheoremId id : {TheoremId::T1, TheoremId::T2})
    for (double a1 : {0.8, 1.5})
      for (double p : {0.0, 0.5, 1.0})
        for (double delta : {0.75, 1.0})
          for (double gap : {0.5, 1.5})
            for (double b : {1.0, 2.0})
              for (double ratio : {0.25, -0.25, 0.5, -0.5})
                add(id, HypergeometricSpec{{a1, p}, {1.0}, {2.0}, 0.0}, delta, delta + gap, b, ratio * b);

  // Corollary sample on the 2F1 template (a, p), beta = 1; gamma = 2.
  for (auto [a, p] : {std::pair{1.0, 0.5}, std::pair{0.8, 0.0}, std::pair{1.0, 0.0}})
    for (double y : {0.8, -0.5}) {
      const HypergeometricSpec h{{a, p}, {1.0}, {2.0}, 0.0};
      add(TheoremId::C31, h, 0.75, 2.0, 1.0, y);
      add(TheoremId::C32, h, 0.75, 2.0, 1.0, y);
      if (p == 0.0) {
        add(TheoremId::C33, h, 0.75, 2.0, 1.0, y);
        add(TheoremId::C34, h, 0.75, 2.0, 1.0, y);
      }
    }
  return out;
}

}  // namespace exthyp
