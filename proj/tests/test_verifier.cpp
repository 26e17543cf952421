#include <cmath>
#include <numbers>

#include "doctest.h"
#include "exthyp/errors.hpp"
#include "exthyp/verifier.hpp"
#include "oracles.hpp"

using namespace exthyp;
using oracle::rel_diff;

namespace {

IdentityCase make_case(TheoremId id, double a1, double p, double delta, double mu, double b, double y,
                       Variant variant) {
  IdentityCase c;
  c.theorem_id = id;
  c.hyper = HypergeometricSpec{{a1, p}, {1.0}, {2.0}, 0.0};
  c.delta = delta;
  c.mu = mu;
  c.b = b;
  c.y = y;
  c.variant = variant;
  return c;
}

}  // namespace

TEST_CASE("duplication formula behind the prefactors") {
  // Gamma(2d) = 2^(2d-1) Gamma(d) Gamma(d+1/2) / sqrt(pi)
  for (double d : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double lhs = std::tgamma(2.0 * d);
    const double rhs = std::pow(2.0, 2.0 * d - 1.0) * gamma_ratio({d, d + 0.5}, {0.5});
    CHECK(rel_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("prefactors reduce to the closed form at y = 0") {
  for (double d : {0.5, 0.75, 1.0, 2.0})
    for (double mu : {d + 0.5, d + 2.0})
      for (double b : {0.5, 1.0, 3.0}) {
        const double closed = oberhettinger_closed_form({d, mu, b});
        const IdentityCase t1 = make_case(TheoremId::T1, 1.0, 0.0, d, mu, b, 0.0, Variant::corrected);
        CHECK(rel_diff(rhs_theorem1(t1).value(), closed) < 1e-13);
        const IdentityCase t2 = make_case(TheoremId::T2, 1.0, 0.0, d, mu, b, 0.0, Variant::corrected);
        CHECK(rel_diff(rhs_theorem2(t2).value(), closed) < 1e-13);
      }
}

TEST_CASE("corrected right-hand side equals the term-wise closed-form sum") {
  for (double p : {0.0, 0.5})
    for (double y : {-0.8, 0.6, 1.5}) {
      const IdentityCase c = make_case(TheoremId::T2, 0.8, p, 0.75, 1.75, 1.0, y, Variant::corrected);
      CHECK(rel_diff(rhs_theorem2(c).value(), oracle::termwise(c, 150)) < 1e-10);
    }
  for (double y : {-0.5, 0.25}) {
    const IdentityCase c = make_case(TheoremId::T1, 1.5, 0.5, 1.0, 2.5, 2.0, y, Variant::corrected);
    CHECK(rel_diff(rhs_theorem1(c).value(), oracle::termwise(c, 150)) < 1e-10);
  }
}

TEST_CASE("T1 holds") {
  for (double p : {0.0, 0.5}) {
    const IdentityReport r = verify_identity(make_case(TheoremId::T1, 1.0, p, 1.0, 2.0, 1.0, 0.5, Variant::as_printed));
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.rel_diff < 1e-9);
    CHECK(r.errata_note.empty());
  }
}

TEST_CASE("T2: corrected holds, as printed does not") {
  const IdentityReport fixed = verify_identity(make_case(TheoremId::T2, 1.0, 0.0, 1.0, 2.5, 1.0, 0.5, Variant::corrected));
  CHECK(fixed.verdict == Verdict::pass);
  CHECK(fixed.rel_diff < 1e-9);
  CHECK(fixed.errata_note.find("corrected") != std::string::npos);

  const IdentityReport printed = verify_identity(make_case(TheoremId::T2, 1.0, 0.0, 1.0, 2.5, 1.0, 0.5, Variant::as_printed));
  CHECK(printed.verdict == Verdict::fail);
  CHECK(printed.rel_diff > 1e-3);
  CHECK(printed.errata_note.find("suspected misprint") != std::string::npos);
  CHECK(is_errata_candidate(printed.identity));
  CHECK_FALSE(is_errata_candidate(fixed.identity));
}

TEST_CASE("T2 with p > 0") {
  const IdentityReport r = verify_identity(make_case(TheoremId::T2, 1.0, 0.3, 0.75, 2.0, 2.0, -0.6, Variant::corrected));
  CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("corollaries") {
  const IdentityCase c32 = make_case(TheoremId::C32, 1.0, 0.5, 0.75, 2.0, 1.0, 0.8, Variant::corrected);
  const IdentityReport r32 = verify_identity(c32);
  CHECK(r32.verdict == Verdict::pass);
  CHECK(rel_diff(r32.rhs_prefactor * r32.rhs.value, 0.21459285912105104) < 1e-10);
  // Corrected C32 is T2 with the 2F1 inner series.
  IdentityCase as_t2 = c32;
  as_t2.theorem_id = TheoremId::T2;
  CHECK(rhs_corollary(c32).value() == rhs_theorem2(as_t2).value());

  const IdentityCase c31 = make_case(TheoremId::C31, 1.0, 0.5, 0.75, 2.0, 1.0, 0.8, Variant::corrected);
  CHECK(verify_identity(c31).verdict == Verdict::pass);
  const IdentityCase c33 = make_case(TheoremId::C33, 0.8, 0.0, 0.75, 2.0, 1.0, -0.5, Variant::corrected);
  CHECK(verify_identity(c33).verdict == Verdict::pass);

  const IdentityCase c34 = make_case(TheoremId::C34, 0.8, 0.0, 0.75, 2.0, 1.0, 0.8, Variant::as_printed);
  const IdentityReport r34 = verify_identity(c34);
  CHECK(r34.verdict == Verdict::fail);
  CHECK(r34.errata_note.find("five-entry") != std::string::npos);
  CHECK(rhs_corollary(c34).augmented.denominators.size() == 5);

  CHECK_THROWS_AS(rhs_corollary(make_case(TheoremId::T1, 1.0, 0.0, 1.0, 2.0, 1.0, 0.5, Variant::corrected)),
                  DomainError);
}

TEST_CASE("report fields are coherent") {
  const IdentityReport r = verify_identity(make_case(TheoremId::T1, 0.8, 0.5, 0.75, 2.25, 2.0, -1.0, Variant::corrected));
  const double rhs = r.rhs_prefactor * r.rhs.value;
  CHECK(std::abs(r.abs_diff - std::abs(r.lhs.value - rhs)) <= 1e-14 * std::abs(rhs));
  CHECK(std::abs(r.rel_diff - r.abs_diff / std::abs(r.lhs.value)) <= 1e-14 * r.rel_diff + 1e-300);
  CHECK(r.tolerance_used >= 1e-6);
  CHECK_FALSE(r.error.has_value());
}

TEST_CASE("non-convergence is inconclusive, never a throw") {
  Tolerances starved{};
  starved.max_terms = 6;
  const IdentityCase c = make_case(TheoremId::T1, 1.0, 0.0, 1.0, 2.0, 1.0, 0.9, Variant::corrected);
  IdentityReport r;
  CHECK_NOTHROW(r = verify_identity(c, starved));
  CHECK(r.verdict == Verdict::inconclusive);
  CHECK(r.error.has_value());
}

TEST_CASE("invalid cases throw") {
  CHECK_THROWS_AS(verify_identity(make_case(TheoremId::T1, 1.0, 0.0, 2.0, 1.0, 1.0, 0.5, Variant::corrected)),
                  DomainError);
  CHECK_THROWS_AS(verify_identity(make_case(TheoremId::T1, 1.0, 0.0, 1.0, 2.0, 1.0, 0.5, Variant::corrected),
                                  Tolerances{-1.0, 1e-14, 12, 100}),
                  DomainError);
}

TEST_CASE("verification is deterministic") {
  const IdentityCase c = make_case(TheoremId::T2, 0.8, 0.5, 1.0, 2.5, 1.0, 0.7, Variant::corrected);
  const IdentityReport a = verify_identity(c);
  const IdentityReport b = verify_identity(c);
  CHECK(a.lhs.value == b.lhs.value);
  CHECK(a.rhs.value == b.rhs.value);
  CHECK(a.rel_diff == b.rel_diff);
  CHECK(a.errata_note == b.errata_note);
}

TEST_CASE("verdict names") {
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::inconclusive, Verdict::invalid})
    CHECK(verdict_from_string(to_string(v)) == v);
  CHECK_THROWS_AS(verdict_from_string("maybe"), DomainError);
}
