#pragma once

#include <span>
#include <vector>

#include "exthyp/integrals.hpp"
#include "exthyp/verifier.hpp"

namespace exthyp {

/// Runs every case with OpenMP over cases; reports come back in input order.
/// jobs <= 0 uses the OpenMP default thread count. Invalid cases yield a
/// report with verdict `invalid` and do not affect the others.
std::vector<IdentityReport> run_suite(std::span<const IdentityCase> cases, const Tolerances& tol,
                                      int jobs = 0);

/// Single-threaded reference for run_suite.
std::vector<IdentityReport> run_suite_serial(std::span<const IdentityCase> cases,
                                             const Tolerances& tol);

enum class VariantSelection { printed, corrected, both };

/// Built-in grid: the T1 and T2 grids plus a corollary sample.
/// T1-family cases are always included; T2-family variants follow `which`.
std::vector<IdentityCase> builtin_suite(VariantSelection which = VariantSelection::both);

}  // namespace exthyp
