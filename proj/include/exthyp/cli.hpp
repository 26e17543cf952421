#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exthyp::cli {

enum ExitCode : int { success = 0, identity_failure = 1, usage_error = 2, non_convergence = 3 };

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a=1,1;beta=2;p=0;z=0.5" -> ext_hyper spec fields. Exposed for tests.
struct HyperSpecText {
  std::vector<double> a;
  std::vector<double> beta;
  double p = 0.0;
  double z = 0.0;
};
HyperSpecText parse_hyper_spec(const std::string& text);

/// 15 significant digits, exponent without padding: 3.33333333333333e-1.
std::string format_value(double v);

}  // namespace exthyp::cli
