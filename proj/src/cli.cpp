#include "exthyp/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "exthyp/errors.hpp"
#include "exthyp/hyper.hpp"
#include "exthyp/integrals.hpp"
#include "exthyp/report.hpp"
#include "exthyp/special.hpp"
#include "exthyp/suite.hpp"

namespace exthyp::cli {

namespace {

enum class LogLevel { off, info, debug };

LogLevel log_level() {
  const char* env = std::getenv("EXTHYP_LOG");
  if (!env) return LogLevel::off;
  const std::string v(env);
  if (v == "debug") return LogLevel::debug;
  if (v == "info") return LogLevel::info;
  return LogLevel::off;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw DomainError("spec: '" + item + "' is not a number");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw DomainError("spec: '" + item + "' is not a number");
    out.push_back(v);
  }
  return out;
}

struct ToleranceFlags {
  std::optional<double> rel_tol, abs_tol;
  std::optional<int> max_terms;

  void attach(CLI::App* app) {
    app->add_option("--rel-tol", rel_tol, "relative tolerance");
    app->add_option("--abs-tol", abs_tol, "absolute tolerance");
    app->add_option("--max-terms", max_terms, "series term limit");
  }
  Tolerances apply(Tolerances t) const {
    if (rel_tol) t.rel_tol = *rel_tol;
    if (abs_tol) t.abs_tol = *abs_tol;
    if (max_terms) t.max_terms = *max_terms;
    t.validate();
    return t;
  }
};

struct EvalFlags {
  std::string function;
  double alpha = 1.0, beta = 2.0, b = 1.0, z = 1.0, p = 0.0, mu = 1.0;
  std::size_t n = 0;
  std::string spec;
  ToleranceFlags tol;
};

struct VerifyFlags {
  bool builtin = false;
  std::string config, out, format = "json", variant = "both";
  int jobs = 0;
  ToleranceFlags tol;
};

int cmd_eval(const EvalFlags& f, std::ostream& out, std::ostream& err) {
  const Tolerances tol = f.tol.apply({});
  if (log_level() != LogLevel::off)
    err << "exthyp: eval " << f.function << " rel_tol " << format_value(tol.rel_tol) << " max_terms "
        << tol.max_terms << '\n';
  auto print_quad = [&](const QuadratureResult& q) {
    out << format_value(q.value) << '\n' << "error_estimate " << format_value(q.error_estimate) << '\n';
    return q.converged ? success : non_convergence;
  };
  if (f.function == "gamma_p") return print_quad(extended_gamma(f.z, f.p, tol));
  if (f.function == "ext_pochhammer") {
    const double value = extended_pochhammer({f.mu, f.p}, f.n, tol);
    double error = 0.0;
    bool converged = true;
    if (f.p > 0.0) {
      const QuadratureResult r = extended_gamma_ratio(f.mu + static_cast<double>(f.n), f.p, tol);
      error = r.error_estimate * std::abs(pochhammer(f.mu, f.n));
      converged = r.converged;
    }
    out << format_value(value) << '\n' << "error_estimate " << format_value(error) << '\n';
    return converged ? success : non_convergence;
  }
  if (f.function == "obe_closed") {
    out << format_value(oberhettinger_closed_form({f.alpha, f.beta, f.b})) << '\n'
        << "error_estimate " << format_value(0.0) << '\n';
    return success;
  }
  if (f.function == "obe_numeric") return print_quad(oberhettinger_numeric({f.alpha, f.beta, f.b}, tol));
  // ext_hyper
  const HyperSpecText text = parse_hyper_spec(f.spec);
  HypergeometricSpec spec{{text.a.front(), text.p}, {text.a.begin() + 1, text.a.end()}, text.beta, text.z};
  const SeriesValue sv = eval_ext_hyper(spec, tol);
  out << format_value(sv.value) << '\n'
      << "error_estimate " << format_value(sv.tail_estimate) << '\n'
      << "terms_used " << sv.terms_used << '\n';
  return sv.converged ? success : non_convergence;
}

std::vector<IdentityCase> load_config(const std::string& path, Tolerances& tol, VariantSelection which) {
  std::ifstream in(path);
  if (!in) throw DomainError("config: cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("config: malformed JSON: ") + e.what());
  }
  const nlohmann::json* cases = &doc;
  if (doc.is_object()) {
    if (doc.contains("tolerances")) tol = tolerances_from_json(doc.at("tolerances"), tol);
    if (!doc.contains("cases")) throw DomainError("config: no cases array");
    cases = &doc.at("cases");
  }
  if (!cases->is_array() || cases->empty()) throw DomainError("config: cases must be a non-empty array");

  std::vector<IdentityCase> out;
  std::size_t index = 0;
  for (const auto& j : *cases) {
    try {
      bool has_variant = false;
      IdentityCase c = case_from_json(j, has_variant);
      c.validate();
      if (has_variant || !uses_scaled_argument(c.theorem_id)) {
        if (!has_variant) c.variant = Variant::as_printed;
        out.push_back(c);
      } else {
        if (which != VariantSelection::printed) {
          c.variant = Variant::corrected;
          out.push_back(c);
        }
        if (which != VariantSelection::corrected) {
          c.variant = Variant::as_printed;
          out.push_back(c);
        }
      }
    } catch (const std::exception& e) {
      throw DomainError("config: case " + std::to_string(index) + ": " + e.what());
    }
    ++index;
  }
  return out;
}

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  if (f.builtin == !f.config.empty()) throw DomainError("verify: give exactly one of --builtin or --config");
  const VariantSelection which = f.variant == "printed"     ? VariantSelection::printed
                                 : f.variant == "corrected" ? VariantSelection::corrected
                                                            : VariantSelection::both;
  Tolerances tol;
  std::vector<IdentityCase> cases = f.builtin ? builtin_suite(which) : load_config(f.config, tol, which);
  tol = f.tol.apply(tol);

  const LogLevel level = log_level();
  if (level != LogLevel::off) err << "exthyp: verifying " << cases.size() << " cases\n";
  const auto reports = run_suite(cases, tol, f.jobs);
  if (level == LogLevel::debug)
    for (std::size_t i = 0; i < reports.size(); ++i)
      err << "  [" << i << "] " << to_string(reports[i].identity.theorem_id) << ' '
          << to_string(reports[i].identity.variant) << ' ' << to_string(reports[i].verdict)
          << " rel_diff=" << shortest_repr(reports[i].rel_diff) << '\n';

  std::ostringstream body;
  if (f.format == "csv")
    write_csv(body, reports);
  else
    body << report_document(reports, tol).dump(2) << '\n';

  if (f.out.empty()) {
    out << body.str();
  } else {
    std::ofstream file(f.out);
    if (!file) throw DomainError("verify: cannot write " + f.out);
    file << body.str();
  }
  const VerdictCounts counts = count_verdicts(reports);
  if (level != LogLevel::off) {
    err << "exthyp:";
    for (const auto& [k, v] : counts.counts) err << ' ' << k << '=' << v;
    err << " errata_candidates=" << counts.errata_candidates << '\n';
  }
  return verify_exit_code(reports);
}

int cmd_summarize(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw DomainError("summarize: cannot open " + path);
  const VerdictCounts counts = summarize_report(in);
  long total = 0;
  for (const auto& [k, v] : counts.counts) {
    out << k << ' ' << v << '\n';
    total += v;
  }
  out << "errata_candidates " << counts.errata_candidates << '\n' << "total " << total << '\n';
  return success;
}

}  // namespace

HyperSpecText parse_hyper_spec(const std::string& text) {
  HyperSpecText out;
  bool have_a = false;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ';')) {
    if (field.find_first_not_of(" \t") == std::string::npos) continue;
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw DomainError("spec: expected key=value, got '" + field + "'");
    std::string key = field.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    const std::string value = field.substr(eq + 1);
    if (key == "a") {
      out.a = parse_list(value);
      have_a = true;
    } else if (key == "beta") {
      out.beta = value.find_first_not_of(" \t") == std::string::npos ? std::vector<double>{} : parse_list(value);
    } else if (key == "p" || key == "z") {
      const auto v = parse_list(value);
      if (v.size() != 1) throw DomainError("spec: " + key + " takes one number");
      (key == "p" ? out.p : out.z) = v.front();
    } else {
      throw DomainError("spec: unknown key '" + key + "'");
    }
  }
  if (!have_a || out.a.empty()) throw DomainError("spec: a=... with at least one numerator is required");
  return out;
}

std::string format_value(double v) {
  if (!std::isfinite(v)) return shortest_repr(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", v);
  const std::string s(buf);
  const auto e = s.find('e');
  return s.substr(0, e) + "e" + std::to_string(std::stoi(s.substr(e + 1)));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended hypergeometric integral identities: evaluation and verification"};
  app.require_subcommand(1);

  EvalFlags ef;
  auto* eval = app.add_subcommand("eval", "evaluate a single function");
  eval->add_option("function", ef.function, "gamma_p | ext_pochhammer | ext_hyper | obe_closed | obe_numeric")
      ->required()
      ->check(CLI::IsMember({"gamma_p", "ext_pochhammer", "ext_hyper", "obe_closed", "obe_numeric"}));
  eval->add_option("--alpha", ef.alpha);
  eval->add_option("--beta", ef.beta);
  eval->add_option("--b", ef.b);
  eval->add_option("--z", ef.z);
  eval->add_option("--p", ef.p);
  eval->add_option("--mu", ef.mu);
  eval->add_option("--n", ef.n, "Pochhammer index");
  eval->add_option("--spec", ef.spec, "ext_hyper parameters, e.g. 'a=1,1;beta=2;p=0;z=0.5'");
  ef.tol.attach(eval);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "run an identity suite and write a report");
  verify->add_flag("--builtin", vf.builtin, "use the built-in grid");
  verify->add_option("--config", vf.config, "JSON case list");
  verify->add_option("--out", vf.out, "report path (default: stdout)");
  verify->add_option("--format", vf.format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--variant", vf.variant)->check(CLI::IsMember({"printed", "corrected", "both"}));
  verify->add_option("--jobs", vf.jobs, "worker threads (default: all processors)");
  vf.tol.attach(verify);

  std::string report_path;
  auto* summarize = app.add_subcommand("summarize", "count verdicts in a JSON or CSV report");
  summarize->add_option("report", report_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::ParseError& e) {
    err << "exthyp: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (eval->parsed()) return cmd_eval(ef, out, err);
    if (verify->parsed()) return cmd_verify(vf, out, err);
    return cmd_summarize(report_path, out);
  } catch (const NonConvergenceError& e) {
    err << "exthyp: " << e.what() << '\n';
    return non_convergence;
  } catch (const std::exception& e) {
    err << "exthyp: " << e.what() << '\n';
    return usage_error;
  }
}

}  // namespace exthyp::cli
