#include "exthyp/report.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "exthyp/errors.hpp"

namespace exthyp {

using nlohmann::json;

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else if (ch != '\r') {
      fields.back() += ch;
    }
  }
  return fields;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += shortest_repr(v[i]);
  }
  return out;
}

double required_number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw DomainError(std::string("config: params.") + key + " must be a number");
  return j.at(key).get<double>();
}

std::vector<double> number_list(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_array()) throw DomainError(std::string("config: params.") + key + " must be an array");
  std::vector<double> out;
  for (const auto& x : j.at(key)) {
    if (!x.is_number()) throw DomainError(std::string("config: params.") + key + " must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

const char* kCsvHeader =
    "theorem_id,variant,a_list,beta_list,p,delta,mu,b,y,lhs_value,lhs_error_estimate,lhs_evaluations,"
    "rhs_prefactor,rhs_series_value,rhs_terms_used,rhs_tail_estimate,abs_diff,rel_diff,tolerance_used,"
    "verdict,errata_note";

}  // namespace

std::string shortest_repr(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json params_to_json(const IdentityCase& c) {
  std::vector<double> a{c.hyper.first_numerator.value};
  a.insert(a.end(), c.hyper.other_numerators.begin(), c.hyper.other_numerators.end());
  return {{"a_list", a},
          {"beta_list", c.hyper.denominators},
          {"p", c.hyper.first_numerator.extension},
          {"delta", c.delta},
          {"mu", c.mu},
          {"b", c.b},
          {"y", c.y}};
}

json to_json(const IdentityReport& r) {
  json j{{"theorem_id", to_string(r.identity.theorem_id)},
         {"variant", to_string(r.identity.variant)},
         {"params", params_to_json(r.identity)},
         {"lhs",
          {{"value", number(r.lhs.value)},
           {"error_estimate", number(r.lhs.error_estimate)},
           {"evaluations", r.lhs.evaluations}}},
         {"rhs",
          {{"prefactor", number(r.rhs_prefactor)},
           {"series_value", number(r.rhs.value)},
           {"terms_used", r.rhs.terms_used},
           {"tail_estimate", number(r.rhs.tail_estimate)}}},
         {"abs_diff", number(r.abs_diff)},
         {"rel_diff", number(r.rel_diff)},
         {"tolerance_used", number(r.tolerance_used)},
         {"verdict", to_string(r.verdict)},
         {"errata_note", r.errata_note}};
  if (r.error) j["error"] = *r.error;
  return j;
}

IdentityCase case_from_json(const json& j, bool& has_variant) {
  if (!j.is_object()) throw DomainError("config: each case must be an object");
  if (!j.contains("theorem_id") || !j.at("theorem_id").is_string())
    throw DomainError("config: theorem_id missing");
  if (!j.contains("params") || !j.at("params").is_object()) throw DomainError("config: params missing");
  const json& p = j.at("params");

  IdentityCase c;
  c.theorem_id = theorem_from_string(j.at("theorem_id").get<std::string>());
  has_variant = j.contains("variant");
  if (has_variant) {
    if (!j.at("variant").is_string()) throw DomainError("config: variant must be a string");
    c.variant = variant_from_string(j.at("variant").get<std::string>());
  }
  const std::vector<double> a = number_list(p, "a_list");
  if (a.empty()) throw DomainError("config: params.a_list needs at least one entry");
  c.hyper.first_numerator = {a.front(), p.contains("p") ? required_number(p, "p") : 0.0};
  c.hyper.other_numerators.assign(a.begin() + 1, a.end());
  c.hyper.denominators = number_list(p, "beta_list");
  c.delta = required_number(p, "delta");
  c.mu = required_number(p, "mu");
  c.b = required_number(p, "b");
  c.y = required_number(p, "y");
  return c;
}

Tolerances tolerances_from_json(const json& j, Tolerances t) {
  if (j.contains("rel_tol")) t.rel_tol = j.at("rel_tol").get<double>();
  if (j.contains("abs_tol")) t.abs_tol = j.at("abs_tol").get<double>();
  if (j.contains("max_levels")) t.max_levels = j.at("max_levels").get<int>();
  if (j.contains("max_terms")) t.max_terms = j.at("max_terms").get<int>();
  t.validate();
  return t;
}

json to_json(const Tolerances& t) {
  return {{"rel_tol", t.rel_tol}, {"abs_tol", t.abs_tol}, {"max_levels", t.max_levels}, {"max_terms", t.max_terms}};
}

VerdictCounts count_verdicts(std::span<const IdentityReport> reports) {
  VerdictCounts out;
  for (const auto& r : reports) {
    ++out.counts[std::string(to_string(r.verdict))];
    if (is_errata_candidate(r.identity)) ++out.errata_candidates;
  }
  return out;
}

json report_document(std::span<const IdentityReport> reports, const Tolerances& tol) {
  const VerdictCounts counts = count_verdicts(reports);
  json cases = json::array();
  for (const auto& r : reports) cases.push_back(to_json(r));
  json verdicts = json::object();
  for (const auto& [k, v] : counts.counts) verdicts[k] = v;
  return {{"tolerances", to_json(tol)},
          {"summary", {{"cases", reports.size()}, {"verdicts", verdicts}, {"errata_candidates", counts.errata_candidates}}},
          {"cases", cases}};
}

void write_csv(std::ostream& os, std::span<const IdentityReport> reports) {
  os << kCsvHeader << '\n';
  for (const auto& r : reports) {
    const IdentityCase& c = r.identity;
    std::vector<double> a{c.hyper.first_numerator.value};
    a.insert(a.end(), c.hyper.other_numerators.begin(), c.hyper.other_numerators.end());
    os << to_string(c.theorem_id) << ',' << to_string(c.variant) << ',' << join(a) << ','
       << join(c.hyper.denominators) << ',' << shortest_repr(c.hyper.first_numerator.extension) << ','
       << shortest_repr(c.delta) << ',' << shortest_repr(c.mu) << ',' << shortest_repr(c.b) << ','
       << shortest_repr(c.y) << ',' << shortest_repr(r.lhs.value) << ',' << shortest_repr(r.lhs.error_estimate)
       << ',' << r.lhs.evaluations << ',' << shortest_repr(r.rhs_prefactor) << ',' << shortest_repr(r.rhs.value)
       << ',' << r.rhs.terms_used << ',' << shortest_repr(r.rhs.tail_estimate) << ',' << shortest_repr(r.abs_diff)
       << ',' << shortest_repr(r.rel_diff) << ',' << shortest_repr(r.tolerance_used) << ','
       << to_string(r.verdict) << ',' << csv_quote(r.errata_note) << '\n';
  }
}

VerdictCounts summarize_report(std::istream& is) {
  std::stringstream buf;
  buf << is.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw DomainError("summarize: empty report");

  std::vector<IdentityReport> rows;
  if (text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw DomainError(std::string("summarize: malformed JSON: ") + e.what());
    }
    if (!doc.contains("cases") || !doc.at("cases").is_array()) throw DomainError("summarize: no cases array");
    for (const auto& j : doc.at("cases")) {
      IdentityReport r;
      r.identity.theorem_id = theorem_from_string(j.at("theorem_id").get<std::string>());
      r.identity.variant = variant_from_string(j.at("variant").get<std::string>());
      r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
      rows.push_back(std::move(r));
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    const auto header = csv_split(line);
    auto column = [&](const std::string& name) {
      for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
      throw DomainError("summarize: CSV header lacks " + name);
    };
    const auto ti = column("theorem_id"), vi = column("variant"), di = column("verdict");
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      const auto f = csv_split(line);
      if (f.size() != header.size()) throw DomainError("summarize: CSV row has the wrong number of fields");
      IdentityReport r;
      r.identity.theorem_id = theorem_from_string(f[ti]);
      r.identity.variant = variant_from_string(f[vi]);
      r.verdict = verdict_from_string(f[di]);
      rows.push_back(std::move(r));
    }
  }
  return count_verdicts(rows);
}

int verify_exit_code(std::span<const IdentityReport> reports) {
  bool failed = false;
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (is_errata_candidate(r.identity)) continue;
    failed |= r.verdict == Verdict::fail;
    inconclusive |= r.verdict == Verdict::inconclusive;
  }
  if (failed) return 1;
  return inconclusive ? 3 : 0;
}

}  // namespace exthyp
