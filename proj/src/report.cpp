#include "cyclotome/report.hpp"

#include <sstream>

#include "json.hpp"

namespace cyclotome {

namespace {

using nlohmann::ordered_json;

std::string args_text(const VerificationReport& r) {
  if (r.args.empty()) return "";
  std::string s = "(";
  for (std::size_t k = 0; k < r.args.size(); ++k) s += (k ? "," : "") + std::to_string(r.args[k]);
  return s + ")";
}

struct Totals {
  std::size_t checks = 0, failures = 0;
};

Totals totals(const std::vector<VerificationReport>& reports) {
  Totals t;
  for (const auto& r : reports) {
    t.checks += r.checks.size();
    t.failures += r.failures();
  }
  return t;
}

std::string escape_md(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

ordered_json graded(const GradedClass& g) {
  return {{"module", g.module_part.coords()}, {"shifted", g.shifted_part.coords()}};
}

}  // namespace

std::string render_text(const std::vector<VerificationReport>& reports, bool verbose) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass() ? "PASS " : "FAIL ") << r.relation << args_text(r) << " " << r.type << " [" << r.orientation
       << "] " << (r.checks.size() - r.failures()) << "/" << r.checks.size() << "\n";
    for (const auto& n : r.notes)
      if (verbose) os << "  note: " << n << "\n";
    for (const auto& c : r.checks)
      if (verbose || !c.pass)
        os << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.computed
           << (c.pass ? "" : " (expected " + c.expected + ")") << "\n";
  }
  const Totals t = totals(reports);
  os << (t.failures == 0 ? "all " : "") << t.checks - t.failures << "/" << t.checks << " checks passed\n";
  return os.str();
}

std::string render_markdown(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  const Totals t = totals(reports);
  if (!reports.empty())
    os << "# " << reports.front().type << " `" << reports.front().orientation << "`\n\n";
  os << t.checks - t.failures << "/" << t.checks << " checks passed.\n\n";
  os << "| relation | args | checks | result |\n|---|---|---|---|\n";
  for (const auto& r : reports)
    os << "| " << r.relation << " | " << args_text(r) << " | " << r.checks.size() << " | "
       << (r.pass() ? "pass" : "FAIL") << " |\n";
  for (const auto& r : reports) {
    os << "\n## " << r.relation << args_text(r) << "\n\n";
    for (const auto& n : r.notes) os << "- " << escape_md(n) << "\n";
    if (!r.notes.empty()) os << "\n";
    os << "| check | computed | expected | pass |\n|---|---|---|---|\n";
    for (const auto& c : r.checks)
      os << "| " << escape_md(c.name) << " | `" << escape_md(c.computed) << "` | `" << escape_md(c.expected) << "` | "
         << (c.pass ? "yes" : "NO") << " |\n";
  }
  return os.str();
}

std::string render_json(const std::vector<VerificationReport>& reports) {
  const Totals t = totals(reports);
  ordered_json j;
  j["schema"] = 1;
  j["type"] = reports.empty() ? "" : reports.front().type;
  j["orientation"] = reports.empty() ? "" : reports.front().orientation;
  j["pass"] = t.failures == 0;
  j["checks"] = t.checks;
  j["failures"] = t.failures;
  j["reports"] = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json jr;
    jr["relation"] = r.relation;
    jr["args"] = r.args;
    jr["pass"] = r.pass();
    jr["notes"] = r.notes;
    jr["checks"] = ordered_json::array();
    for (const auto& c : r.checks)
      jr["checks"].push_back({{"name", c.name}, {"computed", c.computed}, {"expected", c.expected}, {"pass", c.pass}});
    j["reports"].push_back(std::move(jr));
  }
  return j.dump(2) + "\n";
}

std::string forms_json(const CycIndex& ci, const VWPair& m1, const VWPair& m2) {
  ordered_json j;
  j["schema"] = 1;
  j["type"] = ci.quiver().type().name();
  j["orientation"] = ci.quiver().orientation_label();
  j["m1"] = to_string(ci, m1);
  j["m2"] = to_string(ci, m2);
  j["l_dominant"] = {is_l_dominant(ci, m1), is_l_dominant(ci, m2)};
  j["residual"] = {to_string(ci, residual(ci, m1)), to_string(ci, residual(ci, m2))};
  j["phi"] = {graded(phi(ci, m1.w)), graded(phi(ci, m2.w))};
  j["deg_phi"] = {deg_phi(ci, m1.w), deg_phi(ci, m2.w)};
  j["N_phi"] = {N_phi(ci, m1.w), N_phi(ci, m2.w)};
  j["exponent_K"] = {exponent_K(ci, m1.w).to_string(), exponent_K(ci, m2.w).to_string()};
  j["exponent_L"] = {exponent_L(ci, m1.w).to_string(), exponent_L(ci, m2.w).to_string()};
  j["d_12"] = d_form(ci, m1, m2);
  j["d_21"] = d_form(ci, m2, m1);
  j["euler_a_12"] = euler_a(ci.quiver(), phi(ci, m1.w), phi(ci, m2.w));
  j["euler_sym_12"] = euler_sym(ci.quiver(), phi(ci, m1.w), phi(ci, m2.w));
  j["twist_12"] = twist_exponent(ci, m1.w, m2.w).to_string();
  j["leading_exponent_tilde_12"] = leading_exponent_tilde(ci, m1, m2);
  j["leading_exponent_12"] = leading_exponent(ci, m1, m2).to_string();
  j["script_N_12"] = script_N(ci, m1, m2).to_string();
  const Cones cones(ci);
  const WVector r1 = residual(ci, m1), r2 = residual(ci, m2);
  if (cones.in_W_plus(r1) && cones.in_W_plus(r2))
    j["hl_form_residuals_12"] = hl_form_extended(ci, r1, r2);
  else
    j["hl_form_residuals_12"] = nullptr;
  return j.dump(2) + "\n";
}

}  // namespace cyclotome
