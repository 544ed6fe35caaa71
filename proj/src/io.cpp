#include "elastica/io.hpp"

#include <cmath>
#include <cstdio>

#include "elastica/elliptic.hpp"
#include "elastica/moduli.hpp"

namespace elastica::io {

using classify::CriticalPoint;
using classify::Family;
using classify::ProblemParams;

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string entry_json(const CriticalPoint& cp, const ProblemParams& p) {
  const auto e = energy::energy_closed_form(cp, p);
  std::string s = "{";
  s += "\"id\":" + quoted(cp.id());
  s += ",\"family\":" + quoted(family_name(cp.family));
  s += ",\"n\":" + std::to_string(cp.n);
  s += ",\"merged\":" + std::string(cp.merged ? "true" : "false");
  s += ",\"q\":" + format_double(cp.family == Family::segment
                                     ? std::nan("")
                                     : cp.q);
  s += ",\"alpha\":" + format_double(cp.family == Family::segment
                                         ? std::nan("")
                                         : cp.alpha);
  s += ",\"sigma\":" + std::to_string(cp.sigma);
  s += ",\"length\":" + format_double(e.length);
  s += ",\"bending\":" + format_double(e.bending);
  s += ",\"total\":" + format_double(e.total);
  s += "}";
  return s;
}

}  // namespace

std::string constants_json() {
  const auto& c = moduli::constants();
  const double f_res = moduli::eval_f(c.q_hat);
  const double q_res = 2.0 * elliptic::complete_e(c.q_star) -
                       elliptic::complete_k(c.q_star);
  std::string s = "{";
  s += "\"q_hat\":" + format_double(c.q_hat);
  s += ",\"q_star\":" + format_double(c.q_star);
  s += ",\"lambda_hat\":" + format_double(c.lambda_hat);
  s += ",\"residual_f_at_q_hat\":" + format_double(f_res);
  s += ",\"residual_2E_minus_K_at_q_star\":" + format_double(q_res);
  s += "}\n";
  return s;
}

std::string catalogue_json(const ProblemParams& p, int n_max,
                           const std::vector<CriticalPoint>& entries) {
  std::string s = "{";
  s += "\"lambda\":" + format_double(p.lambda);
  s += ",\"ell\":" + format_double(p.ell);
  s += ",\"mu\":" + format_double(p.mu());
  s += ",\"mode_floor\":" + std::to_string(classify::mode_floor(p));
  s += ",\"n_max\":" + std::to_string(n_max);
  s += ",\"entries\":[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += entry_json(entries[i], p);
  }
  s += "]}\n";
  return s;
}

std::string curve_csv(const curve::PlanarCurve& c) {
  std::string s = "s,x,y,theta,k\n";
  for (const auto& p : c.samples) {
    s += format_double(p.s) + "," + format_double(p.x) + "," +
         format_double(p.y) + "," + format_double(p.theta) + "," +
         format_double(p.k) + "\n";
  }
  return s;
}

std::string curve_json(const CriticalPoint& cp, const ProblemParams& p,
                       const curve::PlanarCurve& c) {
  const auto e = energy::energy_closed_form(cp, p);
  std::string s = "{";
  s += "\"id\":" + quoted(cp.id());
  s += ",\"family\":" + quoted(family_name(cp.family));
  s += ",\"n\":" + std::to_string(cp.n);
  s += ",\"q\":" + format_double(cp.family == Family::segment ? std::nan("")
                                                              : cp.q);
  s += ",\"alpha\":" + format_double(cp.family == Family::segment
                                         ? std::nan("")
                                         : cp.alpha);
  s += ",\"length\":" + format_double(e.length);
  s += ",\"bending\":" + format_double(e.bending);
  s += ",\"total\":" + format_double(e.total);
  s += ",\"samples\":[";
  for (std::size_t i = 0; i < c.samples.size(); ++i) {
    if (i) s += ",";
    const auto& q = c.samples[i];
    s += "[" + format_double(q.s) + "," + format_double(q.x) + "," +
         format_double(q.y) + "," + format_double(q.theta) + "," +
         format_double(q.k) + "]";
  }
  s += "]}\n";
  return s;
}

std::string energy_table_csv(const ProblemParams& p,
                             const std::vector<CriticalPoint>& entries) {
  std::string s = "family,n,q,alpha,length,bending,total\n";
  for (const auto& cp : entries) {
    const auto e = energy::energy_closed_form(cp, p);
    s += std::string(family_name(cp.family)) + "," + std::to_string(cp.n) +
         "," +
         format_double(cp.family == Family::segment ? std::nan("") : cp.q) +
         "," +
         format_double(cp.family == Family::segment ? std::nan("")
                                                    : cp.alpha) +
         "," + format_double(e.length) + "," + format_double(e.bending) +
         "," + format_double(e.total) + "\n";
  }
  return s;
}

std::string comparison_json(const ProblemParams& p,
                            const energy::ComparisonReport& rep) {
  std::string s = "{";
  s += "\"lambda\":" + format_double(p.lambda);
  s += ",\"ell\":" + format_double(p.ell);
  s += ",\"minimal_nontrivial\":" + quoted(rep.minimal_nontrivial);
  s += ",\"ordering\":[";
  for (std::size_t i = 0; i < rep.ordering.size(); ++i) {
    if (i) s += ",";
    s += "{\"id\":" + quoted(rep.ordering[i].first) +
         ",\"total\":" + format_double(rep.ordering[i].second) + "}";
  }
  s += "],\"checks\":[";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    if (i) s += ",";
    const auto& c = rep.checks[i];
    s += "{\"rule\":" + quoted(c.rule) + ",\"statement\":" +
         quoted(c.statement) + ",\"margin\":" + format_double(c.margin) +
         ",\"equality_case\":" + (c.equality_case ? "true" : "false") +
         ",\"pass\":" + (c.pass ? "true" : "false") + "}";
  }
  s += "]}\n";
  return s;
}

std::string stability_json(const ProblemParams& p,
                           const std::vector<CriticalPoint>& entries) {
  std::string s = "{";
  s += "\"lambda\":" + format_double(p.lambda);
  s += ",\"ell\":" + format_double(p.ell);
  s += ",\"local_minimizers\":" +
       std::to_string(stability::count_local_minimizers(p));
  s += ",\"verdicts\":[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    const auto v = stability::stability_verdict(entries[i], p);
    s += "{\"id\":" + quoted(entries[i].id());
    s += ",\"verdict\":" + quoted(stability::verdict_name(v.verdict));
    s += ",\"mechanism\":" + quoted(stability::mechanism_name(v.mechanism));
    s += ",\"sign_value\":" + format_double(v.sign_value);
    s += "}";
  }
  s += "]}\n";
  return s;
}

std::string crossover_json(double ell, double lambda_dagger) {
  std::string s = "{";
  s += "\"ell\":" + format_double(ell);
  s += ",\"lambda_dagger\":" + format_double(lambda_dagger);
  s += ",\"mu_dagger\":" + format_double(lambda_dagger * ell * ell);
  s += "}\n";
  return s;
}

std::string trajectory_record(const flow::FlowState& s,
                              const flow::FlowDiagnostics& d) {
  std::string r = "{";
  r += "\"t\":" + format_double(s.time);
  r += ",\"energy\":" + format_double(d.energy);
  r += ",\"intersections\":" + std::to_string(d.intersections);
  r += ",\"nodes\":[";
  for (int i = 0; i < s.node_count(); ++i) {
    if (i) r += ",";
    r += "[" + format_double(s.x[i]) + "," + format_double(s.y[i]) + "]";
  }
  r += "]}\n";
  return r;
}

std::string outcome_json(const flow::FlowOutcome& out) {
  std::string s = "{";
  s += "\"converged_to\":" + quoted(out.converged_to);
  s += ",\"embedded_since\":" +
       (out.embedded_since ? format_double(*out.embedded_since)
                           : std::string("\"never\""));
  s += ",\"horizon_exceeded\":" +
       std::string(out.horizon_exceeded ? "true" : "false");
  s += ",\"dt_collapsed\":" + std::string(out.dt_collapsed ? "true" : "false");
  s += ",\"final_time\":" + format_double(out.final_state.time);
  s += ",\"energy_trace\":[";
  for (std::size_t i = 0; i < out.energy_trace.size(); ++i) {
    if (i) s += ",";
    const auto& tr = out.energy_trace[i];
    s += "[" + format_double(tr.t) + "," + format_double(tr.energy) + "," +
         std::to_string(tr.intersections) + "]";
  }
  s += "]}\n";
  return s;
}

}  // namespace elastica::io
