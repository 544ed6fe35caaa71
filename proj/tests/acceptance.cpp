// Acceptance suite: one pass/fail line per criterion, each run at its stated
// tolerance with its runtime bound. Criteria can be selected individually:
//   acceptance [--criterion N] [--cli <binary> --golden <dir> --scratch <dir>]
// Criterion 7 needs the CLI arguments; all others are self-contained.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "elastica/classify.hpp"
#include "elastica/curve.hpp"
#include "elastica/elliptic.hpp"
#include "elastica/energy.hpp"
#include "elastica/flow.hpp"
#include "elastica/moduli.hpp"
#include "elastica/stability.hpp"
#include "oracles.hpp"

using namespace elastica;
using classify::Family;
using classify::ProblemParams;

namespace {

constexpr double kPi = 3.14159265358979323846;

int checks_failed = 0;

void sub(bool ok, const std::string& what) {
  std::printf("    [%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
  if (!ok) ++checks_failed;
}

void note(const std::string& what) {
  std::printf("    [note] %s\n", what.c_str());
}

struct Criterion {
  int id;
  const char* name;
  double runtime_bound;  // seconds
  std::function<void()> body;
};

const std::vector<Family> kArcFamilies = {Family::shorter_arc,
                                          Family::longer_arc};

double dist(double ax, double ay, double bx, double by) {
  return std::hypot(ax - bx, ay - by);
}

// ---------------------------------------------------------------- criterion 1
void criterion_constants() {
  const auto& c = moduli::constants();
  sub(std::fabs(c.q_hat - 0.79257) < 1e-4, "q_hat = 0.79257 +- 1e-4");
  sub(std::fabs(c.q_star - 0.90891) < 1e-4, "q_star = 0.90891 +- 1e-4");
  sub(std::fabs(c.lambda_hat - 0.70107) < 1e-4, "lambda_hat = 0.70107 +- 1e-4");
  sub(std::fabs(moduli::eval_f(c.q_hat)) < 1e-12, "|f(q_hat)| < 1e-12");
  sub(std::fabs(2.0 * elliptic::complete_e(c.q_star) -
                elliptic::complete_k(c.q_star)) < 1e-12,
      "|2E - K|(q_star) < 1e-12");
  sub(c.q_hat * c.q_hat > 0.6 && c.q_hat * c.q_hat < 2.0 / 3.0,
      "3/5 < q_hat^2 < 2/3");
}

// ---------------------------------------------------------------- criterion 2
void criterion_elliptic() {
  using elliptic::complete_e;
  using elliptic::complete_k;
  using elliptic::incomplete_e;
  using elliptic::incomplete_f;
  using elliptic::jacobi;

  // derivative identities vs central differences
  bool deriv_ok = true;
  for (double q = 0.05; q <= 0.951; q += 0.05) {
    const double kq = complete_k(q), eq = complete_e(q);
    const double kp = eq / (q * (1.0 - q * q)) - kq / q;
    const double ep = (eq - kq) / q;
    deriv_ok &= oracles::rel_err(
                    oracles::fd1([](double x) { return complete_k(x); }, q, 1e-6),
                    kp) < 1e-5;
    deriv_ok &= oracles::rel_err(
                    oracles::fd1([](double x) { return complete_e(x); }, q, 1e-6),
                    ep) < 1e-5;
    deriv_ok &= oracles::rel_err(
                    oracles::fd1(
                        [](double x) {
                          return (x * x - 1.0) * complete_k(x) + complete_e(x);
                        },
                        q, 1e-6),
                    q * kq) < 1e-5;
    deriv_ok &= kp > 0.0 && ep < 0.0;
  }
  sub(deriv_ok, "K', E' and d/dq(q^2 K - K + E) = qK identities on [0.05, 0.95]");

  // integral identities
  bool integral_ok = true;
  for (double q : {0.75, 0.85, 0.95}) {
    const double kq = complete_k(q);
    for (double xf : {0.3, 1.0, 1.7}) {
      const double x = xf * kq;
      const double lhs_cn = oracles::composite_simpson(
          [&](double t) { return jacobi(t, q).cn; }, 0.0, x, 4096);
      integral_ok &=
          std::fabs(lhs_cn - std::asin(q * jacobi(x, q).sn) / q) < 1e-9;
      const double lhs_sn2 = oracles::composite_simpson(
          [&](double t) {
            const double sn = jacobi(t, q).sn;
            return 1.0 - 2.0 * q * q * sn * sn;
          },
          0.0, x, 4096);
      integral_ok &=
          std::fabs(lhs_sn2 - (2.0 * incomplete_e(jacobi(x, q).am, q) - x)) <
          1e-9;
      const double lhs_sndn = oracles::composite_simpson(
          [&](double t) {
            const auto j = jacobi(t, q);
            return j.sn * std::sqrt(1.0 - q * q * j.sn * j.sn);
          },
          0.0, x, 4096);
      integral_ok &= std::fabs(lhs_sndn - (1.0 - jacobi(x, q).cn)) < 1e-9;
    }
  }
  sub(integral_ok, "integral identities for cn, 1-2q^2 sn^2, sn dn");

  // Jacobi parity / antiperiodicity and the am round trip
  bool jacobi_ok = true;
  std::mt19937 rng(7);
  const double q9 = 0.9;
  const double k9 = complete_k(q9);
  std::uniform_real_distribution<double> du(-4.0 * k9, 4.0 * k9);
  for (int i = 0; i < 100; ++i) {
    const double u = du(rng);
    const auto t = jacobi(u, q9);
    const auto tp = jacobi(u + 2.0 * k9, q9);
    const auto tm = jacobi(-u, q9);
    jacobi_ok &= std::fabs(tp.cn + t.cn) < 1e-12;
    jacobi_ok &= std::fabs(tp.sn + t.sn) < 1e-12;
    jacobi_ok &= std::fabs(tm.cn - t.cn) < 1e-12;
    jacobi_ok &= std::fabs(tm.sn + t.sn) < 1e-12;
  }
  sub(jacobi_ok, "cn even / sn odd, both 2K-antiperiodic (100 random u)");

  bool roundtrip_ok = true;
  for (double q : {0.2, 0.7, 0.9, 0.99}) {
    const double kq = complete_k(q);
    for (int i = -16; i <= 16; ++i) {
      const double u = 4.0 * kq * i / 16.0;
      roundtrip_ok &= std::fabs(incomplete_f(jacobi(u, q).am, q) - u) < 1e-10;
    }
  }
  sub(roundtrip_ok, "F(am(u,q),q) = u for |u| <= 4K, 1e-10");

  bool dec_ok = true;
  double prev = 2.0 * complete_e(0.0) - complete_k(0.0);
  for (int i = 1; i <= 99; ++i) {
    const double cur = 2.0 * complete_e(0.01 * i) - complete_k(0.01 * i);
    dec_ok &= cur < prev;
    prev = cur;
  }
  sub(dec_ok, "2E - K strictly decreasing on [0, 0.99]");
}

// ---------------------------------------------------------------- criterion 3
void criterion_classification() {
  const double lh = moduli::constants().lambda_hat;
  const int N = 4096;
  bool endpoint_ok = true, oracle_ok = true, symmetry_ok = true, el_ok = true;
  for (double mu : {0.2, 0.5, lh, 1.0, 3.0}) {
    const ProblemParams p(mu, 1.0);
    for (const auto& cp : classify::enumerate_critical_points(p, 3)) {
      if (cp.family == Family::segment) continue;
      const auto c = curve::sample_curve(cp, N);
      endpoint_ok &= dist(c.samples.front().x, c.samples.front().y, 0, 0) < 1e-9;
      endpoint_ok &= dist(c.samples.back().x, c.samples.back().y, 1.0, 0) < 1e-9;

      const auto rec = curve::reconstruct_from_curvature(
          [&](double s) { return curve::curvature_at(cp, s); }, cp.length,
          curve::theta_at(cp, 0.0), N);
      double dev = 0.0;
      for (int i = 0; i <= N; ++i) {
        dev = std::max(dev, dist(rec.samples[i].x, rec.samples[i].y,
                                 c.samples[i].x, c.samples[i].y));
      }
      oracle_ok &= dev < 1e-6;

      const double parity = cp.n % 2 == 1 ? 1.0 : -1.0;
      for (int i = 0; i <= N; ++i) {
        const auto& a = c.samples[i];
        const auto& b = c.samples[N - i];
        symmetry_ok &= std::fabs(a.x + b.x - 1.0) < 1e-9;
        symmetry_ok &= std::fabs(a.y - parity * b.y) < 1e-9;
      }

      for (int i = 1; i <= 20; ++i) {
        const double s = cp.length * i / 21.0;
        const double kpp = oracles::fd2(
            [&](double t) { return curve::curvature_at(cp, t); }, s, 1e-4);
        const double k = curve::curvature_at(cp, s);
        el_ok &= std::fabs(2.0 * kpp + k * k * k - p.lambda * k) < 1e-4;
      }
    }
  }
  sub(endpoint_ok, "endpoint residual < 1e-9 ell, all enumerated n <= 3");
  sub(oracle_ok, "closed form vs reconstruction oracle < 1e-6 ell at N=4096");
  sub(symmetry_ok,
      "X(s)+X(L-s)=ell and Y parity symmetry < 1e-9 (mirror for odd n)");
  sub(el_ok, "EL residual 2k'' + k^3 - lambda k < 1e-4 at 20 interior points");

  bool loop_cross_ok = true, arcs_embedded_ok = true;
  for (double mu : {0.2, 0.5, lh, 1.0, 3.0}) {
    const ProblemParams p(mu, 1.0);
    const auto loop = curve::sample_curve(
        classify::build_critical_point(p, Family::loop, 1), N);
    const auto hits = curve::self_intersections(loop);
    loop_cross_ok &= hits.size() == 1 && std::fabs(hits[0].x - 0.5) < 1e-6;
    if (classify::mode_floor(p) == 1) {
      for (auto f : kArcFamilies) {
        const auto arc = curve::sample_curve(
            classify::build_critical_point(p, f, 1), N);
        arcs_embedded_ok &= curve::self_intersections(arc).empty();
      }
    }
  }
  sub(loop_cross_ok, "one-mode loop: exactly 1 crossing at x = ell/2 +- 1e-6");
  sub(arcs_embedded_ok, "one-mode arcs embedded (flow limit-set scope)");
  // Higher modes, reported for the record: deep mode-3 longer arcs overlap
  // their same-side lobes and do self-intersect.
  for (double mu : {0.2, 3.0}) {
    const ProblemParams p(mu, 1.0);
    const int nmin = classify::mode_floor(p);
    std::string counts;
    for (int n = nmin; n <= 3; ++n) {
      const auto arc = curve::sample_curve(
          classify::build_critical_point(p, Family::longer_arc, n), N);
      counts += "larc:" + std::to_string(n) + "->" +
                std::to_string(curve::self_intersections(arc).size()) + " ";
    }
    note("crossings at mu=" + std::to_string(mu) + ": " + counts);
  }
}

// ---------------------------------------------------------------- criterion 4
void criterion_energy() {
  const double lh = moduli::constants().lambda_hat;

  bool triple_ok = true;
  for (double mu : {0.1, 0.3, 0.5, lh, 1.0, 2.0, 5.0}) {
    const ProblemParams p(mu, 1.0);
    for (const auto& cp : classify::enumerate_critical_points(p, 4)) {
      if (cp.family == Family::segment) continue;
      const double a = energy::energy_closed_form(cp, p).total;
      triple_ok &= oracles::rel_err(energy::energy_elliptic_form(cp, p), a) < 1e-10;
      triple_ok &= oracles::rel_err(energy::energy_e_form(cp, p), a) < 1e-10;
      triple_ok &= oracles::rel_err(energy::energy_h_form(cp, p), a) < 1e-10;
    }
  }
  sub(triple_ok, "triple representation agreement < 1e-10 over the mu grid");

  bool quad_ok = true;
  for (double mu : {0.5, lh, 3.0}) {
    const ProblemParams p(mu, 1.0);
    for (const auto& cp : classify::enumerate_critical_points(p, 2)) {
      if (cp.family == Family::segment) continue;
      const auto closed = energy::energy_closed_form(cp, p);
      const auto disc =
          energy::discrete_energy(curve::sample_curve(cp, 8192), p.lambda);
      quad_ok &= oracles::rel_err(disc.bending, closed.bending) < 1e-8;
      quad_ok &= oracles::rel_err(disc.length, closed.length) < 1e-8;
    }
  }
  sub(quad_ok, "closed form vs quadrature < 1e-8 relative at N = 8192");

  bool ineq_ok = true;
  for (double mu : {0.1, 0.3, 0.5, lh, 1.0, 2.0, 5.0}) {
    const ProblemParams p(mu, 1.0);
    const auto rep = energy::compare_all(p, 3);
    for (const auto& chk : rep.checks) ineq_ok &= chk.pass;
    const std::string expect = mu <= lh * (1.0 + 1e-12) ? "larc:1" : "loop:1";
    ineq_ok &= rep.minimal_nontrivial == expect;
  }
  // exact equality case at lambda ell^2 = m^2 lambda_hat
  for (double mu : {lh, 4.0 * lh}) {
    const ProblemParams p(mu, 1.0);
    const auto rep = energy::compare_all(p, 3);
    bool saw = false;
    for (const auto& chk : rep.checks) {
      if (chk.equality_case) {
        saw = true;
        ineq_ok &= chk.pass;
      }
    }
    ineq_ok &= saw;
  }
  sub(ineq_ok, "mode monotonicity, larc<=sarc (+equality case), arc/loop order");

  bool psi_ok = energy::psi(1.0, 2, lh) > 0.0;
  double prev_psi = 1e300;
  for (int i = 1; i <= 20; ++i) {
    const double lambda = 4.0 * lh * i / 20.0 * 0.9999;
    const double cur = energy::psi(1.0, 2, lambda);
    psi_ok &= cur > 0.0 && cur < prev_psi;
    prev_psi = cur;
  }
  sub(psi_ok, "Psi_{ell,n} positive and strictly decreasing");

  const double ld = energy::crossover_lambda(1.0);
  sub(std::fabs(ld - 0.32241) < 1e-3, "lambda_dagger(ell=1) = 0.32241 +- 1e-3");
  {
    const ProblemParams p(ld, 1.0);
    const double es =
        energy::energy_closed_form(
            classify::build_critical_point(p, Family::shorter_arc, 1), p)
            .total;
    const double eo = energy::energy_closed_form(
                          classify::build_critical_point(p, Family::loop, 1), p)
                          .total;
    sub(oracles::rel_err(es, eo) < 1e-9, "root residual E[sarc1] = E[loop1]");
  }
  int flips = 0;
  double prev_sign = 0.0;
  for (int i = 1; i <= 200; ++i) {
    const double lambda = lh * i / 201.0;
    const ProblemParams p(lambda, 1.0);
    const double d =
        energy::energy_closed_form(
            classify::build_critical_point(p, Family::shorter_arc, 1), p)
            .total -
        energy::energy_closed_form(
            classify::build_critical_point(p, Family::loop, 1), p)
            .total;
    const double s = d > 0.0 ? 1.0 : -1.0;
    if (prev_sign != 0.0 && s != prev_sign) ++flips;
    prev_sign = s;
  }
  sub(flips == 1, "sign of E[sarc1] - E[loop1] flips exactly once (200 grid)");
}

// ---------------------------------------------------------------- criterion 5
void criterion_stability() {
  const double lh = moduli::constants().lambda_hat;

  bool arcs_sign_ok = true;
  for (double mu : {0.1, 0.3, 0.5, 0.65}) {
    const ProblemParams p(mu, 1.0);
    for (auto f : kArcFamilies) {
      const auto cp = classify::build_critical_point(p, f, 1);
      const double fd = oracles::fd2(
          [&](double q) { return energy::q_family_energy(q, mu, 1.0); }, cp.q,
          1e-4);
      arcs_sign_ok &= fd * stability::second_derivative_sign(cp, p) > 0.0;
    }
  }
  sub(arcs_sign_ok, "arc families: -g'(q_i) matches FD energy curvature sign");

  bool loop_sign_ok = true;
  for (double mu : {0.5, 1.0, 2.0}) {
    const ProblemParams p(mu, 1.0);
    const auto cp = classify::build_critical_point(p, Family::loop, 1);
    const double fd = oracles::fd2(
        [&](double q) { return energy::q_family_energy(q, mu, 1.0); }, cp.q,
        1e-4);
    loop_sign_ok &= fd * stability::second_derivative_sign(cp, p) > 0.0;
  }
  sub(loop_sign_ok, "loop family: -g'(q_3) matches FD energy curvature sign");
  if (!loop_sign_ok) {
    note("expected: the positive-length loop-branch energy has a MINIMUM at");
    note("q_3 (FD curvature > 0) while -g'(q_3) < 0; the printed loop sign");
    note("rule describes the analytic continuation with 2E-K < 0, not the");
    note("defined family. Loop instability rests on the rigidity verdicts.");
  }

  bool table_ok = true;
  for (int i = 1; i <= 30; ++i) {
    const double mu = 2.4 * i / 30.0;
    const ProblemParams p(mu, 1.0);
    for (const auto& cp : classify::enumerate_critical_points(p, 3)) {
      const bool stable =
          stability::stability_verdict(cp, p).verdict ==
          stability::Verdict::stable;
      const bool expect =
          cp.family == Family::segment ||
          (cp.family == Family::longer_arc && cp.n == 1 && !cp.merged &&
           mu < lh);
      table_ok &= stable == expect;
    }
  }
  sub(table_ok, "verdict table over 30-point grid, n <= 3, matches the theorem");

  bool count_ok = true;
  for (int i = 1; i <= 30; ++i) {
    const double mu = 2.4 * i / 30.0;
    count_ok &=
        stability::count_local_minimizers(ProblemParams(mu, 1.0)) ==
        (mu < lh ? 2 : 1);
  }
  sub(count_ok, "count_local_minimizers: 2 below lambda_hat, 1 at/above");
}

// ---------------------------------------------------------------- criterion 6
void criterion_flow() {
  const ProblemParams p(0.5, 1.0);
  const double C = energy::loop_threshold(p);
  bool energy_monotone_ok = true;

  auto check_trace = [&](const flow::FlowOutcome& out) {
    for (std::size_t i = 1; i < out.energy_trace.size(); ++i) {
      energy_monotone_ok &=
          out.energy_trace[i].energy <=
          out.energy_trace[i - 1].energy + 1e-8 * out.energy_trace[0].energy;
    }
  };

  // (b) stationarity drift at M = 400 over [0, 0.1]
  bool drift_ok = true;
  for (const char* which : {"larc", "sarc", "segment"}) {
    classify::CriticalPoint cp;
    if (std::strcmp(which, "segment") == 0) {
      cp = classify::build_critical_point(p, Family::segment, 0);
    } else if (std::strcmp(which, "larc") == 0) {
      cp = classify::build_critical_point(p, Family::longer_arc, 1);
    } else {
      cp = classify::build_critical_point(p, Family::shorter_arc, 1);
    }
    auto st = flow::init_flow(curve::sample_curve(cp, 4096), p, 400, 1e-6);
    const auto st0 = st;
    flow::RunOptions opt;
    opt.sample_interval = 0.02;
    const auto out = flow::run(st, 0.1, {}, opt);
    check_trace(out);
    double drift = 0.0;
    for (int i = 0; i < st0.node_count(); ++i) {
      drift = std::max(drift, dist(out.final_state.x[i], out.final_state.y[i],
                                   st0.x[i], st0.y[i]));
    }
    drift_ok &= drift < 1e-3;
  }
  sub(drift_ok, "(b) drift from larc1/sarc1/segment < 1e-3 ell over [0, 0.1]");

  // (c) the literal datum: a wavelike q in (q_star, 1) with
  // E[gamma_w(q)] < C - 0.05
  const auto& cons = moduli::constants();
  double emin = 1e300, qmin = 0.0;
  for (int i = 1; i < 2000; ++i) {
    const double q = cons.q_star + (0.999 - cons.q_star) * i / 2000.0;
    const double e = energy::q_family_energy(q, p.lambda, p.ell);
    if (e < emin) {
      emin = e;
      qmin = q;
    }
  }
  const bool literal_exists = emin < C - 0.05;
  sub(literal_exists,
      "(c) exists q in (q_star,1) with E[gamma_w(q)] < C - 0.05");
  if (!literal_exists) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "min E over the loop branch is %.6f at q = %.6f; it equals "
                  "C = %.6f at q3, so no wavelike datum sits below C - 0.05",
                  emin, qmin, C);
    note(buf);
    note("running the repaired construction instead: an asymmetrically");
    note("perturbed one-mode loop descends below C - 0.05 with its crossing");
    note("intact, then sheds it (extinction of a self-intersection)");
  }

  // repaired construction: perturbed loop1
  auto c0 = curve::sample_curve(
      classify::build_critical_point(p, Family::loop, 1), 4096);
  const double L0 = c0.total_length;
  for (auto& s : c0.samples) {
    const double u = s.s / L0;
    const double w = u * u * (1.0 - u) * (1.0 - u) * 16.0;
    s.x += 0.15 * w * std::sin(2.0 * kPi * u) * (-std::sin(s.theta));
    s.y += 0.15 * w * std::sin(2.0 * kPi * u) * (std::cos(s.theta));
  }
  auto st = flow::init_flow(c0, p, 400, 1e-6);
  const auto catalogue = classify::enumerate_critical_points(p, 2);
  flow::RunOptions opt;
  opt.sample_interval = 0.5;
  const auto out = flow::run(st, 300.0, catalogue, opt);
  check_trace(out);

  bool started_crossed = !out.energy_trace.empty() &&
                         out.energy_trace.front().intersections == 1;
  bool subthreshold_crossed = false;
  bool regained = false;
  bool seen_zero = false;
  for (const auto& tr : out.energy_trace) {
    if (tr.energy < C - 0.05 && tr.intersections >= 1) {
      subthreshold_crossed = true;
    }
    if (tr.intersections == 0) seen_zero = true;
    if (seen_zero && tr.intersections > 0) regained = true;
  }
  sub(started_crossed && subthreshold_crossed,
      "(c') run passes through a self-intersecting state below C - 0.05");
  sub(out.embedded_since.has_value() && !regained,
      "(c') intersections reach 0 before the horizon and never return");
  sub(out.converged_to == "larc:1" || out.converged_to == "sarc:1" ||
          out.converged_to == "segment",
      "(d) the run converges in shape to an omega element (got " +
          out.converged_to + ")");

  sub(energy_monotone_ok,
      "(a) energy trace non-increasing (within 1e-8 E0 per step) on all runs");
}

// ---------------------------------------------------------------- criterion 7
std::string cli_path, golden_dir, scratch_dir;

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion_cli() {
  if (cli_path.empty() || golden_dir.empty() || scratch_dir.empty()) {
    sub(false, "criterion 7 needs --cli, --golden and --scratch arguments");
    return;
  }
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"constants", "constants.json"},
      {"classify --lambda 0.5 --ell 1 --n-max 2",
       "classify_lambda0.5_ell1_nmax2.json"},
      {"crossover --ell 1", "crossover_ell1.json"},
  };
  for (const auto& [args, file] : cases) {
    const std::string out_a = scratch_dir + "/acc_a.out";
    const std::string out_b = scratch_dir + "/acc_b.out";
    const int rc_a =
        std::system((cli_path + " " + args + " > " + out_a + " 2>/dev/null").c_str());
    const int rc_b =
        std::system((cli_path + " " + args + " > " + out_b + " 2>/dev/null").c_str());
    sub(WIFEXITED(rc_a) && WEXITSTATUS(rc_a) == 0 && WIFEXITED(rc_b) &&
            WEXITSTATUS(rc_b) == 0,
        args + ": exit 0");
    const std::string a = slurp(out_a);
    sub(!a.empty() && a == slurp(out_b), args + ": byte-identical reruns");
    sub(a == slurp(golden_dir + "/" + file), args + ": matches golden file");
  }
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc) {
      cli_path = argv[++i];
    } else if (std::strcmp(argv[i], "--golden") == 0 && i + 1 < argc) {
      golden_dir = argv[++i];
    } else if (std::strcmp(argv[i], "--scratch") == 0 && i + 1 < argc) {
      scratch_dir = argv[++i];
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "constants q_hat, q_star, lambda_hat", 1.0, criterion_constants},
      {2, "elliptic kernel property suite", 10.0, criterion_elliptic},
      {3, "classification / curve suite", 60.0, criterion_classification},
      {4, "energy suite", 60.0, criterion_energy},
      {5, "stability suite", 30.0, criterion_stability},
      {6, "flow suite", 600.0, criterion_flow},
      {7, "CLI determinism and goldens", 60.0, criterion_cli},
  };

  int total_failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    checks_failed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    c.body();
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const bool in_budget = dt < c.runtime_bound;
    const bool pass = checks_failed == 0 && in_budget;
    std::printf("[%s] criterion %d: %s (%.2f s, bound %.0f s)\n",
                pass ? "PASS" : "FAIL", c.id, c.name, dt, c.runtime_bound);
    if (!pass) ++total_failed;
  }
  return total_failed == 0 ? 0 : 1;
}
