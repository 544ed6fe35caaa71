#include "elastica/energy.hpp"

#include <algorithm>
#include <cmath>

#include "elastica/elliptic.hpp"
#include "elastica/errors.hpp"
#include "elastica/moduli.hpp"

namespace elastica::energy {

using classify::CriticalPoint;
using classify::Family;
using classify::ProblemParams;
using elliptic::complete_e;
using elliptic::complete_k;

namespace {

void require_consistent(const CriticalPoint& cp, const ProblemParams& p,
                        const char* who) {
  if (cp.family == Family::segment) return;
  const double level = cp.n * cp.n * moduli::eval_g(cp.q);
  if (std::fabs(level - p.mu()) > 1e-8 * p.mu()) {
    throw consistency_error(std::string(who) +
                            ": critical point does not satisfy n^2 g(q) = "
                            "lambda ell^2 for the given parameters");
  }
}

}  // namespace

EnergyBreakdown energy_closed_form(const CriticalPoint& cp,
                                   const ProblemParams& p) {
  if (cp.family == Family::segment) {
    return {0.0, p.ell, p.lambda * p.ell};
  }
  require_consistent(cp, p, "energy_closed_form");
  const double kq = complete_k(cp.q);
  const double eq = complete_e(cp.q);
  const double bending =
      8.0 * cp.n * cp.alpha * (cp.q * cp.q * kq - kq + eq);
  const double length = 2.0 * cp.n * kq / cp.alpha;
  return {bending, length, bending + p.lambda * length};
}

double energy_elliptic_form(const CriticalPoint& cp, const ProblemParams& p) {
  if (cp.family == Family::segment) return p.lambda * p.ell;
  require_consistent(cp, p, "energy_elliptic_form");
  const double kq = complete_k(cp.q);
  const double eq = complete_e(cp.q);
  return 8.0 * cp.n * cp.n / p.ell * std::fabs(2.0 * eq - kq) *
         ((4.0 * cp.q * cp.q - 3.0) * kq + 2.0 * eq);
}

double energy_e_form(const CriticalPoint& cp, const ProblemParams& p) {
  if (cp.family == Family::segment) return p.lambda * p.ell;
  require_consistent(cp, p, "energy_e_form");
  return p.lambda * p.ell * moduli::eval_e(cp.q);
}

double energy_h_form(const CriticalPoint& cp, const ProblemParams& p) {
  if (cp.family == Family::segment) return p.lambda * p.ell;
  require_consistent(cp, p, "energy_h_form");
  return 2.0 * std::sqrt(2.0) * cp.n * std::sqrt(p.lambda) *
         moduli::eval_h(cp.q);
}

EnergyBreakdown discrete_energy(const curve::PlanarCurve& c, double lambda,
                                par::Exec exec) {
  const std::size_t m = c.samples.size();
  if (m < 5 || m % 2 == 0) {
    throw domain_error(
        "discrete_energy: need an odd sample count >= 5 (even N)");
  }
  const double h = c.total_length / static_cast<double>(m - 1);

  // fourth-order finite-difference speed; five-point one-sided stencils at
  // the boundary rows
  static const double kD1[5][5] = {
      {-25.0 / 12, 4.0, -3.0, 4.0 / 3, -1.0 / 4},
      {-1.0 / 4, -5.0 / 6, 3.0 / 2, -1.0 / 2, 1.0 / 12},
      {1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12},
      {-1.0 / 12, 1.0 / 2, -3.0 / 2, 5.0 / 6, 1.0 / 4},
      {1.0 / 4, -4.0 / 3, 3.0, -4.0, 25.0 / 12}};
  auto speed = [&](std::size_t i) {
    const auto& s = c.samples;
    std::size_t base, row;
    if (i < 2) {
      base = 0;
      row = i;
    } else if (i + 2 >= m) {
      base = m - 5;
      row = i - base;
    } else {
      base = i - 2;
      row = 2;
    }
    double dx = 0.0, dy = 0.0;
    for (int k = 0; k < 5; ++k) {
      dx += kD1[row][k] * s[base + k].x;
      dy += kD1[row][k] * s[base + k].y;
    }
    return std::hypot(dx, dy) / h;
  };

  auto simpson_weight = [&](std::size_t i) {
    if (i == 0 || i == m - 1) return 1.0;
    return i % 2 == 1 ? 4.0 : 2.0;
  };

  const double bending = par::sum_indexed(
                             m,
                             [&](std::size_t i) {
                               const double k = c.samples[i].k;
                               return simpson_weight(i) * k * k;
                             },
                             exec) *
                         h / 3.0;
  const double length =
      par::sum_indexed(
          m, [&](std::size_t i) { return simpson_weight(i) * speed(i); },
          exec) *
      h / 3.0;
  return {bending, length, bending + lambda * length};
}

namespace {

// Positive-length wavelike energy pieces on either side of q_star.
struct WavePieces {
  double bending;
  double length;
};

WavePieces wave_pieces(double q, double ell) {
  const double kq = complete_k(q);
  const double eq = complete_e(q);
  const double d = std::fabs(2.0 * eq - kq);
  return {16.0 / ell * ((q * q - 1.0) * kq + eq) * d, ell * kq / d};
}

void require_wave_q(double q, const char* who) {
  const double q_star = moduli::constants().q_star;
  if (!(q > 0.0) || !(q < 1.0)) {
    throw domain_error(std::string(who) + ": q must lie in (0, 1)");
  }
  if (std::fabs(q - q_star) < 1e-8) {
    throw singular_error(std::string(who) +
                         ": q within 1e-8 of q_star, the length diverges");
  }
}

}  // namespace

double q_family_energy(double q, double lambda, double ell) {
  require_wave_q(q, "q_family_energy");
  const auto w = wave_pieces(q, ell);
  return w.bending + lambda * w.length;
}

double q_family_energy_derivative(double q, double lambda, double ell) {
  require_wave_q(q, "q_family_energy_derivative");
  const double kq = complete_k(q);
  const double eq = complete_e(q);
  const double d = 2.0 * eq - kq;
  // (2q^2-1)(-1 + lambda ell^2/g) expanded through g = 8 d^2 (2q^2-1); the
  // expanded form stays finite at q = 1/sqrt(2)
  const double factor =
      -(2.0 * q * q - 1.0) + lambda * ell * ell / (8.0 * d * d);
  const double arc_form = 16.0 / ell * factor * moduli::eval_i(q);
  // past q_star the positive-length branch flips the sign of both B and L
  return q < moduli::constants().q_star ? arc_form : -arc_form;
}

SingleTermComparison single_term_comparison(const ProblemParams& p) {
  const double lh = moduli::constants().lambda_hat;
  if (!(p.mu() < lh * (1.0 - 1e-12))) {
    throw infeasible_error(
        "single_term_comparison: requires lambda ell^2 < lambda_hat so the "
        "one-mode arcs exist and are distinct");
  }
  const auto sarc = classify::build_critical_point(p, Family::shorter_arc, 1);
  const auto larc = classify::build_critical_point(p, Family::longer_arc, 1);
  const auto es = energy_closed_form(sarc, p);
  const auto el = energy_closed_form(larc, p);
  return {es.bending, el.bending, es.length, el.length};
}

ComparisonReport compare_all(const ProblemParams& p, int n_max) {
  if (n_max < 2) {
    throw domain_error("compare_all: n_max must be >= 2");
  }
  const double lh = moduli::constants().lambda_hat;
  const auto catalogue = classify::enumerate_critical_points(p, n_max);
  ComparisonReport rep;

  auto total = [&](const CriticalPoint& cp) {
    return energy_closed_form(cp, p).total;
  };
  for (const auto& cp : catalogue) rep.ordering.push_back({cp.id(), total(cp)});

  auto find = [&](Family f, int n) -> const CriticalPoint* {
    for (const auto& cp : catalogue) {
      if (cp.family == f && cp.n == n) return &cp;
      if (cp.merged && cp.n == n &&
          (f == Family::shorter_arc || f == Family::longer_arc)) {
        return &cp;
      }
    }
    return nullptr;
  };

  // mode monotonicity within each family
  for (Family f : {Family::shorter_arc, Family::longer_arc, Family::loop}) {
    for (int n = 1; n < n_max; ++n) {
      const auto* a = find(f, n);
      const auto* b = find(f, n + 1);
      if (a == nullptr || b == nullptr) continue;
      const double margin = total(*b) - total(*a);
      rep.checks.push_back({"mode-monotonicity",
                            std::string(classify::family_name(f)) + ":" +
                                std::to_string(n) + " < " +
                                classify::family_name(f) + ":" +
                                std::to_string(n + 1),
                            margin, false, margin > 0.0});
    }
  }

  // larc_n <= sarc_n with the exact equality case at the merge levels
  for (int n = 1; n <= n_max; ++n) {
    const auto* s = find(Family::shorter_arc, n);
    const auto* l = find(Family::longer_arc, n);
    if (s == nullptr || l == nullptr) continue;
    const bool equality = s->merged;
    const double margin = total(*s) - total(*l);
    const bool pass = equality ? std::fabs(margin) <= 1e-10 * total(*s)
                               : margin > 0.0;
    rep.checks.push_back({"larc-vs-sarc",
                          "larc:" + std::to_string(n) +
                              " <= sarc:" + std::to_string(n), margin,
                          equality, pass});
  }

  // larc1 < loop1 below lambda_hat
  if (p.mu() <= lh * (1.0 + 1e-12)) {
    const auto* l1 = find(Family::longer_arc, 1);
    const auto* o1 = find(Family::loop, 1);
    if (l1 != nullptr && o1 != nullptr) {
      const double margin = total(*o1) - total(*l1);
      rep.checks.push_back(
          {"larc1-vs-loop1", "larc:1 < loop:1", margin, false, margin > 0.0});
    }
  }

  // larc_n > loop1 for n >= 2
  const auto* o1 = find(Family::loop, 1);
  for (int n = 2; n <= n_max; ++n) {
    const auto* l = find(Family::longer_arc, n);
    if (l == nullptr || o1 == nullptr) continue;
    const double margin = total(*l) - total(*o1);
    rep.checks.push_back({"larc-n-vs-loop1",
                          "larc:" + std::to_string(n) + " > loop:1", margin,
                          false, margin > 0.0});
  }

  double best = 0.0;
  for (const auto& cp : catalogue) {
    if (cp.family == Family::segment) continue;
    const double e = total(cp);
    if (rep.minimal_nontrivial.empty() || e < best) {
      best = e;
      rep.minimal_nontrivial = cp.id();
    }
  }
  return rep;
}

double psi(double ell, int n, double lambda) {
  const double lh = moduli::constants().lambda_hat;
  if (n < 2) throw domain_error("psi: defined for modes n >= 2");
  if (!(ell > 0.0)) throw domain_error("psi: ell must be positive");
  const double upper = n * n * lh / (ell * ell);
  if (!(lambda > 0.0) || lambda > upper * (1.0 + 1e-12)) {
    throw domain_error("psi: lambda must lie in (0, n^2 lambda_hat / ell^2]");
  }
  const double mu = lambda * ell * ell;
  const double q2 = moduli::invert_g(std::min(mu / (n * n), lh),
                                     moduli::Branch::b2).q;
  const double q3 = moduli::invert_g(mu, moduli::Branch::b3).q;
  return n * moduli::eval_h(q2) - moduli::eval_h(q3);
}

double crossover_lambda(double ell) {
  if (!(ell > 0.0)) {
    throw domain_error("crossover_lambda: ell must be positive");
  }
  const double lh = moduli::constants().lambda_hat;
  auto phi = [&](double lambda) {
    const ProblemParams p(lambda, ell);
    const auto sarc = classify::build_critical_point(p, Family::shorter_arc, 1);
    const auto loop = classify::build_critical_point(p, Family::loop, 1);
    return energy_closed_form(sarc, p).total - energy_closed_form(loop, p).total;
  };
  double lo = 1e-6 * lh / (ell * ell);
  double hi = lh / (ell * ell);
  double flo = phi(lo);
  for (int i = 0; i < 120 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = phi(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double loop_threshold(const ProblemParams& p) {
  const auto loop = classify::build_critical_point(p, Family::loop, 1);
  return energy_closed_form(loop, p).total;
}

}  // namespace elastica::energy
