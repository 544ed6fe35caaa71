#include "elastica/moduli.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "elastica/elliptic.hpp"

namespace elastica::moduli {

namespace {

using elliptic::complete_e;
using elliptic::complete_k;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Bisection to interval width 1e-14; the bracket must enclose a sign change.
double bisect(const std::function<double(double)>& fn, double lo, double hi) {
  double flo = fn(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = fn(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double two_e_minus_k(double q) { return 2.0 * complete_e(q) - complete_k(q); }

Constants compute_constants() {
  Constants c;
  c.q_star = bisect(two_e_minus_k, 0.8, 0.99);
  // one Newton polish: (2E - K)' = (2q^2 - 1) E / (q(1-q^2)) + ... computed
  // directly from the derivative formulae
  {
    const double q = c.q_star;
    const double kq = complete_k(q);
    const double eq = complete_e(q);
    const double kp = eq / (q * (1.0 - q * q)) - kq / q;
    const double ep = (eq - kq) / q;
    c.q_star = q - (2.0 * eq - kq) / (2.0 * ep - kp);
  }
  c.q_hat = bisect(eval_f, kInvSqrt2, c.q_star);
  c.q_hat -= eval_f(c.q_hat) / eval_f_prime(c.q_hat);
  c.lambda_hat = eval_g(c.q_hat);
  return c;
}

}  // namespace

const Constants& constants() {
  static const Constants c = compute_constants();
  return c;
}

double eval_f(double q) {
  if (!(q >= kInvSqrt2 - 1e-15) || !(q < 1.0)) {
    throw domain_error("eval_f: q must lie in [1/sqrt(2), 1), got q=" +
                       std::to_string(q));
  }
  const double q2 = q * q;
  const double kq = complete_k(q);
  const double eq = complete_e(q);
  return (4.0 * q2 * q2 - 5.0 * q2 + 1.0) * kq +
         (-8.0 * q2 * q2 + 8.0 * q2 - 1.0) * eq;
}

double eval_f_prime(double q) {
  if (!(q > kInvSqrt2 - 1e-15) || !(q < 1.0)) {
    throw domain_error("eval_f_prime: q must lie in (1/sqrt(2), 1), got q=" +
                       std::to_string(q));
  }
  const double q2 = q * q;
  return (20.0 * q2 * q - 13.0 * q) * complete_k(q) +
         20.0 * q * (1.0 - 2.0 * q2) * complete_e(q);
}

double eval_g(double q) {
  if (!(q >= kInvSqrt2 - 1e-15) || !(q < 1.0)) {
    throw domain_error("eval_g: q must lie in [1/sqrt(2), 1), got q=" +
                       std::to_string(q));
  }
  const double d = two_e_minus_k(q);
  return 8.0 * d * d * (2.0 * q * q - 1.0);
}

double eval_g_prime(double q) {
  if (!(q > kInvSqrt2) || !(q < 1.0)) {
    throw domain_error("eval_g_prime: q must lie in (1/sqrt(2), 1), got q=" +
                       std::to_string(q));
  }
  return 16.0 / (q * (1.0 - q * q)) * two_e_minus_k(q) * eval_f(q);
}

double eval_g_second(double q) {
  // g'' = d/dq [ 16/(q(1-q^2)) (2E-K) f ], product rule with closed forms
  const double kq = complete_k(q);
  const double eq = complete_e(q);
  const double kp = eq / (q * (1.0 - q * q)) - kq / q;
  const double ep = (eq - kq) / q;
  const double w = q * (1.0 - q * q);
  const double wp = 1.0 - 3.0 * q * q;
  const double d = 2.0 * eq - kq;
  const double dp = 2.0 * ep - kp;
  const double fq = eval_f(q);
  const double fp = eval_f_prime(q);
  return 16.0 * ((-wp / (w * w)) * d * fq + (dp * fq + d * fp) / w);
}

double eval_e(double q) {
  const Constants& c = constants();
  if (!(q > kInvSqrt2) || !(q < 1.0)) {
    throw domain_error("eval_e: q must lie in (1/sqrt(2), 1), got q=" +
                       std::to_string(q));
  }
  if (std::fabs(q - c.q_star) < 1e-8) {
    throw singular_error(
        "eval_e: q within 1e-8 of q_star where 2E - K vanishes");
  }
  const double kq = complete_k(q);
  const double eq = complete_e(q);
  const double num = (4.0 * q * q - 3.0) * kq + 2.0 * eq;
  const double den = (2.0 * q * q - 1.0) * std::fabs(2.0 * eq - kq);
  return num / den;
}

double eval_e_prime(double q) {
  const Constants& c = constants();
  if (!(q > kInvSqrt2) || !(q < 1.0)) {
    throw domain_error("eval_e_prime: q must lie in (1/sqrt(2), 1), got q=" +
                       std::to_string(q));
  }
  if (std::fabs(q - c.q_star) < 1e-8) {
    throw singular_error("eval_e_prime: q within 1e-8 of q_star");
  }
  const double kq = complete_k(q);
  const double eq = complete_e(q);
  const double kp = eq / (q * (1.0 - q * q)) - kq / q;
  const double d = 2.0 * eq - kq;
  const double t = 2.0 * q * q - 1.0;
  return -4.0 * eval_f(q) * kp / (t * t * d * std::fabs(d));
}

double eval_h(double q) {
  if (!(q > kInvSqrt2) || !(q < 1.0)) {
    throw domain_error("eval_h: q must lie in (1/sqrt(2), 1), got q=" +
                       std::to_string(q));
  }
  const double kq = complete_k(q);
  const double eq = complete_e(q);
  return ((4.0 * q * q - 3.0) * kq + 2.0 * eq) / std::sqrt(2.0 * q * q - 1.0);
}

double eval_h_prime(double q) {
  if (!(q > kInvSqrt2) || !(q < 1.0)) {
    throw domain_error("eval_h_prime: q must lie in (1/sqrt(2), 1), got q=" +
                       std::to_string(q));
  }
  const double t = 2.0 * q * q - 1.0;
  return -eval_f(q) / (t * std::sqrt(t) * q * (1.0 - q * q));
}

double eval_i(double q) {
  if (!(q > 0.0) || !(q < 1.0)) {
    throw domain_error("eval_i: q must lie in (0, 1), got q=" +
                       std::to_string(q));
  }
  const double kq = complete_k(q);
  const double eq = complete_e(q);
  return kq * kq / q + eq * eq / (q * (1.0 - q * q)) - 2.0 * kq * eq / q;
}

namespace {

// Bisection for g(q) = c on [lo, hi] where g - c changes sign, then up to two
// Newton polish steps with the closed-form g' (skipped near q_hat where
// g' -> 0; bisection alone already meets the residual there because g is
// flat).
double solve_g(double c, double lo, double hi, const Constants& cons) {
  double q = bisect([&](double x) { return eval_g(x) - c; }, lo, hi);
  if (std::fabs(q - cons.q_hat) > 1e-6) {
    for (int it = 0; it < 2; ++it) {
      const double gp = eval_g_prime(q);
      if (std::fabs(gp) < 1e-8) break;
      double next = q - (eval_g(q) - c) / gp;
      if (next <= lo || next >= hi) break;
      q = next;
    }
  }
  return q;
}

}  // namespace

BranchedModulus invert_g(double c, Branch branch) {
  const Constants& cons = constants();
  if (!(c > 0.0)) {
    throw domain_error("invert_g: level c must be positive, got c=" +
                       std::to_string(c));
  }
  if (branch == Branch::b1 || branch == Branch::b2) {
    if (std::fabs(c - cons.lambda_hat) <= 1e-12 * cons.lambda_hat) {
      return {cons.q_hat, branch};  // q1(lambda_hat) = q2(lambda_hat) = q_hat
    }
    if (c > cons.lambda_hat) {
      throw branch_error(
          "invert_g: branches B1/B2 only reach levels c <= lambda_hat, got c=" +
          std::to_string(c));
    }
  }
  switch (branch) {
    case Branch::b1:
      return {solve_g(c, kInvSqrt2 + 1e-9, cons.q_hat, cons), branch};
    case Branch::b2:
      return {solve_g(c, cons.q_hat, cons.q_star - 1e-9, cons), branch};
    case Branch::b3: {
      const double lo = cons.q_star + 1e-9;
      double hi = 0.95;
      while (eval_g(hi) <= c) {
        hi = 1.0 - 0.25 * (1.0 - hi);
        if (1.0 - hi < 2e-12) {
          throw domain_error(
              "invert_g: level c=" + std::to_string(c) +
              " pushes q3 beyond the supported modulus range below 1");
        }
      }
      return {solve_g(c, lo, hi, cons), branch};
    }
  }
  throw domain_error("invert_g: unknown branch");
}

}  // namespace elastica::moduli
