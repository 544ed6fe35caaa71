#include "elastica/stability.hpp"

#include <cmath>

#include "elastica/errors.hpp"
#include "elastica/moduli.hpp"

namespace elastica::stability {

using classify::CriticalPoint;
using classify::Family;
using classify::ProblemParams;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::unstable: return "unstable";
    case Verdict::degenerate_unstable: return "degenerate-unstable";
  }
  return "?";
}

const char* mechanism_name(Mechanism m) {
  switch (m) {
    case Mechanism::global_min: return "global-min";
    case Mechanism::q_family_second_derivative: return "q-family-second-derivative";
    case Mechanism::third_derivative: return "third-derivative";
    case Mechanism::higher_mode_rigidity: return "higher-mode-rigidity";
  }
  return "?";
}

namespace {

bool at_lambda_hat(const ProblemParams& p) {
  const double lh = moduli::constants().lambda_hat;
  return std::fabs(p.mu() - lh) <= 1e-10 * lh;
}

}  // namespace

double second_derivative_sign(const CriticalPoint& cp,
                              const ProblemParams& p) {
  if (cp.family == Family::segment) {
    throw applicability_error(
        "second_derivative_sign: the segment is not on the wavelike family");
  }
  if (cp.n != 1) {
    throw applicability_error(
        "second_derivative_sign: the one-mode sign rule requires n = 1");
  }
  if (cp.merged || at_lambda_hat(p)) return 0.0;
  return -moduli::eval_g_prime(cp.q);
}

double degenerate_third_derivative(const ProblemParams& p) {
  if (!at_lambda_hat(p)) {
    throw applicability_error(
        "degenerate_third_derivative: requires lambda ell^2 = lambda_hat "
        "within 1e-10 relative");
  }
  const auto& c = moduli::constants();
  const double g = moduli::eval_g(c.q_hat);
  return -16.0 / p.ell * (2.0 * c.q_hat * c.q_hat - 1.0) *
         moduli::eval_i(c.q_hat) * p.mu() * moduli::eval_g_second(c.q_hat) /
         (g * g);
}

StabilityVerdict stability_verdict(const CriticalPoint& cp,
                                   const ProblemParams& p) {
  if (cp.family == Family::segment) {
    return {Verdict::stable, Mechanism::global_min, 0.0};
  }
  if (cp.n >= 2) {
    return {Verdict::unstable, Mechanism::higher_mode_rigidity, 0.0};
  }
  if (cp.family != Family::loop && (cp.merged || at_lambda_hat(p))) {
    return {Verdict::degenerate_unstable, Mechanism::third_derivative,
            degenerate_third_derivative(p)};
  }
  const double sign = second_derivative_sign(cp, p);
  if (cp.family == Family::longer_arc && sign > 0.0) {
    return {Verdict::stable, Mechanism::q_family_second_derivative, sign};
  }
  return {Verdict::unstable, Mechanism::q_family_second_derivative, sign};
}

int count_local_minimizers(const ProblemParams& p) {
  const double lh = moduli::constants().lambda_hat;
  return p.mu() < lh * (1.0 - 1e-10) ? 2 : 1;
}

}  // namespace elastica::stability
