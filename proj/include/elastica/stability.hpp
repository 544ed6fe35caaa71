#pragma once

#include "elastica/classify.hpp"

namespace elastica::stability {

enum class Verdict { stable, unstable, degenerate_unstable };

enum class Mechanism {
  global_min,                   // the segment minimizes E_lambda globally
  q_family_second_derivative,   // sign of -g'(q_i) along the wavelike family
  third_derivative,             // degenerate merged arc at lambda ell^2 = lambda_hat
  higher_mode_rigidity          // n >= 2 rigidity verdicts
};

// DegenerateUnstable is diagnostic metadata for the merged arc; its verdict
// semantics are identical to Unstable.
struct StabilityVerdict {
  Verdict verdict;
  Mechanism mechanism;
  double sign_value;  // signed diagnostic, e.g. -g'(q_i)
};

const char* verdict_name(Verdict v);
const char* mechanism_name(Mechanism m);

// The one-mode sign rule: returns -g'(q_i(lambda ell^2)). Positive for larc1
// below lambda_hat, negative for sarc1 and loop1, zero at the merged arc.
// Rejects n >= 2 and the segment.
double second_derivative_sign(const classify::CriticalPoint& cp,
                              const classify::ProblemParams& p);

// Third q-derivative of E_lambda[gamma_w(., q)] at q_hat, valid only when
// lambda ell^2 = lambda_hat within 1e-10 relative:
//   -(16/ell) (2 q_hat^2 - 1) I(q_hat) lambda ell^2 g''(q_hat) / g(q_hat)^2,
// strictly positive since g''(q_hat) < 0.
double degenerate_third_derivative(const classify::ProblemParams& p);

StabilityVerdict stability_verdict(const classify::CriticalPoint& cp,
                                   const classify::ProblemParams& p);

// 2 below lambda_hat (segment and larc1), 1 at or above.
int count_local_minimizers(const classify::ProblemParams& p);

}  // namespace elastica::stability
