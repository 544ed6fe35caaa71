#pragma once

#include "elastica/errors.hpp"

namespace elastica::moduli {

// The scalar machinery behind the classification: the functions f, g, e, h, I
// on the modulus axis, the landmark constants q_hat / q_star / lambda_hat,
// and inversion of g on its three monotone branches.
//
//   f(q) = (4q^4 - 5q^2 + 1) K(q) + (-8q^4 + 8q^2 - 1) E(q)
//   g(q) = 8 (2E(q) - K(q))^2 (2q^2 - 1)
//
// g rises from 0 at 1/sqrt(2) to its unique local maximum lambda_hat at
// q_hat (the root of f), falls back to 0 at q_star (the root of 2E - K),
// and rises to infinity after that. The three monotone pieces are the
// branches B1, B2, B3 below.

enum class Branch { b1, b2, b3 };

struct BranchedModulus {
  double q;
  Branch branch;
};

struct Constants {
  double q_star;      // root of 2E - K, ~0.90891
  double q_hat;       // root of f, ~0.79257
  double lambda_hat;  // g(q_hat), ~0.70107
};

// Computed once (residuals below 1e-12), then shared read-only.
const Constants& constants();

double eval_f(double q);        // q in [1/sqrt(2), 1)
double eval_f_prime(double q);  // (20q^3 - 13q) K + 20q(1 - 2q^2) E
double eval_g(double q);        // q in [1/sqrt(2), 1)
double eval_g_prime(double q);  // q in (1/sqrt(2), 1)
double eval_g_second(double q);

// Energy-comparison scalars. e is singular at q_star (rejected within 1e-8);
// eval_i is the positive quantity I(q) = K^2/q + E^2/(q(1-q^2)) - 2KE/q.
double eval_e(double q);
double eval_e_prime(double q);
double eval_h(double q);
double eval_h_prime(double q);
double eval_i(double q);

// Solve g(q) = c on the requested branch. B1/B2 require 0 < c <= lambda_hat
// (values within 1e-12 relative of lambda_hat snap to q_hat); B3 accepts any
// c > 0 representable below the modulus cap. Residual |g(q) - c| <= 1e-12 c.
BranchedModulus invert_g(double c, Branch branch);

}  // namespace elastica::moduli
