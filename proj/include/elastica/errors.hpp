#pragma once

#include <stdexcept>
#include <string>

namespace elastica {

// Thrown when an argument leaves the mathematical domain of an operation
// (modulus out of [0,1), negative penalty, arclength out of range, ...).
struct domain_error : std::domain_error {
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a g-inversion is requested on a branch that cannot reach the
// target level (c > lambda_hat on B1/B2).
struct branch_error : std::domain_error {
  explicit branch_error(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a critical point is requested with an infeasible mode
// (arcs with n < n_{lambda,ell}).
struct infeasible_error : std::domain_error {
  explicit infeasible_error(const std::string& what) : std::domain_error(what) {}
};

// Thrown at removable-singularity guards (e(q) near q_*, wavelike length
// blow-up at q_*).
struct singular_error : std::domain_error {
  explicit singular_error(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a CriticalPoint disagrees with the ProblemParams it is
// evaluated against (n^2 g(q) != lambda ell^2).
struct consistency_error : std::runtime_error {
  explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

// Flow-specific failures.
struct boundary_error : std::runtime_error {
  explicit boundary_error(const std::string& what) : std::runtime_error(what) {}
};
struct resolution_error : std::runtime_error {
  explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};
struct step_error : std::runtime_error {
  explicit step_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation is applied outside its regime
// (degenerate third derivative away from lambda ell^2 = lambda_hat,
// one-mode sign rule on n >= 2).
struct applicability_error : std::runtime_error {
  explicit applicability_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace elastica
