#pragma once

#include <string>
#include <vector>

#include "elastica/classify.hpp"
#include "elastica/curve.hpp"

namespace elastica::energy {

struct EnergyBreakdown {
  double bending;  // B = int k^2 ds
  double length;   // L
  double total;    // E_lambda = B + lambda L
};

// Closed forms for a critical point consistent with p (n^2 g(q) = lambda
// ell^2 within 1e-8 relative, else consistency_error):
//   B = 8 n alpha (q^2 K - K + E),  L = 2 n K / alpha,  total = B + lambda L.
EnergyBreakdown energy_closed_form(const classify::CriticalPoint& cp,
                                   const classify::ProblemParams& p);

// The three equivalent total-energy representations, kept separate so tests
// can pin their agreement: (8 n^2/ell) |2E-K| ((4q^2-3)K + 2E),
// lambda ell e(q), and 2 sqrt(2) n sqrt(lambda) h(q).
double energy_elliptic_form(const classify::CriticalPoint& cp,
                       const classify::ProblemParams& p);
double energy_e_form(const classify::CriticalPoint& cp,
                     const classify::ProblemParams& p);
double energy_h_form(const classify::CriticalPoint& cp,
                     const classify::ProblemParams& p);

// Quadrature energy of a sampled curve: B by composite Simpson over the k
// column, L by Simpson over fourth-order finite-difference speeds. The
// measurement is taken from the geometry, not from the unit-speed premise.
EnergyBreakdown discrete_energy(const curve::PlanarCurve& c, double lambda,
                                par::Exec exec = par::Exec::parallel);

// E_lambda[gamma_w(., q)] and its q-derivative along the wavelike family
// (true positive-length energies on both sides of q_star).
double q_family_energy(double q, double lambda, double ell);
double q_family_energy_derivative(double q, double lambda, double ell);

struct SingleTermComparison {
  double bending_sarc, bending_larc;
  double length_sarc, length_larc;
};

// B[sarc1] > B[larc1] and L[sarc1] < L[larc1]; requires both one-mode arcs
// to exist and be distinct (lambda ell^2 < lambda_hat).
SingleTermComparison single_term_comparison(const classify::ProblemParams& p);

struct ComparisonCheck {
  std::string rule;        // which comparison this encodes
  std::string statement;
  double margin;           // positive unless the stated equality case holds
  bool equality_case;
  bool pass;
};

struct ComparisonReport {
  std::vector<std::pair<std::string, double>> ordering;  // id, total energy
  std::vector<ComparisonCheck> checks;
  std::string minimal_nontrivial;  // id of the nontrivial energy minimum
};

ComparisonReport compare_all(const classify::ProblemParams& p, int n_max);

// Psi_{ell,n}(lambda) = n h(q2(lambda ell^2 / n^2)) - h(q3(lambda ell^2)),
// for n >= 2 and 0 < lambda <= n^2 lambda_hat / ell^2.
double psi(double ell, int n, double lambda);

// The unique lambda where E[sarc1] and E[loop1] swap order (~0.32241/ell^2).
double crossover_lambda(double ell);

// C_{lambda,ell} = E_lambda[loop1], the eventual-embeddedness threshold.
double loop_threshold(const classify::ProblemParams& p);

}  // namespace elastica::energy
