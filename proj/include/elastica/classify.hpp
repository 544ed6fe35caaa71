#pragma once

#include <string>
#include <vector>

#include "elastica/errors.hpp"
#include "elastica/moduli.hpp"

namespace elastica::classify {

struct ProblemParams {
  double lambda;  // penalty > 0
  double ell;     // endpoint gap > 0

  ProblemParams(double lambda_, double ell_);
  double mu() const { return lambda * ell * ell; }  // scale-invariant driver
};

enum class Family { segment, shorter_arc, longer_arc, loop };

const char* family_name(Family f);

// One critical point of E_lambda in A_ell. For the segment, q/alpha/sigma are
// unset (NaN / 0) and length = ell. For nontrivial families:
//   g(q) n^2 = lambda ell^2,
//   alpha = (2n/ell)|2E(q) - K(q)|,  length = 2 n K(q) / alpha,
//   sigma = -1 for arcs, +1 for loops (upper half-plane representative).
struct CriticalPoint {
  Family family;
  int n = 0;
  double q = 0.0;
  double alpha = 0.0;
  double length = 0.0;
  int sigma = 0;
  bool merged = false;  // arcs coincide: lambda ell^2 = m^2 lambda_hat, n = m

  std::string id() const;  // "segment", "sarc:1", "larc:2", "loop:1", ...
};

// n_{lambda,ell} = ceil(sqrt(lambda ell^2 / lambda_hat)); arcs exist only for
// n >= this. Exact-square ratios snap to the integer.
int mode_floor(const ProblemParams& p);

CriticalPoint build_critical_point(const ProblemParams& p, Family family, int n);

// Segment, then arcs for n in [max(1, mode_floor), n_max] (one merged entry
// where the branches coincide) and loops for n in [1, n_max], sorted by
// E_lambda ascending.
std::vector<CriticalPoint> enumerate_critical_points(const ProblemParams& p,
                                                     int n_max);

}  // namespace elastica::classify
