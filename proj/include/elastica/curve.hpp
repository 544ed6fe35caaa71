#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "elastica/classify.hpp"
#include "elastica/parallel.hpp"

namespace elastica::curve {

struct Sample {
  double s;      // arclength in [0, total_length]
  double x;
  double y;
  double theta;  // tangential angle, gamma' = (cos theta, sin theta)
  double k;      // signed curvature
};

struct PlanarCurve {
  std::vector<Sample> samples;  // s strictly increasing from 0
  double total_length = 0.0;
};

// N+1 uniform-arclength samples of the closed-form parametrization of cp.
// Curves are emitted in the upper-half-plane representative; reflect flips y
// (and the signs of theta and k).
PlanarCurve sample_curve(const classify::CriticalPoint& cp, int N,
                         bool reflect = false,
                         par::Exec exec = par::Exec::parallel);

// Closed-form signed curvature at arclength s in [0, length].
double curvature_at(const classify::CriticalPoint& cp, double s);

// Tangential angle at arclength s.
double theta_at(const classify::CriticalPoint& cp, double s);

// The wavelike family gamma_w(., q) with endpoints (0,0), (ell,0):
// arc form for q in (0, q_star), loop form for q in (q_star, 1); rejected
// within 1e-8 of q_star where the length diverges.
PlanarCurve wavelike_curve(double q, double ell, int N,
                           par::Exec exec = par::Exec::parallel);

// The wavelike member as a one-mode pseudo critical point (g(q) need not be
// a feasible level); usable with curvature_at / sample_curve.
classify::CriticalPoint wavelike_point(double q, double ell);

// Independent verification oracle: integrate theta' = k, gamma' =
// (cos theta, sin theta) with the classical fourth-order scheme at fixed
// step L/N from (0,0), theta(0) from the supplied initial angle.
PlanarCurve reconstruct_from_curvature(const std::function<double(double)>& k_fn,
                                       double length, double theta0, int N);

struct Crossing {
  std::size_t i;  // first segment index (samples i -> i+1)
  std::size_t j;  // second segment index, j > i + 1
  double x;
  double y;
};

// All transverse crossings between non-adjacent polyline segments, O(M^2)
// pair testing behind an axis-aligned bounding-box prefilter. Crossings
// within 1e-12 of a segment endpoint (relative to curve length) are ignored
// as numerical grazing.
std::vector<Crossing> self_intersections(const PlanarCurve& c,
                                         par::Exec exec = par::Exec::parallel);

}  // namespace elastica::curve
