#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "elastica/classify.hpp"
#include "elastica/curve.hpp"

namespace elastica::flow {

// Polyline state of the lambda-elastic flow under Navier conditions: nodes
// 0 and M are pinned to (0,0) and (ell,0) exactly; the discrete curvature
// at the ends is the zero vector by the ghost-node convention
// P_{-1} = 2 P_0 - P_1 (second difference vanishes).
struct FlowState {
  std::vector<double> x;
  std::vector<double> y;
  double time = 0.0;
  double dt = 0.0;
  double lambda = 0.0;
  double ell = 0.0;

  int node_count() const { return static_cast<int>(x.size()); }
  int segments() const { return node_count() - 1; }
};

struct FlowDiagnostics {
  double bending;
  double length;
  double energy;       // bending + lambda * length
  double min_edge;
  double max_edge;
  int intersections;
  double max_velocity;  // L-infinity norm of the discrete flow velocity
};

// Resample an input curve (endpoints within 1e-9 ell of the pins, discrete
// end curvature below 1e-3 of the maximum) onto M+1 uniform-arclength nodes.
FlowState init_flow(const curve::PlanarCurve& c,
                    const classify::ProblemParams& p, int M, double dt);

// One semi-implicit step: the fourth-order term is folded into a
// pentadiagonal solve (I + 2 dt D2 D2) delta = dt V on the node
// displacements, lower-order terms explicit, followed by tangential
// redistribution toward uniform edge lengths. Throws step_error when the
// solve degenerates or an edge collapses below 1e-8 ell.
FlowState step(const FlowState& s);

FlowDiagnostics diagnostics(const FlowState& s);

// Polyline view with chordal arclength, chord angles and discrete signed
// curvature; feeds the intersection counter and exporters.
curve::PlanarCurve to_curve(const FlowState& s);

struct TraceSample {
  double t;
  double energy;
  int intersections;
};

struct RunOptions {
  double dt_max = 1e-3;
  double sample_interval = 0.0;  // 0: t_end / 400
  int clean_steps_to_double = 50;
  double shape_tol = 1e-4;       // of ell, max node distance after reflection
  double velocity_tol = 1e-6;
  double energy_slack = 1e-8;    // of E(0), per accepted step
  // called at every sample time (trajectory export)
  std::function<void(const FlowState&, const FlowDiagnostics&)> observer;
};

struct FlowOutcome {
  std::string converged_to = "none";
  std::optional<double> embedded_since;  // empty: never within the horizon
  bool horizon_exceeded = false;
  bool dt_collapsed = false;
  std::vector<TraceSample> energy_trace;
  FlowState final_state;
};

// Integrate to t_end with adaptive dt: halve on step failure or an energy
// rise beyond the per-step slack, double after enough clean steps. Declares
// convergence at the first sample whose shape sits within shape_tol ell of a
// catalogue curve (up to reflection) with velocity below velocity_tol.
FlowOutcome run(FlowState s, double t_end,
                const std::vector<classify::CriticalPoint>& catalogue,
                const RunOptions& opts = {});

}  // namespace elastica::flow
