#include "elastica/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "elastica/errors.hpp"

namespace elastica::flow {

namespace {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }

Vec2 node(const FlowState& s, int i) { return {s.x[i], s.y[i]}; }

std::vector<double> edge_lengths(const FlowState& s) {
  const int m = s.segments();
  std::vector<double> h(m);
  for (int i = 0; i < m; ++i) {
    h[i] = std::hypot(s.x[i + 1] - s.x[i], s.y[i + 1] - s.y[i]);
  }
  return h;
}

// Discrete curvature vectors; ends are zero (Navier).
std::vector<Vec2> curvature_vectors(const FlowState& s,
                                    const std::vector<double>& h) {
  const int n = s.node_count();
  std::vector<Vec2> kappa(n);
  for (int i = 1; i + 1 < n; ++i) {
    const Vec2 fwd = (1.0 / h[i]) * (node(s, i + 1) - node(s, i));
    const Vec2 bwd = (1.0 / h[i - 1]) * (node(s, i) - node(s, i - 1));
    kappa[i] = (2.0 / (h[i - 1] + h[i])) * (fwd - bwd);
  }
  return kappa;
}

// Ghost margin for the velocity stencils: four five-point derivative passes
// reach eight cells past each end.
constexpr int kGhost = 8;

// Fourth-order five-point central first derivative on a ghost-extended
// array; output is shortened by two cells per side.
std::vector<Vec2> d_du_central(const std::vector<Vec2>& f, double du) {
  const int n = static_cast<int>(f.size());
  std::vector<Vec2> out(n - 4);
  for (int i = 2; i + 2 < n; ++i) {
    out[i - 2] = (1.0 / (12.0 * du)) *
                 (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
  }
  return out;
}

// Explicit velocity -2 grad_s^2 kappa - |kappa|^2 kappa + lambda kappa at the
// interior nodes. After redistribution the nodes are uniform in the chord
// parameter, so all arclength derivatives run through that parametrization
// with fourth-order central stencils; the Navier ends are handled by
// point-reflected ghost nodes P_{-j} = 2 P_0 - P_j (the smooth odd extension
// of a zero-curvature pinned end, exact for the stationary elasticae). The
// discrete equilibria then sit well within the 1e-4 ell convergence
// tolerance at M = 400.
std::vector<Vec2> velocity_field(const FlowState& s,
                                 const std::vector<double>& h) {
  const int n = s.node_count();
  double total = 0.0;
  for (double e : h) total += e;
  const double du = total / s.segments();

  // positions with point-reflected ghosts: indices shift by kGhost
  std::vector<Vec2> pos(n + 2 * kGhost);
  for (int i = 0; i < n; ++i) pos[kGhost + i] = node(s, i);
  const Vec2 p0 = node(s, 0);
  const Vec2 pm = node(s, n - 1);
  for (int j = 1; j <= kGhost; ++j) {
    pos[kGhost - j] = 2.0 * p0 - pos[kGhost + j];
    pos[kGhost + n - 1 + j] = 2.0 * pm - pos[kGhost + n - 1 - j];
  }

  // each pass trims two cells per side; track the remaining margin
  auto gamma_u = d_du_central(pos, du);  // margin kGhost - 2
  std::vector<double> speed(gamma_u.size());
  std::vector<Vec2> tang(gamma_u.size());
  for (std::size_t i = 0; i < gamma_u.size(); ++i) {
    speed[i] = norm(gamma_u[i]);
    tang[i] = (1.0 / speed[i]) * gamma_u[i];
  }
  auto tang_u = d_du_central(tang, du);  // margin kGhost - 4
  std::vector<Vec2> kappa(tang_u.size());
  for (std::size_t i = 0; i < tang_u.size(); ++i) {
    const std::size_t j = i + 2;  // index into speed/tang
    Vec2 k = (1.0 / speed[j]) * tang_u[i];
    kappa[i] = k - dot(k, tang[j]) * tang[j];
  }
  // grad_s f = (f_u / |gamma_u|) projected off the tangent; consumes two
  // cells and shifts the speed/tang lookup accordingly
  auto grad_s = [&](const std::vector<Vec2>& f, int margin) {
    auto fu = d_du_central(f, du);
    std::vector<Vec2> out(fu.size());
    const int off = kGhost - margin;  // speed/tang index of f[0] was off - 2
    for (std::size_t i = 0; i < fu.size(); ++i) {
      const std::size_t j = i + off;
      Vec2 g = (1.0 / speed[j]) * fu[i];
      out[i] = g - dot(g, tang[j]) * tang[j];
    }
    return out;
  };
  const auto w1 = grad_s(kappa, kGhost - 4);  // margin kGhost - 6
  const auto w2 = grad_s(w1, kGhost - 6);     // margin 0: exactly nodes 0..n-1

  std::vector<Vec2> v(n);
  for (int i = 1; i + 1 < n; ++i) {
    const Vec2 ki = kappa[i + (kGhost - 4)];
    const double k2 = dot(ki, ki);
    v[i] = -2.0 * w2[i] + (s.lambda - k2) * ki;
  }
  return v;
}

// Pentadiagonal system rows over the interior unknowns, as five bands.
struct Penta {
  std::vector<double> c2, c1, d, u1, u2;
  explicit Penta(int n)
      : c2(n, 0.0), c1(n, 0.0), d(n, 0.0), u1(n, 0.0), u2(n, 0.0) {}
};

// Solve in place for two right-hand sides; no pivoting (the matrix is
// I + 2 dt D2 D2, strongly diagonally dominant on quasi-uniform meshes).
void solve_penta(Penta& a, std::vector<double>& bx, std::vector<double>& by) {
  const int n = static_cast<int>(a.d.size());
  for (int k = 0; k < n; ++k) {
    const double piv = a.d[k];
    if (!(std::fabs(piv) > 1e-300)) {
      throw step_error("step: singular pentadiagonal system");
    }
    if (k + 1 < n) {
      const double m1 = a.c1[k + 1] / piv;
      a.d[k + 1] -= m1 * a.u1[k];
      a.u1[k + 1] -= m1 * a.u2[k];
      bx[k + 1] -= m1 * bx[k];
      by[k + 1] -= m1 * by[k];
    }
    if (k + 2 < n) {
      const double m2 = a.c2[k + 2] / piv;
      a.c1[k + 2] -= m2 * a.u1[k];
      a.d[k + 2] -= m2 * a.u2[k];
      bx[k + 2] -= m2 * bx[k];
      by[k + 2] -= m2 * by[k];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double sx = bx[i], sy = by[i];
    if (i + 1 < n) {
      sx -= a.u1[i] * bx[i + 1];
      sy -= a.u1[i] * by[i + 1];
    }
    if (i + 2 < n) {
      sx -= a.u2[i] * bx[i + 2];
      sy -= a.u2[i] * by[i + 2];
    }
    bx[i] = sx / a.d[i];
    by[i] = sy / a.d[i];
  }
}

// Uniform-arclength resampling along the polyline through local six-point
// Lagrange interpolation in the cumulative chord parameter; changes the
// parametrization, not the shape (to interpolation order). The high order
// matters: redistribution runs every step, so its systematic bias must stay
// far below the flow's own displacements.
void resample_uniform(const std::vector<Vec2>& pts, int target_segments,
                      std::vector<double>& out_x, std::vector<double>& out_y) {
  const int n = static_cast<int>(pts.size());
  std::vector<double> u(n, 0.0);
  for (int i = 1; i < n; ++i) u[i] = u[i - 1] + norm(pts[i] - pts[i - 1]);
  const double total = u[n - 1];
  out_x.assign(target_segments + 1, 0.0);
  out_y.assign(target_segments + 1, 0.0);
  out_x[0] = pts[0].x;
  out_y[0] = pts[0].y;
  out_x[target_segments] = pts[n - 1].x;
  out_y[target_segments] = pts[n - 1].y;
  const int width = std::min(6, n);
  int seg = 0;
  for (int j = 1; j < target_segments; ++j) {
    const double tj = total * j / target_segments;
    while (seg + 2 < n && u[seg + 1] < tj) ++seg;
    int lo = std::clamp(seg - (width - 2) / 2, 0, n - width);
    Vec2 p;
    for (int a = lo; a < lo + width; ++a) {
      double w = 1.0;
      for (int b = lo; b < lo + width; ++b) {
        if (b != a) w *= (tj - u[b]) / (u[a] - u[b]);
      }
      p = p + w * pts[a];
    }
    out_x[j] = p.x;
    out_y[j] = p.y;
  }
}

// B + lambda L from the discrete curvature; the cheap per-step dissipation
// metric (full diagnostics with the O(M^2) crossing count run only at sample
// times).
double discrete_energy_of(const FlowState& s) {
  const auto h = edge_lengths(s);
  const auto kappa = curvature_vectors(s, h);
  double length = 0.0;
  for (double e : h) length += e;
  double bending = 0.0;
  for (int i = 1; i + 1 < s.node_count(); ++i) {
    bending += dot(kappa[i], kappa[i]) * 0.5 * (h[i - 1] + h[i]);
  }
  return bending + s.lambda * length;
}

double max_velocity_of(const FlowState& s) {
  const auto h = edge_lengths(s);
  const auto v = velocity_field(s, h);
  double worst = 0.0;
  for (const auto& vi : v) worst = std::max(worst, norm(vi));
  return worst;
}

// Three-point circumcircle curvature magnitude, used by the init
// compatibility check.
double three_point_curvature(Vec2 a, Vec2 b, Vec2 c) {
  const double area2 = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  const double la = norm(b - a), lb = norm(c - b), lc = norm(c - a);
  const double denom = la * lb * lc;
  return denom > 0.0 ? 2.0 * std::fabs(area2) / denom : 0.0;
}

}  // namespace

FlowState init_flow(const curve::PlanarCurve& c,
                    const classify::ProblemParams& p, int M, double dt) {
  if (M < 16) {
    throw resolution_error("init_flow: need M >= 16 segments, got M=" +
                           std::to_string(M));
  }
  if (!(dt > 0.0)) throw domain_error("init_flow: dt must be positive");
  if (c.samples.size() < 3) {
    throw domain_error("init_flow: input curve needs at least 3 samples");
  }
  const auto& front = c.samples.front();
  const auto& back = c.samples.back();
  if (std::hypot(front.x, front.y) > 1e-9 * p.ell ||
      std::hypot(back.x - p.ell, back.y) > 1e-9 * p.ell) {
    throw boundary_error(
        "init_flow: curve endpoints must sit within 1e-9 ell of (0,0) and "
        "(ell,0)");
  }
  std::vector<Vec2> pts(c.samples.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    pts[i] = {c.samples[i].x, c.samples[i].y};
  }
  // Navier compatibility check on the input resolution
  double kmax = 0.0;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    kmax = std::max(kmax, three_point_curvature(pts[i - 1], pts[i], pts[i + 1]));
  }
  if (kmax > 1e-12) {
    const double kend = std::max(
        three_point_curvature(pts[0], pts[1], pts[2]),
        three_point_curvature(pts[pts.size() - 3], pts[pts.size() - 2],
                              pts[pts.size() - 1]));
    if (kend > 1e-3 * kmax) {
      throw boundary_error(
          "init_flow: discrete curvature at the ends exceeds 1e-3 of the "
          "maximum; the datum is not Navier-compatible at this resolution");
    }
  }
  FlowState s;
  s.lambda = p.lambda;
  s.ell = p.ell;
  s.dt = dt;
  s.time = 0.0;
  resample_uniform(pts, M, s.x, s.y);
  // second pass over the coarse polyline itself, so the node distribution is
  // already the fixed point of the per-step redistribution
  std::vector<Vec2> coarse(M + 1);
  for (int i = 0; i <= M; ++i) coarse[i] = {s.x[i], s.y[i]};
  resample_uniform(coarse, M, s.x, s.y);
  s.x[0] = 0.0;
  s.y[0] = 0.0;
  s.x[M] = p.ell;
  s.y[M] = 0.0;
  return s;
}

FlowState step(const FlowState& s) {
  const int nnode = s.node_count();
  const int m = s.segments();
  const auto h = edge_lengths(s);
  const double hmin = *std::min_element(h.begin(), h.end());
  if (hmin < 1e-8 * s.ell) {
    throw step_error("step: edge collapsed below 1e-8 ell");
  }
  const auto v = velocity_field(s, h);

  // second-difference rows (p_j, q_j, r_j) acting on (u_{j-1}, u_j, u_{j+1})
  std::vector<double> pr(nnode, 0.0), qr(nnode, 0.0), rr(nnode, 0.0);
  for (int j = 1; j + 1 < nnode; ++j) {
    pr[j] = 2.0 / ((h[j - 1] + h[j]) * h[j - 1]);
    rr[j] = 2.0 / ((h[j - 1] + h[j]) * h[j]);
    qr[j] = -(pr[j] + rr[j]);
  }

  const int n = m - 1;  // interior unknowns, nodes 1..m-1
  Penta a(n);
  const double c = 2.0 * s.dt;
  for (int i = 1; i <= n; ++i) {
    // row i of D2 D2: p_i * D2row(i-1) + q_i * D2row(i) + r_i * D2row(i+1),
    // where rows 0 and M of D2 are zero (kappa = 0 at the Navier ends)
    double row[5] = {0.0, 0.0, 0.0, 0.0, 0.0};  // columns i-2 .. i+2
    auto add = [&](int j, double w) {
      if (w == 0.0 || j == 0 || j == nnode - 1) return;
      row[j - 1 - (i - 2)] += w * pr[j];
      row[j - (i - 2)] += w * qr[j];
      row[j + 1 - (i - 2)] += w * rr[j];
    };
    add(i - 1, pr[i]);
    add(i, qr[i]);
    add(i + 1, rr[i]);
    const int k = i - 1;  // unknown index
    // boundary columns (nodes 0 and M) carry delta = 0 and drop out
    if (i - 2 >= 1) a.c2[k] = c * row[0];
    if (i - 1 >= 1) a.c1[k] = c * row[1];
    a.d[k] = 1.0 + c * row[2];
    if (i + 1 <= n) a.u1[k] = c * row[3];
    if (i + 2 <= n) a.u2[k] = c * row[4];
  }

  std::vector<double> bx(n), by(n);
  for (int i = 1; i <= n; ++i) {
    bx[i - 1] = s.dt * v[i].x;
    by[i - 1] = s.dt * v[i].y;
  }
  solve_penta(a, bx, by);

  std::vector<Vec2> moved(nnode);
  moved[0] = node(s, 0);
  moved[nnode - 1] = node(s, nnode - 1);
  for (int i = 1; i < nnode - 1; ++i) {
    moved[i] = node(s, i) + Vec2{bx[i - 1], by[i - 1]};
  }
  for (int i = 0; i + 1 < nnode; ++i) {
    if (norm(moved[i + 1] - moved[i]) < 1e-8 * s.ell) {
      throw step_error("step: edge collapsed below 1e-8 ell after update");
    }
  }

  FlowState out = s;
  resample_uniform(moved, m, out.x, out.y);
  out.x[0] = 0.0;
  out.y[0] = 0.0;
  out.x[m] = s.ell;
  out.y[m] = 0.0;
  out.time = s.time + s.dt;
  return out;
}

curve::PlanarCurve to_curve(const FlowState& s) {
  const int n = s.node_count();
  const auto h = edge_lengths(s);
  const auto kappa = curvature_vectors(s, h);
  curve::PlanarCurve c;
  c.samples.resize(n);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) acc += h[i - 1];
    double theta;
    if (i == 0) {
      theta = std::atan2(s.y[1] - s.y[0], s.x[1] - s.x[0]);
    } else if (i == n - 1) {
      theta = std::atan2(s.y[i] - s.y[i - 1], s.x[i] - s.x[i - 1]);
    } else {
      theta = std::atan2(s.y[i + 1] - s.y[i - 1], s.x[i + 1] - s.x[i - 1]);
    }
    double k = 0.0;
    if (i > 0 && i + 1 < n) {
      const double cross = (s.x[i] - s.x[i - 1]) * (s.y[i + 1] - s.y[i]) -
                           (s.y[i] - s.y[i - 1]) * (s.x[i + 1] - s.x[i]);
      k = (cross >= 0.0 ? 1.0 : -1.0) * std::hypot(kappa[i].x, kappa[i].y);
    }
    c.samples[i] = curve::Sample{acc, s.x[i], s.y[i], theta, k};
  }
  c.total_length = acc;
  return c;
}

FlowDiagnostics diagnostics(const FlowState& s) {
  const auto h = edge_lengths(s);
  const auto kappa = curvature_vectors(s, h);
  FlowDiagnostics d{};
  d.length = 0.0;
  for (double e : h) d.length += e;
  d.bending = 0.0;
  for (int i = 1; i + 1 < s.node_count(); ++i) {
    d.bending += dot(kappa[i], kappa[i]) * 0.5 * (h[i - 1] + h[i]);
  }
  d.energy = d.bending + s.lambda * d.length;
  d.min_edge = *std::min_element(h.begin(), h.end());
  d.max_edge = *std::max_element(h.begin(), h.end());
  d.intersections =
      static_cast<int>(curve::self_intersections(to_curve(s)).size());
  d.max_velocity = max_velocity_of(s);
  return d;
}

namespace {

// Max node distance between the state and the catalogue curve discretized
// the same way the state is (uniform chord parameter over M segments),
// minimized over the reflection pair.
double shape_distance(const FlowState& s, const classify::CriticalPoint& cp) {
  const int m = s.segments();
  std::vector<double> rx, ry;
  try {
    const auto fine = curve::sample_curve(cp, 2048);
    std::vector<Vec2> pts(fine.samples.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      pts[i] = {fine.samples[i].x, fine.samples[i].y};
    }
    resample_uniform(pts, m, rx, ry);
  } catch (const std::exception&) {
    return std::numeric_limits<double>::infinity();
  }
  double direct = 0.0, mirrored = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double dx = s.x[i] - rx[i];
    direct = std::max(direct, std::hypot(dx, s.y[i] - ry[i]));
    mirrored = std::max(mirrored, std::hypot(dx, s.y[i] + ry[i]));
  }
  return std::min(direct, mirrored);
}

}  // namespace

FlowOutcome run(FlowState s, double t_end,
                const std::vector<classify::CriticalPoint>& catalogue,
                const RunOptions& opts) {
  if (!(t_end > 0.0)) throw domain_error("run: t_end must be positive");
  FlowOutcome out;
  const double interval =
      opts.sample_interval > 0.0 ? opts.sample_interval : t_end / 400.0;

  double e_prev = discrete_energy_of(s);
  const double slack = opts.energy_slack * e_prev;
  double next_sample = 0.0;
  int clean = 0;
  // node speed of the last accepted step; the implicit solve filters the
  // stencil-level roundoff out of this rate, unlike the raw velocity field
  double step_rate = std::numeric_limits<double>::infinity();

  auto sample = [&](const FlowState& state) {
    const auto d = diagnostics(state);
    out.energy_trace.push_back({state.time, d.energy, d.intersections});
    if (d.intersections == 0) {
      if (!out.embedded_since) out.embedded_since = state.time;
    } else {
      out.embedded_since.reset();
    }
    if (opts.observer) opts.observer(state, d);
    if (step_rate < opts.velocity_tol) {
      for (const auto& cp : catalogue) {
        if (shape_distance(state, cp) < opts.shape_tol * state.ell) {
          out.converged_to = cp.id();
          break;
        }
      }
    }
  };

  sample(s);
  while (s.time < t_end && out.converged_to == "none") {
    FlowState next;
    bool ok = true;
    try {
      next = step(s);
      const double e_next = discrete_energy_of(next);
      if (e_next > e_prev + slack) {
        ok = false;
      } else {
        e_prev = e_next;
        double moved = 0.0;
        for (int i = 0; i < s.node_count(); ++i) {
          moved = std::max(moved, std::hypot(next.x[i] - s.x[i],
                                             next.y[i] - s.y[i]));
        }
        step_rate = moved / s.dt;
      }
    } catch (const step_error&) {
      ok = false;
    }
    if (!ok) {
      s.dt *= 0.5;
      clean = 0;
      if (s.dt < 1e-15) {
        out.dt_collapsed = true;
        break;
      }
      continue;
    }
    s = next;
    if (++clean >= opts.clean_steps_to_double && s.dt < opts.dt_max) {
      s.dt = std::min(2.0 * s.dt, opts.dt_max);
      clean = 0;
    }
    if (s.time >= next_sample) {
      sample(s);
      next_sample += interval;
    }
  }
  if (out.converged_to == "none" && s.time >= t_end) {
    out.horizon_exceeded = true;
  }
  out.final_state = std::move(s);
  return out;
}

}  // namespace elastica::flow
