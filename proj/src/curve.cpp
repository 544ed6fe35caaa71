#include "elastica/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "elastica/elliptic.hpp"
#include "elastica/errors.hpp"

namespace elastica::curve {

using classify::CriticalPoint;
using classify::Family;
using elliptic::complete_e;
using elliptic::complete_k;
using elliptic::incomplete_e;
using elliptic::jacobi;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool nontrivial(const CriticalPoint& cp) {
  return cp.family != Family::segment;
}

// Pointwise closed form shared by arcs (sigma = -1), loops (sigma = +1) and
// the wavelike family. u = alpha s - K(q).
Sample eval_point(const CriticalPoint& cp, double kq, double eq, double s) {
  Sample out;
  out.s = s;
  const double u = cp.alpha * s - kq;
  const auto j = jacobi(u, cp.q);
  const double einc = incomplete_e(j.am, cp.q);
  if (cp.sigma < 0) {
    out.x = (2.0 * einc + 2.0 * eq - cp.alpha * s) / cp.alpha;
    out.theta = -2.0 * std::asin(cp.q * j.sn);
    out.k = -2.0 * cp.alpha * cp.q * j.cn;
  } else {
    out.x = (-2.0 * einc - 2.0 * eq + cp.alpha * s) / cp.alpha;
    out.theta = kPi + 2.0 * std::asin(cp.q * j.sn);
    out.k = 2.0 * cp.alpha * cp.q * j.cn;
  }
  out.y = 2.0 * cp.q * j.cn / cp.alpha;
  return out;
}

}  // namespace

PlanarCurve sample_curve(const CriticalPoint& cp, int N, bool reflect,
                         par::Exec exec) {
  if (N < 2) {
    throw domain_error("sample_curve: need N >= 2 samples, got N=" +
                       std::to_string(N));
  }
  PlanarCurve c;
  c.total_length = cp.length;
  c.samples.resize(static_cast<std::size_t>(N) + 1);
  if (!nontrivial(cp)) {
    par::for_index(
        c.samples.size(),
        [&](std::size_t i) {
          const double s = cp.length * static_cast<double>(i) / N;
          c.samples[i] = Sample{s, s, 0.0, 0.0, 0.0};
        },
        exec);
    return c;
  }
  const double kq = complete_k(cp.q);
  const double eq = complete_e(cp.q);
  par::for_index(
      c.samples.size(),
      [&](std::size_t i) {
        const double s = cp.length * static_cast<double>(i) / N;
        Sample p = eval_point(cp, kq, eq, s);
        if (reflect) {
          p.y = -p.y;
          p.theta = -p.theta;
          p.k = -p.k;
        }
        c.samples[i] = p;
      },
      exec);
  return c;
}

double curvature_at(const CriticalPoint& cp, double s) {
  if (!(s >= 0.0) || !(s <= cp.length * (1.0 + 1e-12))) {
    throw domain_error("curvature_at: s must lie in [0, length]");
  }
  if (!nontrivial(cp)) return 0.0;
  const double u = cp.alpha * s - complete_k(cp.q);
  return 2.0 * cp.sigma * cp.alpha * cp.q * jacobi(u, cp.q).cn;
}

double theta_at(const CriticalPoint& cp, double s) {
  if (!(s >= 0.0) || !(s <= cp.length * (1.0 + 1e-12))) {
    throw domain_error("theta_at: s must lie in [0, length]");
  }
  if (!nontrivial(cp)) return 0.0;
  const double u = cp.alpha * s - complete_k(cp.q);
  const double a = 2.0 * std::asin(cp.q * jacobi(u, cp.q).sn);
  return cp.sigma < 0 ? -a : kPi + a;
}

classify::CriticalPoint wavelike_point(double q, double ell) {
  const double q_star = moduli::constants().q_star;
  if (!(q > 0.0) || !(q < 1.0)) {
    throw domain_error("wavelike_point: q must lie in (0, 1), got q=" +
                       std::to_string(q));
  }
  if (std::fabs(q - q_star) < 1e-8) {
    throw singular_error(
        "wavelike_point: q within 1e-8 of q_star, the length diverges");
  }
  CriticalPoint cp;
  cp.n = 1;
  cp.q = q;
  const double d = 2.0 * complete_e(q) - complete_k(q);
  if (q < q_star) {
    cp.family = Family::shorter_arc;  // arc-form parametrization
    cp.alpha = 2.0 / ell * d;
    cp.sigma = -1;
  } else {
    cp.family = Family::loop;
    cp.alpha = -2.0 / ell * d;
    cp.sigma = +1;
  }
  cp.length = 2.0 * complete_k(q) / cp.alpha;
  return cp;
}

PlanarCurve wavelike_curve(double q, double ell, int N, par::Exec exec) {
  return sample_curve(wavelike_point(q, ell), N, false, exec);
}

PlanarCurve reconstruct_from_curvature(const std::function<double(double)>& k_fn,
                                       double length, double theta0, int N) {
  if (N < 100) {
    throw domain_error("reconstruct_from_curvature: need N >= 100 steps");
  }
  PlanarCurve c;
  c.total_length = length;
  c.samples.resize(static_cast<std::size_t>(N) + 1);
  const double h = length / N;
  double x = 0.0, y = 0.0, th = theta0;
  c.samples[0] = Sample{0.0, x, y, th, k_fn(0.0)};
  for (int i = 0; i < N; ++i) {
    const double s = h * i;
    // RK4 on (x, y, theta)
    const double k1t = k_fn(s);
    const double k1x = std::cos(th), k1y = std::sin(th);
    const double th2 = th + 0.5 * h * k1t;
    const double k2t = k_fn(s + 0.5 * h);
    const double k2x = std::cos(th2), k2y = std::sin(th2);
    const double th3 = th + 0.5 * h * k2t;
    const double k3t = k2t;
    const double k3x = std::cos(th3), k3y = std::sin(th3);
    const double th4 = th + h * k3t;
    const double k4t = k_fn(s + h);
    const double k4x = std::cos(th4), k4y = std::sin(th4);
    x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    th += h / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
    c.samples[static_cast<std::size_t>(i) + 1] =
        Sample{h * (i + 1), x, y, th, k_fn(h * (i + 1))};
  }
  return c;
}

namespace {

struct Seg {
  double x0, y0, x1, y1;
  double xmin, xmax, ymin, ymax;
};

int orient(double ax, double ay, double bx, double by, double cx, double cy) {
  const double v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return (v > 0.0) - (v < 0.0);
}

// Proper (transverse) crossing of two open segments; touching configurations
// count as grazing and are dropped.
bool proper_cross(const Seg& a, const Seg& b, double& px, double& py) {
  const int o1 = orient(a.x0, a.y0, a.x1, a.y1, b.x0, b.y0);
  const int o2 = orient(a.x0, a.y0, a.x1, a.y1, b.x1, b.y1);
  const int o3 = orient(b.x0, b.y0, b.x1, b.y1, a.x0, a.y0);
  const int o4 = orient(b.x0, b.y0, b.x1, b.y1, a.x1, a.y1);
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return false;
  if (o1 == o2 || o3 == o4) return false;
  const double rx = a.x1 - a.x0, ry = a.y1 - a.y0;
  const double sx = b.x1 - b.x0, sy = b.y1 - b.y0;
  const double denom = rx * sy - ry * sx;
  const double t = ((b.x0 - a.x0) * sy - (b.y0 - a.y0) * sx) / denom;
  px = a.x0 + t * rx;
  py = a.y0 + t * ry;
  return true;
}

}  // namespace

std::vector<Crossing> self_intersections(const PlanarCurve& c, par::Exec exec) {
  const std::size_t m = c.samples.size();
  if (m < 3) {
    throw domain_error("self_intersections: need at least 3 samples");
  }
  const std::size_t nseg = m - 1;
  std::vector<Seg> segs(nseg);
  for (std::size_t i = 0; i < nseg; ++i) {
    const auto& p = c.samples[i];
    const auto& q = c.samples[i + 1];
    segs[i] = Seg{p.x, p.y, q.x, q.y,
                  std::min(p.x, q.x), std::max(p.x, q.x),
                  std::min(p.y, q.y), std::max(p.y, q.y)};
  }
  const double graze = 1e-12 * std::max(c.total_length, 1e-300);
  std::vector<std::vector<Crossing>> hits(nseg);
  par::for_index(
      nseg,
      [&](std::size_t i) {
        const Seg& a = segs[i];
        for (std::size_t j = i + 2; j < nseg; ++j) {
          const Seg& b = segs[j];
          if (b.xmin > a.xmax || b.xmax < a.xmin || b.ymin > a.ymax ||
              b.ymax < a.ymin) {
            continue;
          }
          double px, py;
          if (!proper_cross(a, b, px, py)) continue;
          const auto near_vertex = [&](double vx, double vy) {
            return std::hypot(px - vx, py - vy) < graze;
          };
          if (near_vertex(a.x0, a.y0) || near_vertex(a.x1, a.y1) ||
              near_vertex(b.x0, b.y0) || near_vertex(b.x1, b.y1)) {
            continue;
          }
          hits[i].push_back(Crossing{i, j, px, py});
        }
      },
      exec);
  std::vector<Crossing> out;
  for (auto& h : hits) out.insert(out.end(), h.begin(), h.end());
  return out;
}

}  // namespace elastica::curve
