#include "elastica/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elastica/elliptic.hpp"

namespace elastica::classify {

using elliptic::complete_e;
using elliptic::complete_k;

ProblemParams::ProblemParams(double lambda_, double ell_)
    : lambda(lambda_), ell(ell_) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw domain_error("ProblemParams: penalty lambda must be positive");
  }
  if (!(ell > 0.0) || !std::isfinite(ell)) {
    throw domain_error("ProblemParams: gap ell must be positive");
  }
}

const char* family_name(Family f) {
  switch (f) {
    case Family::segment: return "segment";
    case Family::shorter_arc: return "sarc";
    case Family::longer_arc: return "larc";
    case Family::loop: return "loop";
  }
  return "?";
}

std::string CriticalPoint::id() const {
  if (family == Family::segment) return "segment";
  return std::string(family_name(family)) + ":" + std::to_string(n);
}

namespace {

// lambda ell^2 / n^2 equal to lambda_hat within 1e-12 relative: the two arc
// branches coincide at q_hat.
bool at_merge_level(double mu, int n) {
  const double lh = moduli::constants().lambda_hat;
  return std::fabs(mu / (n * n) - lh) <= 1e-12 * lh;
}

}  // namespace

int mode_floor(const ProblemParams& p) {
  const double ratio = p.mu() / moduli::constants().lambda_hat;
  const double root = std::sqrt(ratio);
  int n = static_cast<int>(std::ceil(root));
  // exact-square ratios must not be pushed up by rounding noise
  if (n >= 2 && at_merge_level(p.mu(), n - 1)) n -= 1;
  return std::max(n, 1);
}

CriticalPoint build_critical_point(const ProblemParams& p, Family family,
                                   int n) {
  CriticalPoint cp;
  cp.family = family;
  if (family == Family::segment) {
    cp.n = 0;
    cp.q = std::numeric_limits<double>::quiet_NaN();
    cp.alpha = std::numeric_limits<double>::quiet_NaN();
    cp.length = p.ell;
    cp.sigma = 0;
    return cp;
  }
  if (n < 1) throw domain_error("build_critical_point: mode n must be >= 1");
  cp.n = n;
  const double c = p.mu() / (static_cast<double>(n) * n);
  if (family == Family::shorter_arc || family == Family::longer_arc) {
    const int nmin = mode_floor(p);
    if (n < nmin) {
      throw infeasible_error(
          "build_critical_point: arcs require n >= n_{lambda,ell} = " +
          std::to_string(nmin) + ", got n = " + std::to_string(n));
    }
    cp.merged = at_merge_level(p.mu(), n);
    const auto branch = family == Family::shorter_arc ? moduli::Branch::b1
                                                      : moduli::Branch::b2;
    cp.q = moduli::invert_g(c, branch).q;
    cp.alpha = 2.0 * n / p.ell * (2.0 * complete_e(cp.q) - complete_k(cp.q));
    cp.sigma = -1;
  } else {
    cp.q = moduli::invert_g(c, moduli::Branch::b3).q;
    cp.alpha = 2.0 * n / p.ell * (complete_k(cp.q) - 2.0 * complete_e(cp.q));
    cp.sigma = +1;
  }
  cp.length = 2.0 * n * complete_k(cp.q) / cp.alpha;
  return cp;
}

namespace {

// E_lambda per the closed form (8 n^2 / ell) |2E - K| ((4q^2 - 3) K + 2 E);
// used here only for the enumeration sort order (energy_ledger owns the
// full breakdown).
double sort_energy(const ProblemParams& p, const CriticalPoint& cp) {
  if (cp.family == Family::segment) return p.lambda * p.ell;
  const double kq = complete_k(cp.q);
  const double eq = complete_e(cp.q);
  return 8.0 * cp.n * cp.n / p.ell * std::fabs(2.0 * eq - kq) *
         ((4.0 * cp.q * cp.q - 3.0) * kq + 2.0 * eq);
}

}  // namespace

std::vector<CriticalPoint> enumerate_critical_points(const ProblemParams& p,
                                                     int n_max) {
  if (n_max < 1) {
    throw domain_error("enumerate_critical_points: n_max must be >= 1");
  }
  std::vector<CriticalPoint> out;
  out.push_back(build_critical_point(p, Family::segment, 0));
  const int nmin = mode_floor(p);
  for (int n = std::max(1, nmin); n <= n_max; ++n) {
    if (at_merge_level(p.mu(), n)) {
      out.push_back(build_critical_point(p, Family::longer_arc, n));
    } else {
      out.push_back(build_critical_point(p, Family::shorter_arc, n));
      out.push_back(build_critical_point(p, Family::longer_arc, n));
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(build_critical_point(p, Family::loop, n));
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const CriticalPoint& a, const CriticalPoint& b) {
                     return sort_energy(p, a) < sort_energy(p, b);
                   });
  return out;
}

}  // namespace elastica::classify
