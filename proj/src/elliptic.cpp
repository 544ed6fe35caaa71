#include "elastica/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace elastica::elliptic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxAgm = 32;

void require_modulus(double q, double hi, const char* who) {
  if (!(q >= 0.0) || !(q <= hi)) {
    throw domain_error(std::string(who) +
                       ": modulus q must lie in [0, " +
                       (hi == 1.0 ? std::string("1]") : std::string("1)")) +
                       ", got q=" + std::to_string(q) +
                       " (note: q is the modulus, not the parameter m=q^2)");
  }
}

// Shared AGM state: a_n, b_n, c_n with a_0=1, b_0=sqrt(1-q^2), c_0=q.
struct Agm {
  double a[kMaxAgm + 1];
  double c[kMaxAgm + 1];
  int n;           // index of the last iterate
  double c2sum;    // sum_{i>=0} 2^{i-1} c_i^2
};

Agm run_agm(double q) {
  Agm g;
  double a = 1.0;
  double b = std::sqrt((1.0 - q) * (1.0 + q));
  double c = q;
  g.a[0] = a;
  g.c[0] = c;
  g.c2sum = 0.5 * c * c;
  double pow2 = 1.0;
  int i = 0;
  while (i < kMaxAgm && std::fabs(a - b) > 1e-15 * a) {
    const double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    ++i;
    g.a[i] = a;
    g.c[i] = c;
    g.c2sum += pow2 * c * c;
    pow2 *= 2.0;
  }
  g.n = i;
  return g;
}

}  // namespace

Modulus::Modulus(double q) : q_(q) {
  if (!(q >= 0.0) || !(q < 1.0)) {
    throw domain_error("Modulus: q must lie in [0, 1), got q=" + std::to_string(q));
  }
}

double complete_k(double q) {
  require_modulus(q, max_modulus, "complete_k");
  const Agm g = run_agm(q);
  return kPi / (2.0 * g.a[g.n]);
}

double complete_e(double q) {
  require_modulus(q, 1.0, "complete_e");
  if (q == 1.0) return 1.0;
  const Agm g = run_agm(q);
  const double k = kPi / (2.0 * g.a[g.n]);
  return k * (1.0 - g.c2sum);
}

namespace {

// Ascending phase iteration for the incomplete integrals, x in [-pi/2, pi/2].
// phi_{n+1} solves tan(phi_{n+1} - phi_n) = (b_n/a_n) tan(phi_n) with
// phi_{n+1} ~ 2 phi_n; then F = phi_N / (2^N a_N) and
// E = F (1 - sum 2^{i-1} c_i^2) + sum_{i>=1} c_i sin(phi_i).
struct IncompletePair {
  double f;
  double e;
};

IncompletePair incomplete_reduced(double x, double q) {
  if (x == 0.0) return {0.0, 0.0};
  if (q == 0.0) return {x, x};
  double a = 1.0;
  double b = std::sqrt((1.0 - q) * (1.0 + q));
  double c = q;
  double phi = x;
  double c2sum = 0.5 * c * c;
  double csin = 0.0;
  double pow2 = 1.0;
  int i = 0;
  while (i < kMaxAgm && std::fabs(a - b) > 1e-15 * a) {
    const double psi = std::atan2(b * std::sin(phi), a * std::cos(phi));
    // pick the representative with phi_{n+1} closest to 2 phi_n
    phi = phi + psi + kPi * std::round((phi - psi) / kPi);
    const double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    ++i;
    c2sum += pow2 * c * c;
    csin += c * std::sin(phi);
    pow2 *= 2.0;
  }
  const double f = phi / (pow2 * a);
  const double e = f * (1.0 - c2sum) + csin;
  return {f, e};
}

}  // namespace

double incomplete_f(double x, double q) {
  require_modulus(q, max_modulus, "incomplete_f");
  const double m = std::round(x / kPi);
  const double x0 = x - m * kPi;
  double base = 0.0;
  if (m != 0.0) base = 2.0 * m * complete_k(q);
  return base + incomplete_reduced(x0, q).f;
}

double incomplete_e(double x, double q) {
  require_modulus(q, max_modulus, "incomplete_e");
  const double m = std::round(x / kPi);
  const double x0 = x - m * kPi;
  double base = 0.0;
  if (m != 0.0) base = 2.0 * m * complete_e(q);
  return base + incomplete_reduced(x0, q).e;
}

namespace {

// am(w, q) for w in [0, K], by the descending phase recurrence
// phi_{n-1} = (phi_n + asin((c_n/a_n) sin(phi_n))) / 2 from phi_N = 2^N a_N w.
double amplitude_reduced(double w, double q) {
  if (w == 0.0) return 0.0;
  const Agm g = run_agm(q);
  double pow2 = 1.0;
  for (int i = 0; i < g.n; ++i) pow2 *= 2.0;
  double phi = pow2 * g.a[g.n] * w;
  for (int i = g.n; i >= 1; --i) {
    const double r = std::clamp(g.c[i] / g.a[i] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(r));
  }
  return phi;
}

}  // namespace

JacobiTriple jacobi(double u, double q) {
  require_modulus(q, max_modulus, "jacobi");
  double am;
  if (q == 0.0) {
    am = u;
  } else {
    const double k = complete_k(q);
    // am(u + 2K) = am(u) + pi, am odd; reduce to [0, K]
    const double j = std::round(u / (2.0 * k));
    double w = u - 2.0 * j * k;
    double sign = 1.0;
    if (w < 0.0) {
      sign = -1.0;
      w = -w;
    }
    w = std::min(w, k);
    am = j * kPi + sign * amplitude_reduced(w, q);
  }
  JacobiTriple t;
  t.am = am;
  t.sn = std::sin(am);
  t.cn = std::cos(am);
  t.dn = std::sqrt(std::max(0.0, 1.0 - q * q * t.sn * t.sn));
  return t;
}

}  // namespace elastica::elliptic
