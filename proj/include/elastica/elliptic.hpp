#pragma once

#include "elastica/errors.hpp"

namespace elastica::elliptic {

// Convention used throughout this library: q is the MODULUS, not the
// parameter m = q^2. K(0.5) here equals K(m = 0.25) in parameter notation.

// Largest modulus accepted by K, the incomplete integrals and the Jacobi
// functions; K diverges as q -> 1 and everything the library needs stays
// bounded away from it.
inline constexpr double max_modulus = 1.0 - 1e-12;

// Validated modulus in [0, 1).
class Modulus {
 public:
  explicit Modulus(double q);
  double value() const { return q_; }

 private:
  double q_;
};

// am, sn, cn, dn at a common argument. Invariants (machine tolerance):
// sn^2 + cn^2 = 1, dn^2 + q^2 sn^2 = 1, sn = sin(am), cn = cos(am).
struct JacobiTriple {
  double am;
  double sn;
  double cn;
  double dn;
};

// Complete integrals, by AGM iteration (terminates when |a_n - b_n| <
// 1e-15 a_n). K: q in [0, max_modulus]. E: q in [0, 1], with E(1) = 1.
double complete_k(double q);
double complete_e(double q);

// Incomplete integrals F(x,q), E(x,q) of the first and second kind for any
// real x, extended by quasi-periodicity F(x+pi) = F(x) + 2K(q),
// E(x+pi) = E(x) + 2E(q). Computed by the ascending-Landen phase iteration
// after reduction of x to [-pi/2, pi/2].
double incomplete_f(double x, double q);
double incomplete_e(double x, double q);

// Jacobi amplitude and elliptic functions for any real u, via the
// descending-Landen (AGM phase) recurrence after quarter-period reduction.
// am is the inverse of incomplete_f in x.
JacobiTriple jacobi(double u, double q);

inline JacobiTriple jacobi(double u, Modulus q) { return jacobi(u, q.value()); }
inline double complete_k(Modulus q) { return complete_k(q.value()); }
inline double complete_e(Modulus q) { return complete_e(q.value()); }

}  // namespace elastica::elliptic
