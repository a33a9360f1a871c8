// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "semicop/diagonal.hpp"

namespace semicop {

/// Kendall's tau, Spearman's rho, Spearman's footrule phi, Chatterjee's xi.
struct MeasureVector {
  double tau = 0.0;
  double rho = 0.0;
  double phi = 0.0;
  double xi = 0.0;
};

struct ConcordanceTriple {
  double tau = 0.0;
  double rho = 0.0;
  double phi = 0.0;
};

/// The three concordance measures of the semilinear copula of d, by
/// knot-aware adaptive quadrature to absolute tolerance tol each:
///
///   tau = 4 * int_0^1 delta(t)^2 / t dt - 1
///   rho = 12 * int_0^1 t * delta(t) dt - 3
///   phi = 6 * int_0^1 delta(t) dt - 2
///
/// The tau integrand extends continuously by 0 at t = 0.
ConcordanceTriple concordance(const Diagonal& d, double tol = 1e-10);

/// Chatterjee's xi in closed form:
///
///   xi = tau - 2 * int_0^1 (t*delta' - delta) * (2*delta - t*delta') / t dt
///
/// using the fixed right-derivative version of delta'. The integrand is
/// non-negative, so xi <= tau always.
double xi_closed(const Diagonal& d, double tol = 1e-10);

/// concordance() and xi_closed() in one vector.
MeasureVector measure_vector(const Diagonal& d, double tol = 1e-10);

enum class Family { ua, la, power, frechet, marshall_olkin };

/// Exact measure values for the parametric families. p2 is only read for
/// marshall_olkin (alpha = p1, beta = p2).
///
///   ua(a):        (1-a^2, 1-a^3, 1-a^2, 1-a^2)
///   la(a):        (a^4, a^4, a^3, a^4)
///   power(p):     ((2-p)/p, 3(2-p)/(p+2), 2(2-p)/(p+1), (2-p)^2/p)
///   frechet(a):   (a(a+2)/3, a, a, a^2)
///   marshall_olkin(a, b), m = min(a, b):
///                 (ab/(a-ab+b), 3ab/(2a-ab+2b), 2m/(3-m), 2a^2b/(3a+b-2ab))
///                 and all zero at a = b = 0.
MeasureVector analytic_measures(Family family, double p1, double p2 = 0.0);

}  // namespace semicop
