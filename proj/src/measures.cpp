// SPDX-License-Identifier: Apache-2.0
#include "semicop/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "semicop/quadrature.hpp"

namespace semicop {
namespace {

void check_param(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

ConcordanceTriple concordance(const Diagonal& d, double tol) {
  const auto& knots = d.knots();
  // Kronrod nodes are interior, so the tau integrand never sees t = 0;
  // delta^2/t <= t keeps it bounded anyway.
  const double i_tau =
      integrate([&d](double t) { return d.value(t) * d.value(t) / t; }, knots, tol / 4.0);
  const double i_rho = integrate([&d](double t) { return t * d.value(t); }, knots, tol / 12.0);
  const double i_phi = integrate([&d](double t) { return d.value(t); }, knots, tol / 6.0);
  return {4.0 * i_tau - 1.0, 12.0 * i_rho - 3.0, 6.0 * i_phi - 2.0};
}

double xi_closed(const Diagonal& d, double tol) {
  const auto& knots = d.knots();
  const double i_tau =
      integrate([&d](double t) { return d.value(t) * d.value(t) / t; }, knots, tol / 8.0);
  // Both factors of the defect lie in [0, delta], so the integrand is
  // bounded by t.
  const double defect = integrate(
      [&d](double t) {
        const double v = d.value(t);
        const double td = t * d.derivative(t);
        return (td - v) * (2.0 * v - td) / t;
      },
      knots, tol / 4.0);
  return 4.0 * i_tau - 1.0 - 2.0 * defect;
}

MeasureVector measure_vector(const Diagonal& d, double tol) {
  const ConcordanceTriple c = concordance(d, tol);
  return {c.tau, c.rho, c.phi, xi_closed(d, tol)};
}

MeasureVector analytic_measures(Family family, double p1, double p2) {
  switch (family) {
    case Family::ua:
      check_param(p1 >= 0.0 && p1 <= 1.0, "analytic_measures: ua needs a in [0, 1]");
      return {1.0 - p1 * p1, 1.0 - p1 * p1 * p1, 1.0 - p1 * p1, 1.0 - p1 * p1};
    case Family::la: {
      check_param(p1 >= 0.0 && p1 <= 1.0, "analytic_measures: la needs a in [0, 1]");
      const double a3 = p1 * p1 * p1, a4 = a3 * p1;
      return {a4, a4, a3, a4};
    }
    case Family::power: {
      check_param(p1 >= 1.0 && p1 <= 2.0, "analytic_measures: power needs p in [1, 2]");
      const double q = 2.0 - p1;
      return {q / p1, 3.0 * q / (p1 + 2.0), 2.0 * q / (p1 + 1.0), q * q / p1};
    }
    case Family::frechet:
      check_param(p1 >= 0.0 && p1 <= 1.0, "analytic_measures: frechet needs alpha in [0, 1]");
      return {p1 * (p1 + 2.0) / 3.0, p1, p1, p1 * p1};
    case Family::marshall_olkin: {
      check_param(p1 >= 0.0 && p1 <= 1.0 && p2 >= 0.0 && p2 <= 1.0,
                  "analytic_measures: marshall_olkin needs alpha, beta in [0, 1]");
      if (p1 == 0.0 && p2 == 0.0) return {0.0, 0.0, 0.0, 0.0};
      const double a = p1, b = p2, m = std::min(a, b);
      return {a * b / (a - a * b + b), 3.0 * a * b / (2.0 * a - a * b + 2.0 * b),
              2.0 * m / (3.0 - m), 2.0 * a * a * b / (3.0 * a + b - 2.0 * a * b)};
    }
  }
  throw std::logic_error("analytic_measures: unknown family");
}

}  // namespace semicop
