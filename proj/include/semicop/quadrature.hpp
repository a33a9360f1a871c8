// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace semicop {

/// Thrown when adaptive quadrature cannot reach the requested tolerance.
/// Carries the best estimate computed so far and its error estimate.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_(best_estimate), err_(error_estimate) {}
  double best_estimate() const { return best_; }
  double error_estimate() const { return err_; }

 private:
  double best_;
  double err_;
};

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b], splitting
/// the worst panel first until the accumulated error estimate drops below
/// max(abs_tol, rel_tol * |integral|). All Kronrod nodes are interior, so f
/// is never evaluated at panel endpoints.
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 double rel_tol = 0.0);

/// Same, but with fixed panel boundaries at the given knots (ascending,
/// deduplicated internally). Integrands only need to be smooth between
/// knots. The error budget is split across panels by width.
double integrate(const std::function<double(double)>& f, std::span<const double> knots,
                 double abs_tol, double rel_tol = 0.0);

}  // namespace semicop
