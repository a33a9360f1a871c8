// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "semicop/diagonal.hpp"

namespace semicop {

/// Diagonal of the Markov (*) product S^T * S of the semilinear copula of a
/// base diagonal:
///
///   delta*(t) = delta(t)^2 / t  +  t^2 * T(t),
///   T(t) = int_t^1 ((delta(s)/s)')^2 ds.
///
/// delta* is again admissible, so measures of the product copula come for
/// free; in particular phi(delta*) recovers Chatterjee's xi of the base.
///
/// For power splines the tail T has an antiderivative per piece and is
/// evaluated exactly. For other kinds T is cached at a refined grid during
/// construction and completed by a short fresh quadrature per evaluation.
/// The cache is immutable after construction; instances are safe to share
/// across threads.
class MarkovDiagonal {
 public:
  explicit MarkovDiagonal(Diagonal base, double tol = 1e-10);

  /// delta*(t). Throws std::domain_error outside [0, 1].
  double value(double t) const;

  /// Derivative of delta*, same one-sided convention as Diagonal:
  ///   (2 t delta delta' - delta^2 - (t delta' - delta)^2) / t^2 + 2 t T(t),
  /// with delta*'(0) = delta'(0)^2.
  double derivative(double t) const;

  /// Smoothness breakpoints of delta* (the base knots).
  const std::vector<double>& knots() const { return base_.knots(); }

  /// Cache grid: the knots, refined for non-spline bases.
  const std::vector<double>& grid() const { return grid_; }

  const Diagonal& base() const { return base_; }

 private:
  double tail_from(double t) const;  // T(t) for t in (0, 1]

  Diagonal base_;
  std::vector<double> grid_;
  std::vector<double> tail_;  // T(grid_[i]); tail_[0] may be +inf and is never read
  double tol_;
  bool closed_;
};

/// Chatterjee's xi through the product route: xi = 6 * int_0^1 delta* dt - 2
/// (the footrule of the Markov square). Independent of the closed form in
/// measures.hpp apart from the shared quadrature engine.
double xi_via_markov(const Diagonal& d, double tol = 1e-10);

/// Run the diagonal class checks against delta*.
ValidationReport validate(const MarkovDiagonal& md, int grid_n = 10000);

}  // namespace semicop
