// SPDX-License-Identifier: Apache-2.0
#include "semicop/markov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "semicop/quadrature.hpp"

namespace semicop {
namespace {

constexpr int kRefinePanels = 64;

// int_x^y (c (e-1) s^(e-2))^2 ds for one power piece c * s^e; x = 0 allowed
// (+inf when the squared slope of delta/s is not integrable there).
double tail_piece(double c, double e, double x, double y) {
  const double f = c * (e - 1.0);
  if (f == 0.0 || x == y) return 0.0;
  const double k = 2.0 * e - 3.0;
  if (x == 0.0) {
    if (k <= 0.0) return std::numeric_limits<double>::infinity();
    return f * f * std::pow(y, k) / k;
  }
  if (k == 0.0) return f * f * std::log(y / x);
  // (y^k - x^k)/k without cancellation when y/x is close to 1.
  return f * f * std::pow(x, k) * std::expm1(k * std::log(y / x)) / k;
}

}  // namespace

MarkovDiagonal::MarkovDiagonal(Diagonal base, double tol)
    : base_(std::move(base)), tol_(tol),
      closed_(base_.kind() == DiagonalKind::piecewise_power) {
  if (!(tol > 0.0)) throw std::domain_error("MarkovDiagonal: tolerance must be positive");

  if (closed_) {
    grid_ = base_.knots();
  } else {
    grid_.reserve(kRefinePanels + 1 + base_.knots().size());
    for (int i = 0; i <= kRefinePanels; ++i)
      grid_.push_back(static_cast<double>(i) / kRefinePanels);
    grid_.insert(grid_.end(), base_.knots().begin(), base_.knots().end());
    std::sort(grid_.begin(), grid_.end());
    grid_.erase(std::unique(grid_.begin(), grid_.end()), grid_.end());
  }

  const std::size_t m = grid_.size();
  tail_.assign(m, 0.0);
  for (std::size_t i = m - 1; i-- > 1;) {
    double seg;
    if (closed_) {
      seg = tail_piece(base_.coefficients()[i], base_.exponents()[i], grid_[i], grid_[i + 1]);
    } else {
      seg = integrate(
          [this](double s) {
            const double r = (s * base_.derivative(s) - base_.value(s)) / (s * s);
            return r * r;
          },
          grid_[i], grid_[i + 1], tol_ * (grid_[i + 1] - grid_[i]), 1e-12);
    }
    tail_[i] = tail_[i + 1] + seg;
  }
  // T may diverge at 0; the origin is handled analytically, so this entry
  // is a sentinel for the spline case and never read otherwise.
  tail_[0] = closed_ ? tail_[1] + tail_piece(base_.coefficients()[0], base_.exponents()[0], 0.0,
                                             grid_[1])
                     : std::numeric_limits<double>::infinity();
}

double MarkovDiagonal::tail_from(double t) const {
  auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
  std::size_t j = static_cast<std::size_t>(it - grid_.begin());
  if (j > 0) --j;
  if (j >= grid_.size() - 1) j = grid_.size() - 2;
  if (j >= 1 && t == grid_[j]) return tail_[j];

  double partial;
  if (closed_) {
    partial = tail_piece(base_.coefficients()[j], base_.exponents()[j], t, grid_[j + 1]);
  } else {
    partial = integrate(
        [this](double s) {
          const double r = (s * base_.derivative(s) - base_.value(s)) / (s * s);
          return r * r;
        },
        t, grid_[j + 1], tol_, 1e-12);
  }
  return partial + tail_[j + 1];
}

double MarkovDiagonal::value(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("MarkovDiagonal: argument outside [0, 1]");
  if (t == 0.0) return 0.0;
  const double v = base_.value(t);
  return v * v / t + t * t * tail_from(t);
}

double MarkovDiagonal::derivative(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("MarkovDiagonal: argument outside [0, 1]");
  if (t == 0.0) {
    const double d0 = base_.derivative(0.0);
    return d0 * d0;
  }
  const double v = base_.value(t);
  const double dv = base_.derivative(t);
  const double w = t * dv - v;
  return (2.0 * t * v * dv - v * v - w * w) / (t * t) + 2.0 * t * tail_from(t);
}

double xi_via_markov(const Diagonal& d, double tol) {
  const MarkovDiagonal md(d, tol / 20.0);
  const double i =
      integrate([&md](double t) { return md.value(t); }, md.grid(), tol / 12.0);
  return 6.0 * i - 2.0;
}

ValidationReport validate(const MarkovDiagonal& md, int grid_n) {
  return validate_functions([&md](double t) { return md.value(t); },
                            [&md](double t) { return md.derivative(t); }, md.knots(), grid_n);
}

}  // namespace semicop
