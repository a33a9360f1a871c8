// SPDX-License-Identifier: Apache-2.0
#include "semicop/diagonal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "semicop/rng.hpp"

namespace semicop {
namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

void require_unit(double t) {
  require(t >= 0.0 && t <= 1.0, "diagonal: argument outside [0, 1]");
}

std::size_t piece_index(const std::vector<double>& knots, double t) {
  auto it = std::upper_bound(knots.begin(), knots.end(), t);
  std::size_t i = static_cast<std::size_t>(it - knots.begin());
  if (i > 0) --i;
  if (i >= knots.size() - 1) i = knots.size() - 2;
  return i;
}

}  // namespace

Diagonal::Diagonal(Repr repr, std::vector<double> knots)
    : repr_(std::move(repr)), knots_(std::move(knots)) {}

Diagonal Diagonal::piecewise_power(std::vector<double> knots, std::vector<double> exponents) {
  require(knots.size() >= 2, "piecewise_power: need at least two knots");
  require(knots.front() == 0.0, "piecewise_power: knots must start at 0");
  require(knots.back() == 1.0, "piecewise_power: knots must end at 1");
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    require(knots[i] < knots[i + 1], "piecewise_power: knots must strictly increase");
  require(exponents.size() == knots.size() - 1, "piecewise_power: one exponent per piece");
  for (double e : exponents)
    require(e >= 1.0 && e <= 2.0, "piecewise_power: exponents must lie in [1, 2]");

  // Continuity at interior knots plus delta(1) = 1 pin down the
  // coefficients from the right end.
  const std::size_t m = exponents.size();
  std::vector<double> coeffs(m);
  coeffs[m - 1] = 1.0;
  for (std::size_t j = m - 1; j-- > 0;)
    coeffs[j] = coeffs[j + 1] * std::pow(knots[j + 1], exponents[j + 1] - exponents[j]);

  return Diagonal(PiecewisePower{std::move(exponents), std::move(coeffs)}, std::move(knots));
}

Diagonal Diagonal::ua(double a) {
  require(a >= 0.0 && a <= 1.0, "ua: a must be in [0, 1]");
  if (a == 0.0) return power(1.0);
  if (a == 1.0) return power(2.0);
  return piecewise_power({0.0, a, 1.0}, {2.0, 1.0});
}

Diagonal Diagonal::la(double a) {
  require(a >= 0.0 && a <= 1.0, "la: a must be in [0, 1]");
  if (a == 0.0) return power(2.0);
  if (a == 1.0) return power(1.0);
  return piecewise_power({0.0, a, 1.0}, {1.0, 2.0});
}

Diagonal Diagonal::power(double p) {
  require(p >= 1.0 && p <= 2.0, "power: p must be in [1, 2]");
  return piecewise_power({0.0, 1.0}, {p});
}

Diagonal Diagonal::frechet(double alpha) {
  require(alpha >= 0.0 && alpha <= 1.0, "frechet: alpha must be in [0, 1]");
  return Diagonal(Frechet{alpha}, {0.0, 1.0});
}

Diagonal Diagonal::example23() {
  return piecewise_power({0.0, 0.25, 0.5, 0.75, 1.0}, {2.0, 1.0, 2.0, 1.0});
}

Diagonal Diagonal::mo_product(double alpha, double beta) {
  require(alpha >= 0.0 && alpha <= 1.0, "mo_product: alpha must be in [0, 1]");
  require(beta >= 0.0 && beta <= 1.0, "mo_product: beta must be in [0, 1]");
  MoProduct r{alpha, beta, 0.0, 0.0, 0.0};
  if (alpha != 0.0 && alpha != 0.5) {
    r.lead = (1.0 - alpha) * (1.0 - alpha) / (1.0 - 2.0 * alpha);
    r.sub = alpha * alpha / (1.0 - 2.0 * alpha);
    r.expo = beta * (1.0 - 2.0 * alpha) / alpha;
  }
  return Diagonal(std::move(r), {0.0, 1.0});
}

Diagonal Diagonal::mixture_of(std::vector<Diagonal> parts, std::vector<double> weights) {
  require(!parts.empty(), "mixture_of: need at least one part");
  require(parts.size() == weights.size(), "mixture_of: one weight per part");
  double sum = 0.0;
  for (double w : weights) {
    require(w >= 0.0, "mixture_of: weights must be non-negative");
    sum += w;
  }
  require(std::abs(sum - 1.0) <= 1e-9, "mixture_of: weights must sum to 1");

  std::vector<double> knots;
  for (const Diagonal& d : parts) knots.insert(knots.end(), d.knots().begin(), d.knots().end());
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  return Diagonal(Mixture{std::move(parts), std::move(weights)}, std::move(knots));
}

double Diagonal::value(double t) const {
  require_unit(t);
  if (const auto* p = std::get_if<PiecewisePower>(&repr_)) {
    const std::size_t i = piece_index(knots_, t);
    return p->coeffs[i] * std::pow(t, p->exps[i]);
  }
  if (const auto* f = std::get_if<Frechet>(&repr_))
    return f->alpha * t + (1.0 - f->alpha) * t * t;
  if (const auto* m = std::get_if<MoProduct>(&repr_)) {
    if (m->alpha == 0.0) return t * t;
    if (m->alpha == 0.5) return t == 0.0 ? 0.0 : t * t * (1.0 - 0.5 * m->beta * std::log(t));
    return m->lead * t * t - m->sub * std::pow(t, 2.0 + m->expo);
  }
  const auto& mx = std::get<Mixture>(repr_);
  double s = 0.0;
  for (std::size_t i = 0; i < mx.parts.size(); ++i) s += mx.weights[i] * mx.parts[i].value(t);
  return s;
}

double Diagonal::derivative(double t) const {
  require_unit(t);
  if (const auto* p = std::get_if<PiecewisePower>(&repr_)) {
    const std::size_t i = piece_index(knots_, t);
    const double e = p->exps[i];
    return p->coeffs[i] * e * std::pow(t, e - 1.0);
  }
  if (const auto* f = std::get_if<Frechet>(&repr_))
    return f->alpha + 2.0 * (1.0 - f->alpha) * t;
  if (const auto* m = std::get_if<MoProduct>(&repr_)) {
    if (m->alpha == 0.0) return 2.0 * t;
    if (m->alpha == 0.5)
      return t == 0.0 ? 0.0 : 2.0 * t - m->beta * t * std::log(t) - 0.5 * m->beta * t;
    // pow(0, 0) = 1 picks up the comonotone slope when expo = -1.
    return 2.0 * m->lead * t - m->sub * (2.0 + m->expo) * std::pow(t, 1.0 + m->expo);
  }
  const auto& mx = std::get<Mixture>(repr_);
  double s = 0.0;
  for (std::size_t i = 0; i < mx.parts.size(); ++i)
    s += mx.weights[i] * mx.parts[i].derivative(t);
  return s;
}

DiagonalKind Diagonal::kind() const {
  switch (repr_.index()) {
    case 0: return DiagonalKind::piecewise_power;
    case 1: return DiagonalKind::frechet;
    case 2: return DiagonalKind::mo_product;
    default: return DiagonalKind::mixture;
  }
}

const std::vector<double>& Diagonal::exponents() const {
  const auto* p = std::get_if<PiecewisePower>(&repr_);
  if (!p) throw std::logic_error("exponents: not a piecewise power diagonal");
  return p->exps;
}

const std::vector<double>& Diagonal::coefficients() const {
  const auto* p = std::get_if<PiecewisePower>(&repr_);
  if (!p) throw std::logic_error("coefficients: not a piecewise power diagonal");
  return p->coeffs;
}

Diagonal mix(std::vector<Diagonal> parts, std::vector<double> weights) {
  return Diagonal::mixture_of(std::move(parts), std::move(weights));
}

Diagonal random_diagonal(std::uint64_t seed, int max_pieces) {
  if (max_pieces < 1) throw std::domain_error("random_diagonal: max_pieces must be >= 1");
  Rng rng(seed);
  const int pieces = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_pieces)));

  std::vector<double> knots;
  for (;;) {
    knots.assign(1, 0.0);
    for (int i = 0; i < pieces - 1; ++i) knots.push_back(rng.uniform01_open());
    knots.push_back(1.0);
    std::sort(knots.begin(), knots.end());
    if (std::adjacent_find(knots.begin(), knots.end()) == knots.end()) break;
  }

  std::vector<double> exps;
  exps.reserve(static_cast<std::size_t>(pieces));
  for (int i = 0; i < pieces; ++i) exps.push_back(1.0 + rng.uniform01());
  return Diagonal::piecewise_power(std::move(knots), std::move(exps));
}

ValidationReport validate(const Diagonal& d, int grid_n) {
  return validate_functions([&d](double t) { return d.value(t); },
                            [&d](double t) { return d.derivative(t); }, d.knots(), grid_n);
}

ValidationReport validate_functions(const std::function<double(double)>& value,
                                    const std::function<double(double)>& derivative,
                                    const std::vector<double>& knots, int grid_n) {
  if (grid_n < 1) throw std::domain_error("validate: grid_n must be >= 1");
  constexpr double kTol = 1e-12;

  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(grid_n) + 1 + knots.size());
  for (int i = 0; i <= grid_n; ++i)
    grid.push_back(static_cast<double>(i) / static_cast<double>(grid_n));
  grid.insert(grid.end(), knots.begin(), knots.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  ValidationReport report;
  auto flag = [&report](const char* check, double t, double slack) {
    report.issues.push_back({check, t, slack});
  };
  auto check_at = [&](const char* name, double t, double slack, double scale = 1.0) {
    if (slack < -kTol * scale) flag(name, t, slack);
  };

  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = value(grid[i]);

  check_at("delta(0)=0", 0.0, -std::abs(vals.front()));
  check_at("delta(1)=1", 1.0, -std::abs(vals.back() - 1.0));

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    check_at("delta>=t^2", t, vals[i] - t * t);
    check_at("delta<=t", t, t - vals[i]);
  }

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double t0 = grid[i], t1 = grid[i + 1];
    const double dv = vals[i + 1] - vals[i];
    check_at("monotone", t1, dv);
    check_at("2-lipschitz", t1, 2.0 * (t1 - t0) - dv);

    // delta/t extends to delta'(0) at the origin; delta/t^2 may blow up
    // there, so its first comparison starts at the first positive node.
    const double r1a = t0 == 0.0 ? derivative(0.0) : vals[i] / t0;
    const double r1b = vals[i + 1] / t1;
    check_at("delta/t non-decreasing", t1, r1b - r1a, std::max({1.0, std::abs(r1a), std::abs(r1b)}));
    if (t0 > 0.0) {
      const double r2a = vals[i] / (t0 * t0);
      const double r2b = vals[i + 1] / (t1 * t1);
      check_at("delta/t^2 non-increasing", t1, r2a - r2b,
               std::max({1.0, std::abs(r2a), std::abs(r2b)}));
    }

    const double m = 0.5 * (t0 + t1);
    const double vm = value(m), dm = derivative(m);
    check_at("t*delta' >= delta", m, m * dm - vm);
    check_at("t*delta' <= 2*delta", m, 2.0 * vm - m * dm);
  }

  return report;
}

}  // namespace semicop
