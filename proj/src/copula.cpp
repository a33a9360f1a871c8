// SPDX-License-Identifier: Apache-2.0
#include "semicop/copula.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "semicop/rng.hpp"

namespace semicop {
namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

void require_interior(double u) {
  require(u > 0.0 && u < 1.0, "conditional law: u must be in (0, 1)");
}

}  // namespace

SemilinearCopula::SemilinearCopula(Diagonal diagonal) : diag_(std::move(diagonal)) {}

double SemilinearCopula::value(double u, double v) const {
  require(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0, "copula: argument outside [0, 1]^2");
  if (u == 0.0 || v == 0.0) return 0.0;
  if (v <= u) return v * diag_.value(u) / u;
  return u * diag_.value(v) / v;
}

double SemilinearCopula::conditional_cdf(double u, double v) const {
  require_interior(u);
  require(v >= 0.0 && v <= 1.0, "conditional_cdf: v outside [0, 1]");
  if (v == 0.0) return 0.0;
  if (v < u) return v * (u * diag_.derivative(u) - diag_.value(u)) / (u * u);
  return diag_.value(v) / v;
}

double SemilinearCopula::conditional_atom(double u) const {
  require_interior(u);
  return (2.0 * diag_.value(u) - u * diag_.derivative(u)) / u;
}

double SemilinearCopula::conditional_quantile(double u, double w) const {
  require_interior(u);
  require(w >= 0.0 && w <= 1.0, "conditional_quantile: w outside [0, 1]");
  if (w == 0.0) return 0.0;

  const double d = diag_.value(u);
  const double slope = (u * diag_.derivative(u) - d) / (u * u);
  const double below = slope * u;  // cdf just left of the atom
  if (slope > 0.0 && w <= below) return w / slope;
  if (w <= d / u) return u;

  // delta(v)/v is non-decreasing and reaches 1 at v = 1; take the infimum
  // of the level set, which bisection's upper end converges to.
  double lo = u, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (diag_.value(mid) / mid >= w)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

SampleBatch SemilinearCopula::sample(std::size_t n, std::uint64_t seed) const {
  SampleBatch batch;
  batch.seed = seed;
  batch.u.resize(n);
  batch.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(substream_seed(seed, i));
    const double u = rng.uniform01_open();
    const double w = rng.uniform01();
    batch.u[i] = u;
    batch.v[i] = conditional_quantile(u, w);
  }
  return batch;
}

double marshall_olkin(double alpha, double beta, double u, double v) {
  require(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0,
          "marshall_olkin: parameters must be in [0, 1]");
  require(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0,
          "marshall_olkin: argument outside [0, 1]^2");
  // std::pow(0, 0) = 1 realizes the 0^0 = 1 convention at the corners.
  return std::min(std::pow(u, 1.0 - alpha) * v, u * std::pow(v, 1.0 - beta));
}

}  // namespace semicop
