// SPDX-License-Identifier: Apache-2.0
#include "semicop/regions.hpp"

#include <algorithm>
#include <cmath>

#include "semicop/quadrature.hpp"
#include "semicop/rng.hpp"

namespace semicop {

std::string_view to_string(RegionPair pair) {
  switch (pair) {
    case RegionPair::tau_rho: return "tau_rho";
    case RegionPair::tau_phi: return "tau_phi";
    case RegionPair::phi_rho: return "phi_rho";
    default: return "tau_xi";
  }
}

std::optional<RegionPair> region_pair_from_string(std::string_view name) {
  for (RegionPair pair : kRegionPairs)
    if (name == to_string(pair)) return pair;
  return std::nullopt;
}

RegionBounds region_bounds(RegionPair pair, double x) {
  // Measures carry quadrature noise, so x may poke out of [0, 1] by an ulp;
  // pow(1 - x, 3/2) would turn that into a NaN.
  x = std::clamp(x, 0.0, 1.0);
  switch (pair) {
    case RegionPair::tau_rho: return {x, 1.0 - std::pow(1.0 - x, 1.5)};
    case RegionPair::tau_phi: return {x, std::pow(x, 0.75)};
    case RegionPair::phi_rho: return {std::pow(x, 4.0 / 3.0), 1.0 - std::pow(1.0 - x, 1.5)};
    default: return {2.0 * x * x / (1.0 + x), x};
  }
}

bool region_contains(RegionPair pair, double x, double y, double slack) {
  if (x < -slack || x > 1.0 + slack) return false;
  const RegionBounds b = region_bounds(pair, x);
  return y >= b.lower - slack && y <= b.upper + slack;
}

RegionArea region_area(RegionPair pair) {
  double analytic;
  switch (pair) {
    case RegionPair::tau_rho: analytic = 1.0 / 10.0; break;
    case RegionPair::tau_phi: analytic = 1.0 / 14.0; break;
    case RegionPair::phi_rho: analytic = 6.0 / 35.0; break;
    default: analytic = 1.5 - 2.0 * std::log(2.0); break;
  }
  const double numeric = integrate(
      [pair](double x) {
        const RegionBounds b = region_bounds(pair, x);
        return b.upper - b.lower;
      },
      0.0, 1.0, 1e-10);
  return {analytic, numeric};
}

std::vector<MeasureVector> simulate_cloud(std::size_t n, std::uint64_t seed, int max_pieces,
                                          double tol) {
  std::vector<MeasureVector> points(n);
  for (std::size_t i = 0; i < n; ++i)
    points[i] = measure_vector(random_diagonal(substream_seed(seed, i), max_pieces), tol);
  return points;
}

}  // namespace semicop
