// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semicop/measures.hpp"

namespace semicop {

/// The four measure pairs whose attainable sets over the semilinear class
/// are exactly characterized. Coordinates are (x, y) in the listed order.
enum class RegionPair { tau_rho, tau_phi, phi_rho, tau_xi };

inline constexpr std::array<RegionPair, 4> kRegionPairs = {
    RegionPair::tau_rho, RegionPair::tau_phi, RegionPair::phi_rho, RegionPair::tau_xi};

std::string_view to_string(RegionPair pair);
std::optional<RegionPair> region_pair_from_string(std::string_view name);

struct RegionBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Exact boundary curves at abscissa x (clamped to [0, 1]):
///
///   tau_rho:  x      <= y <= 1 - (1-x)^(3/2)
///   tau_phi:  x      <= y <= x^(3/4)
///   phi_rho:  x^(4/3) <= y <= 1 - (1-x)^(3/2)
///   tau_xi:   2x^2/(1+x) <= y <= x
///
/// Both boundaries are attained: ua and la sweep them (power for the lower
/// tau_xi curve).
RegionBounds region_bounds(RegionPair pair, double x);

/// Membership with additive slack on both coordinates.
bool region_contains(RegionPair pair, double x, double y, double slack = 0.0);

struct RegionArea {
  double analytic = 0.0;
  double numeric = 0.0;
};

/// Exact areas (1/10, 1/14, 6/35, 3/2 - 2 log 2) next to the adaptive
/// quadrature of upper - lower as a cross-check.
RegionArea region_area(RegionPair pair);

/// Measure vectors of n seeded random diagonals; point i uses the substream
/// (seed, i), so clouds are reproducible under any work partition. Every
/// point lies in all four regions (up to quadrature accuracy).
std::vector<MeasureVector> simulate_cloud(std::size_t n, std::uint64_t seed, int max_pieces = 8,
                                          double tol = 1e-10);

/// Coordinates of point m for the given pair.
inline void pair_coords(RegionPair pair, const MeasureVector& m, double& x, double& y) {
  switch (pair) {
    case RegionPair::tau_rho: x = m.tau; y = m.rho; return;
    case RegionPair::tau_phi: x = m.tau; y = m.phi; return;
    case RegionPair::phi_rho: x = m.phi; y = m.rho; return;
    default: x = m.tau; y = m.xi; return;
  }
}

}  // namespace semicop
