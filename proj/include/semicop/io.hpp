// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <span>
#include <string>

#include "semicop/copula.hpp"
#include "semicop/measures.hpp"
#include "semicop/regions.hpp"

namespace semicop {

/// Shortest-form decimal with the given significant digits ('.' decimal
/// point, locale-independent). 17 digits round-trip a double exactly.
std::string format_general(double x, int precision);

inline std::string num17(double x) { return format_general(x, 17); }
inline std::string num6(double x) { return format_general(x, 6); }

/// Header "u,v", one row per pair, 17 significant digits, '\n' endings.
void write_samples_csv(std::ostream& os, const SampleBatch& batch);

/// Header "tau,rho,phi,xi", one row per point.
void write_cloud_csv(std::ostream& os, std::span<const MeasureVector> points);

/// Header "x,lower,upper" on a uniform grid over [0, 1].
void write_boundary_csv(std::ostream& os, RegionPair pair, int grid_points = 1001);

}  // namespace semicop
