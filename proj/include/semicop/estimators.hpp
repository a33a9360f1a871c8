// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semicop/copula.hpp"
#include "semicop/measures.hpp"

namespace semicop {

/// Ranks 1..n of the values. Exact ties are broken by a seed-derived
/// uniform jitter (ties are null events for continuous data; floating-point
/// collisions remain possible).
std::vector<int> ranks(std::span<const double> values, std::uint64_t seed);

/// Rank-based estimates of all four measures from a sample (n >= 2):
///
///   tau: (concordant - discordant) / C(n,2), discordances counted as
///        merge-sort inversions of the V-ranks ordered by U (O(n log n))
///   rho: Pearson correlation of the two rank vectors
///   phi: 1 - 3 * sum |R_i - S_i| / (n^2 - 1)
///   xi:  1 - 3 * sum_{i<n} |r_(i+1) - r_(i)| / (n^2 - 1), where r_(i) is
///        the V-rank of the sample with U-rank i (asymmetric in (U, V))
///
/// With tie-free data all four are invariant under row order.
MeasureVector estimate_all(const SampleBatch& batch, std::uint64_t seed);

}  // namespace semicop
