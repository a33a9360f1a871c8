// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "semicop/diagonal.hpp"

namespace semicop {

/// n pairs in the unit square plus the seed that produced them.
/// Row i depends only on (seed, i), so prefixes and partitions of a batch
/// reproduce exactly.
struct SampleBatch {
  std::vector<double> u;
  std::vector<double> v;
  std::uint64_t seed = 0;
  std::size_t size() const { return u.size(); }
};

/// The lower semilinear copula S induced by an admissible diagonal:
///
///   S(u, v) = v * delta(u) / u  for v <= u,   u * delta(v) / v  otherwise,
///
/// linear along segments from the diagonal to the axes. Immutable.
class SemilinearCopula {
 public:
  explicit SemilinearCopula(Diagonal diagonal);

  /// S(u, v) on [0,1]^2, with S = 0 on the axes.
  double value(double u, double v) const;

  const Diagonal& diagonal() const { return diag_; }

  /// Conditional law of V given U = u, u in (0, 1):
  /// linear below u, an atom of mass (2*delta(u) - u*delta'(u)) / u at
  /// v = u, and delta(v)/v above.
  double conditional_cdf(double u, double v) const;

  /// Mass of the atom at v = u.
  double conditional_atom(double u) const;

  /// Left-continuous generalized inverse of the conditional cdf:
  /// inf { v : G_u(v) >= w }. The branch above the atom is solved by
  /// bisection on delta(v)/v = w (monotone, tolerance 1e-12, at most 200
  /// steps); plateaus resolve to their infimum.
  double conditional_quantile(double u, double w) const;

  /// n exact draws by conditional inversion: u_i uniform, v_i the
  /// conditional quantile at an independent uniform. Draw i comes from the
  /// substream (seed, i), so any partition of the work reproduces the batch.
  SampleBatch sample(std::size_t n, std::uint64_t seed) const;

 private:
  Diagonal diag_;
};

/// Marshall-Olkin copula min(u^(1-alpha) * v, u * v^(1-beta)) with the
/// convention 0^0 = 1. Not semilinear in general; used as the reference
/// model whose Markov product is.
double marshall_olkin(double alpha, double beta, double u, double v);

}  // namespace semicop
