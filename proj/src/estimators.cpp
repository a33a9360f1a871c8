// SPDX-License-Identifier: Apache-2.0
#include "semicop/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>

#include "semicop/rng.hpp"

namespace semicop {
namespace {

// Inversions of a by bottom-up merge sort; a is consumed as scratch.
std::uint64_t count_inversions(std::vector<int>& a) {
  const std::size_t n = a.size();
  std::vector<int> buf(n);
  std::uint64_t inversions = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      const std::size_t mid = lo + width;
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (a[j] < a[i]) {
          inversions += mid - i;
          buf[k++] = a[j++];
        } else {
          buf[k++] = a[i++];
        }
      }
      std::copy(a.begin() + static_cast<std::ptrdiff_t>(i), a.begin() + static_cast<std::ptrdiff_t>(mid),
                buf.begin() + static_cast<std::ptrdiff_t>(k));
      std::copy(a.begin() + static_cast<std::ptrdiff_t>(j), a.begin() + static_cast<std::ptrdiff_t>(hi),
                buf.begin() + static_cast<std::ptrdiff_t>(k + (mid - i)));
      std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
                a.begin() + static_cast<std::ptrdiff_t>(lo));
    }
  }
  return inversions;
}

}  // namespace

std::vector<int> ranks(std::span<const double> values, std::uint64_t seed) {
  const std::size_t n = values.size();
  Rng rng(seed);
  std::vector<double> jitter(n);
  for (std::size_t i = 0; i < n; ++i) jitter[i] = rng.uniform01();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] < values[b];
    if (jitter[a] != jitter[b]) return jitter[a] < jitter[b];
    return a < b;
  });

  std::vector<int> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = static_cast<int>(k) + 1;
  return rank;
}

MeasureVector estimate_all(const SampleBatch& batch, std::uint64_t seed) {
  const std::size_t n = batch.size();
  if (n < 2) throw std::domain_error("estimate_all: need at least two observations");
  if (batch.v.size() != n) throw std::domain_error("estimate_all: u and v sizes differ");

  const std::vector<int> r = ranks(batch.u, substream_seed(seed, 0));
  const std::vector<int> s = ranks(batch.v, substream_seed(seed, 1));

  // V-ranks in the order of increasing U.
  std::vector<int> s_by_u(n);
  for (std::size_t i = 0; i < n; ++i) s_by_u[static_cast<std::size_t>(r[i]) - 1] = s[i];

  const double nn = static_cast<double>(n);
  const double pairs = nn * (nn - 1.0);

  double footrule = 0.0;
  for (std::size_t i = 0; i < n; ++i) footrule += std::abs(static_cast<double>(r[i] - s[i]));

  double steps = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    steps += std::abs(static_cast<double>(s_by_u[i + 1] - s_by_u[i]));

  const double mean = (nn + 1.0) / 2.0;
  double cov = 0.0, var = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cov += (r[i] - mean) * (s[i] - mean);
    var += (r[i] - mean) * (r[i] - mean);
  }

  std::vector<int> scratch = s_by_u;
  const double inversions = static_cast<double>(count_inversions(scratch));

  MeasureVector m;
  m.tau = 1.0 - 4.0 * inversions / pairs;
  m.rho = cov / var;  // both rank vectors are permutations of 1..n
  m.phi = 1.0 - 3.0 * footrule / (nn * nn - 1.0);
  m.xi = 1.0 - 3.0 * steps / (nn * nn - 1.0);
  return m;
}

}  // namespace semicop
