// SPDX-License-Identifier: Apache-2.0
#include "semicop/io.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace semicop {

std::string format_general(double x, int precision) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, precision);
  if (res.ec != std::errc()) throw std::logic_error("format_general: buffer too small");
  return std::string(buf, res.ptr);
}

void write_samples_csv(std::ostream& os, const SampleBatch& batch) {
  os << "u,v\n";
  for (std::size_t i = 0; i < batch.size(); ++i)
    os << num17(batch.u[i]) << ',' << num17(batch.v[i]) << '\n';
}

void write_cloud_csv(std::ostream& os, std::span<const MeasureVector> points) {
  os << "tau,rho,phi,xi\n";
  for (const MeasureVector& m : points)
    os << num17(m.tau) << ',' << num17(m.rho) << ',' << num17(m.phi) << ',' << num17(m.xi)
       << '\n';
}

void write_boundary_csv(std::ostream& os, RegionPair pair, int grid_points) {
  if (grid_points < 2) throw std::domain_error("write_boundary_csv: need at least two points");
  os << "x,lower,upper\n";
  for (int i = 0; i < grid_points; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(grid_points - 1);
    const RegionBounds b = region_bounds(pair, x);
    os << num17(x) << ',' << num17(b.lower) << ',' << num17(b.upper) << '\n';
  }
}

}  // namespace semicop
