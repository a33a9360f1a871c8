// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semicop {

/// Run the command-line interface on the given arguments (without argv[0]).
/// Output is deterministic: identical arguments and seeds produce
/// byte-identical streams and files.
///
/// Exit codes: 0 success (validate pass / region inside / cloud clean),
/// 1 check failed, 2 usage or config error, 3 quadrature accuracy failure,
/// 4 simulated cloud left a region.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semicop
