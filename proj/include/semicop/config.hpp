// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

#include "semicop/diagonal.hpp"

namespace semicop {

/// Raised for malformed or out-of-range diagonal configs. Messages are
/// qualified by file and line (syntax errors) or JSON path (semantic
/// errors), e.g. `diag.json: $.params.a: must be in [0,1]`.
class config_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse a diagonal config:
///
///   { "kind": "...", "params": { ... } }
///
/// kinds: ua, la (param a), power (p), frechet (alpha), example23 (none),
/// mo_product (alpha, beta), piecewise (knots, exponents), mixture
/// (components: array of configs, weights). `spec` is either a path to a
/// JSON file or inline JSON (first non-space character '{').
Diagonal load_diagonal(const std::string& spec);

/// Parse from an already-loaded JSON document given as text, with `label`
/// used to qualify error messages.
Diagonal parse_diagonal(const std::string& text, const std::string& label);

}  // namespace semicop
