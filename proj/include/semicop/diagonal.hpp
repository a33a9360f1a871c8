// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace semicop {

enum class DiagonalKind { piecewise_power, frechet, mo_product, mixture };

/// One violated constraint found by validate(): which check failed, where,
/// and the signed margin (negative by the amount the constraint failed).
struct ValidationIssue {
  std::string check;
  double t = 0.0;
  double slack = 0.0;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool pass() const { return issues.empty(); }
};

/// A diagonal from the admissible class of lower semilinear copulas:
///
///   delta(0) = 0,  delta(1) = 1,  delta non-decreasing and 2-Lipschitz,
///   t^2 <= delta(t) <= t,  delta(t)/t non-decreasing,  delta(t)/t^2
///   non-increasing  (equivalently delta <= t*delta' <= 2*delta a.e.).
///
/// The canonical representation is piecewise c_i * t^(e_i) with exponents in
/// [1, 2]; continuity plus the anchor delta(1) = 1 determine the
/// coefficients, and any such spline satisfies every constraint above. The
/// Frechet, Marshall-Olkin-product and mixture diagonals are not power
/// splines and carry their own analytic evaluators.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class Diagonal {
 public:
  /// t^2/a on [0, a], t above. a = 0 gives the comonotone diagonal t,
  /// a = 1 the independence diagonal t^2. Traces the upper boundary of the
  /// attainable measure regions.
  static Diagonal ua(double a);

  /// a*t on [0, a], t^2 above. a = 0 gives t^2, a = 1 gives t. Traces the
  /// lower boundary of the attainable measure regions.
  static Diagonal la(double a);

  /// t^p with p in [1, 2].
  static Diagonal power(double p);

  /// alpha*t + (1-alpha)*t^2, the diagonal of the Frechet mixture
  /// alpha*min(u,v) + (1-alpha)*u*v.
  static Diagonal frechet(double alpha);

  /// Four power pieces alternating between the two extremal slopes:
  /// exponents 2,1,2,1 on knots 0, 1/4, 1/2, 3/4, 1. A diagonal that is
  /// neither a ua nor a la member yet satisfies t*delta' in {delta, 2*delta}
  /// almost everywhere.
  static Diagonal example23();

  /// Diagonal of the Markov product M^T * M of the Marshall-Olkin copula
  /// with parameters alpha, beta in [0, 1]:
  ///   t^2                                     for alpha = 0,
  ///   t^2 * (1 - beta/2 * log t)              for alpha = 1/2,
  ///   t^2 * ((1-a)^2 - a^2 t^(b(1-2a)/a)) / (1-2a)   otherwise.
  static Diagonal mo_product(double alpha, double beta);

  /// General power spline: knots must start at 0, end at 1, strictly
  /// increase; one exponent in [1, 2] per piece. Coefficients follow from
  /// continuity and delta(1) = 1.
  static Diagonal piecewise_power(std::vector<double> knots, std::vector<double> exponents);

  /// Pointwise convex combination; the admissible class is convex.
  /// Weights must be non-negative and sum to 1 (within 1e-9).
  static Diagonal mixture_of(std::vector<Diagonal> parts, std::vector<double> weights);

  /// delta(t). Throws std::domain_error outside [0, 1].
  double value(double t) const;

  /// Fixed measurable version of the derivative: right derivative on [0, 1),
  /// left derivative at t = 1. Values lie in [0, 2].
  double derivative(double t) const;

  /// Breakpoints 0 = t_0 < ... < t_m = 1; the diagonal is smooth between
  /// consecutive knots.
  const std::vector<double>& knots() const { return knots_; }

  DiagonalKind kind() const;

  /// Piece data; only valid when kind() == piecewise_power (throws
  /// std::logic_error otherwise). exponents()[i] and coefficients()[i]
  /// describe the piece on (knots()[i], knots()[i+1]].
  const std::vector<double>& exponents() const;
  const std::vector<double>& coefficients() const;

 private:
  struct PiecewisePower {
    std::vector<double> exps;
    std::vector<double> coeffs;
  };
  struct Frechet {
    double alpha;
  };
  struct MoProduct {
    double alpha;
    double beta;
    double lead;  // (1-alpha)^2 / (1-2*alpha), general branch only
    double sub;   // alpha^2 / (1-2*alpha)
    double expo;  // beta*(1-2*alpha)/alpha
  };
  struct Mixture {
    std::vector<Diagonal> parts;
    std::vector<double> weights;
  };
  using Repr = std::variant<PiecewisePower, Frechet, MoProduct, Mixture>;

  Diagonal(Repr repr, std::vector<double> knots);

  Repr repr_;
  std::vector<double> knots_;
};

/// Convex combination of diagonals. Shorthand for Diagonal::mixture_of.
Diagonal mix(std::vector<Diagonal> parts, std::vector<double> weights);

/// Seeded generator over the canonical representation: piece count uniform
/// on {1..max_pieces}, sorted uniform interior knots, exponents uniform in
/// [1, 2]. Deterministic per seed.
Diagonal random_diagonal(std::uint64_t seed, int max_pieces);

/// Checks every defining constraint of the class on the uniform grid with
/// grid_n intervals plus all knots: endpoint values, monotonicity,
/// 2-Lipschitz increments, t^2 <= delta <= t, monotonicity of delta/t and
/// delta/t^2, and delta <= t*delta' <= 2*delta at panel midpoints.
/// Non-strict comparisons carry a 1e-12 tolerance (scaled by magnitude for
/// the ratio checks, whose values can be large near 0).
ValidationReport validate(const Diagonal& d, int grid_n = 10000);

/// Same checks for any (value, derivative) pair; lets callers validate
/// objects that behave like diagonals without constructing a Diagonal.
ValidationReport validate_functions(const std::function<double(double)>& value,
                                    const std::function<double(double)>& derivative,
                                    const std::vector<double>& knots, int grid_n);

}  // namespace semicop
