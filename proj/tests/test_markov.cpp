// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "semicop/diagonal.hpp"
#include "semicop/markov.hpp"
#include "semicop/measures.hpp"

using semicop::analytic_measures;
using semicop::concordance;
using semicop::Diagonal;
using semicop::Family;
using semicop::MarkovDiagonal;
using semicop::random_diagonal;
using semicop::validate;
using semicop::xi_closed;
using semicop::xi_via_markov;

namespace {

double power_square_diagonal(double p, double t) {
  // product diagonal of t^p: t^(2p-1) + (p-1)^2 t^2 (1 - t^(2p-3))/(2p-3),
  // with the log limit at p = 3/2
  if (t == 0.0) return 0.0;
  if (p == 1.5) return t * t * (1.0 - 0.25 * std::log(t));
  return std::pow(t, 2.0 * p - 1.0) +
         (p - 1.0) * (p - 1.0) * t * t * (1.0 - std::pow(t, 2.0 * p - 3.0)) / (2.0 * p - 3.0);
}

}  // namespace

TEST_SUITE("markov") {

TEST_CASE("extreme diagonals are fixed points") {
  for (const double p : {1.0, 2.0}) {
    const Diagonal base = Diagonal::power(p);
    const MarkovDiagonal md(base);
    for (int i = 0; i <= 50; ++i) {
      const double t = i / 50.0;
      CHECK(md.value(t) == doctest::Approx(base.value(t)).epsilon(1e-13).scale(1.0));
    }
  }
  // so is every u_a
  const Diagonal u = Diagonal::ua(0.4);
  const MarkovDiagonal mu(u);
  for (int i = 0; i <= 50; ++i) {
    const double t = i / 50.0;
    CHECK(mu.value(t) == doctest::Approx(u.value(t)).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("the l_a square is a two-piece mixture shape") {
  // a^2 t + (1-a) t^2 up to a, then t^2
  const double a = 0.6;
  const MarkovDiagonal md(Diagonal::la(a));
  for (int i = 0; i <= 60; ++i) {
    const double t = i / 60.0;
    const double want = t <= a ? a * a * t + (1.0 - a) * t * t : t * t;
    CHECK(md.value(t) == doctest::Approx(want).epsilon(1e-13).scale(1.0));
  }
  // its footrule recovers xi = a^4
  CHECK(xi_via_markov(Diagonal::la(a)) == doctest::Approx(0.1296).epsilon(1e-9).scale(1.0));
}

TEST_CASE("power diagonal squares match the closed form") {
  for (const double p : {1.1, 1.25, 1.5, 1.75, 1.9, 2.0}) {
    const MarkovDiagonal md(Diagonal::power(p));
    for (const double t : {1e-4, 0.1, 0.33, 0.5, 0.77, 1.0}) {
      CHECK(md.value(t) ==
            doctest::Approx(power_square_diagonal(p, t)).epsilon(1e-12).scale(1.0));
    }
    // and their footrule is the xi table entry (2-p)^2/p
    CHECK(xi_via_markov(Diagonal::power(p)) ==
          doctest::Approx((2.0 - p) * (2.0 - p) / p).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("frechet square through the quadrature path") {
  // (alpha t + (1-alpha) t^2)^2 / t + t^2 (1-alpha)^2 (1-t)
  const double alpha = 0.6;
  const Diagonal base = Diagonal::frechet(alpha);
  const MarkovDiagonal md(base, 1e-11);
  for (const double t : {1e-3, 0.2, 0.5, 0.8, 1.0}) {
    const double d = alpha * t + (1.0 - alpha) * t * t;
    const double want = t == 0.0 ? 0.0
                                 : d * d / t + t * t * (1.0 - alpha) * (1.0 - alpha) * (1.0 - t);
    CHECK(md.value(t) == doctest::Approx(want).epsilon(1e-9).scale(1.0));
  }
  CHECK(xi_via_markov(base) == doctest::Approx(alpha * alpha).epsilon(1e-8).scale(1.0));
}

TEST_CASE("product-diagonal footrule recovers Marshall-Olkin xi") {
  // phi of the M^T * M diagonal equals xi of the underlying copula
  for (const auto& [alpha, beta] :
       {std::pair{0.5, 0.75}, std::pair{0.7, 0.4}, std::pair{0.25, 1.0}}) {
    const double want = analytic_measures(Family::marshall_olkin, alpha, beta).xi;
    CHECK(concordance(Diagonal::mo_product(alpha, beta)).phi ==
          doctest::Approx(want).epsilon(1e-9).scale(1.0));
  }
  // alpha = 1/2 collapses to beta/3
  CHECK(analytic_measures(Family::marshall_olkin, 0.5, 0.9).xi ==
        doctest::Approx(0.3).epsilon(1e-15).scale(1.0));
}

TEST_CASE("derivative convention and finite differences") {
  const MarkovDiagonal spline(Diagonal::power(1.3));
  CHECK(spline.derivative(0.0) == 0.0);
  const MarkovDiagonal straight(Diagonal::power(1.0));
  CHECK(straight.derivative(0.0) == 1.0);

  for (const auto* md : {&spline, &straight}) {
    for (const double t : {0.2, 0.5, 0.8}) {
      const double h = 1e-6;
      const double fd = (md->value(t + h) - md->value(t - h)) / (2.0 * h);
      CHECK(md->derivative(t) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
    }
  }
  const MarkovDiagonal quad(Diagonal::mo_product(0.7, 0.4), 1e-11);
  for (const double t : {0.2, 0.5, 0.8}) {
    const double h = 1e-6;
    const double fd = (quad.value(t + h) - quad.value(t - h)) / (2.0 * h);
    CHECK(quad.derivative(t) == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
  }
}

TEST_CASE("both xi routes agree") {
  for (int i = 0; i <= 10; ++i) {
    const double a = i / 10.0;
    CHECK(xi_via_markov(Diagonal::ua(a)) ==
          doctest::Approx(xi_closed(Diagonal::ua(a))).epsilon(1e-8).scale(1.0));
    CHECK(xi_via_markov(Diagonal::la(a)) ==
          doctest::Approx(xi_closed(Diagonal::la(a))).epsilon(1e-8).scale(1.0));
    CHECK(xi_via_markov(Diagonal::frechet(a)) ==
          doctest::Approx(xi_closed(Diagonal::frechet(a))).epsilon(1e-8).scale(1.0));
  }
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Diagonal d = random_diagonal(seed, 6);
    CHECK(xi_via_markov(d) == doctest::Approx(xi_closed(d)).epsilon(1e-7).scale(1.0));
  }
}

TEST_CASE("squares stay inside the diagonal class") {
  CHECK(validate(MarkovDiagonal(Diagonal::example23()), 1000).pass());
  CHECK(validate(MarkovDiagonal(Diagonal::power(1.5)), 1000).pass());
  CHECK(validate(MarkovDiagonal(Diagonal::frechet(0.3), 1e-11), 500).pass());
  CHECK(validate(MarkovDiagonal(Diagonal::mo_product(0.7, 0.4), 1e-11), 500).pass());
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    CHECK(validate(MarkovDiagonal(random_diagonal(seed, 5)), 400).pass());
}

}  // TEST_SUITE
