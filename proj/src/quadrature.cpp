// SPDX-License-Identifier: Apache-2.0
#include "semicop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace semicop {
namespace {

// 15-point Kronrod abscissae (positive half, descending) and weights.
// The odd-indexed abscissae plus the centre form the embedded 7-point
// Gauss rule. Values from QUADPACK dqk15.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
  }

  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  resabs *= half;
  resasc *= half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  return {a, b, resk * half, std::max(err, floor)};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 double rel_tol) {
  if (!(abs_tol > 0.0) && !(rel_tol > 0.0))
    throw std::domain_error("integrate: tolerance must be positive");
  if (a == b) return 0.0;
  const double sign = a < b ? 1.0 : -1.0;
  if (a > b) std::swap(a, b);

  constexpr int kMaxPanels = 100000;
  const double min_width = (b - a) * 1e-14;

  std::priority_queue<Panel, std::vector<Panel>, ByError> active;
  Panel first = gk15(f, a, b);
  active.push(first);
  double active_err = first.error;
  double active_val = first.value;
  double frozen_val = 0.0, frozen_err = 0.0;
  int panels = 1;

  auto converged = [&] {
    const double err = active_err + frozen_err;
    const double val = active_val + frozen_val;
    return err <= std::max(abs_tol, rel_tol * std::abs(val));
  };

  while (!converged() && !active.empty()) {
    Panel worst = active.top();
    active.pop();
    active_err -= worst.error;
    active_val -= worst.value;

    if (worst.b - worst.a <= min_width) {
      frozen_val += worst.value;
      frozen_err += worst.error;
      continue;
    }
    if (panels >= kMaxPanels) {
      double val = frozen_val + active_val + worst.value;
      double err = frozen_err + active_err + worst.error;
      throw accuracy_error("integrate: tolerance not reached", sign * val, err);
    }

    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gk15(f, worst.a, mid);
    const Panel right = gk15(f, mid, worst.b);
    panels += 2;
    active.push(left);
    active.push(right);
    active_err += left.error + right.error;
    active_val += left.value + right.value;
  }

  if (!converged())
    throw accuracy_error("integrate: tolerance not reached", sign * (frozen_val + active_val),
                         frozen_err + active_err);

  // Sum small-to-large-error for a stable, deterministic total.
  double total = frozen_val;
  std::vector<Panel> rest;
  rest.reserve(active.size());
  while (!active.empty()) {
    rest.push_back(active.top());
    active.pop();
  }
  for (auto it = rest.rbegin(); it != rest.rend(); ++it) total += it->value;
  return sign * total;
}

double integrate(const std::function<double(double)>& f, std::span<const double> knots,
                 double abs_tol, double rel_tol) {
  std::vector<double> ks(knots.begin(), knots.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (ks.size() < 2) throw std::domain_error("integrate: need at least two knots");

  const double total_w = ks.back() - ks.front();
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    const double w = ks[i + 1] - ks[i];
    sum += integrate(f, ks[i], ks[i + 1], abs_tol * (w / total_w), rel_tol);
  }
  return sum;
}

}  // namespace semicop
