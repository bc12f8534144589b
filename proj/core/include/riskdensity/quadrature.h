// Copyright 2026 The riskdensity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RISKDENSITY_QUADRATURE_H_
#define RISKDENSITY_QUADRATURE_H_

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include "riskdensity/errors.h"

namespace riskdensity {

// Tolerances for adaptive integration. A result is accepted once the
// estimated absolute error is below max(abs_tol, rel_tol * |value|).
struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;

  // Throws std::invalid_argument on non-positive tolerances or budget.
  void Validate() const;
  // Same spec with both tolerances scaled; used for nested inner integrals.
  QuadratureSpec Tightened(double factor) const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
  int evaluations = 0;
  bool converged = true;
};

namespace internal {

// Kronrod 15-point abscissae on [-1, 1] (positive half, descending) with the
// embedded 7-point Gauss rule on the odd indices.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

// One Gauss-Kronrod 7/15 panel with the QUADPACK error heuristic.
template <typename F>
Panel Gk15(F& f, double a, double b) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kUflow = std::numeric_limits<double>::min();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  double fv1[7];
  double fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }
  const double abs_half = std::abs(half);
  const double value = resk * half;
  resabs *= abs_half;
  resasc *= abs_half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    const double ratio = 200.0 * err / resasc;
    err = resasc * std::min(1.0, ratio * std::sqrt(ratio));
  }
  if (resabs > kUflow / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  return {a, b, value, err};
}

}  // namespace internal

// Globally adaptive Gauss-Kronrod integration of f over [a, b]. The
// interval with the largest error estimate is bisected until the tolerance
// holds or the subdivision budget is spent. Optional breakpoints inside
// (a, b) seed the initial partition; place them on kinks and on both sides
// of sharp peaks (Kronrod nodes never touch panel endpoints).
template <typename F>
QuadratureResult IntegrateAdaptive(F&& f, double a, double b,
                                   const QuadratureSpec& spec,
                                   std::span<const double> breakpoints = {}) {
  QuadratureResult out;
  if (a == b) return out;
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b && std::isfinite(p)) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto by_error = [](const internal::Panel& x, const internal::Panel& y) {
    return x.error < y.error;
  };
  std::vector<internal::Panel> heap;
  heap.reserve(2 * cuts.size() + 16);
  double total = 0.0;
  double total_err = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    heap.push_back(internal::Gk15(f, cuts[i], cuts[i + 1]));
    total += heap.back().value;
    total_err += heap.back().error;
    out.evaluations += 15;
  }
  std::make_heap(heap.begin(), heap.end(), by_error);

  auto tolerance = [&] {
    return std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
  };
  while (total_err > tolerance()) {
    if (out.subdivisions >= spec.max_subdivisions) {
      out.converged = false;
      break;
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const internal::Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval cannot be split further in double precision.
      out.converged = false;
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), by_error);
      break;
    }
    const internal::Panel left = internal::Gk15(f, worst.a, mid);
    const internal::Panel right = internal::Gk15(f, mid, worst.b);
    out.evaluations += 30;
    ++out.subdivisions;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
  }
  // Re-sum to shed accumulated cancellation from the running updates.
  total = 0.0;
  total_err = 0.0;
  for (const auto& p : heap) {
    total += p.value;
    total_err += p.error;
  }
  out.value = sign * total;
  out.error = total_err;
  if (total_err <= tolerance()) out.converged = true;
  return out;
}

// Like IntegrateAdaptive but throws ToleranceError (carrying the best
// estimate) when the tolerance is not met.
template <typename F>
double Integrate(F&& f, double a, double b, const QuadratureSpec& spec,
                 std::span<const double> breakpoints = {}) {
  const QuadratureResult r =
      IntegrateAdaptive(std::forward<F>(f), a, b, spec, breakpoints);
  if (!r.converged) {
    throw ToleranceError("adaptive quadrature did not converge", r.value,
                         r.error);
  }
  return r.value;
}

}  // namespace riskdensity

#endif  // RISKDENSITY_QUADRATURE_H_
