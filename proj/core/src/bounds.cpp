// Copyright 2026 The pauliprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pauliprobe/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "pauliprobe/covering.hpp"
#include "pauliprobe/errors.hpp"
#include "pauliprobe/uniform_family.hpp"

namespace pauliprobe {
namespace {

void check_x(double x) {
  if (!(x > 0.0 && x <= 1.0)) throw RangeError("x must lie in (0, 1]");
}

void check_nw(int n, int w) {
  if (n < 1) throw RangeError("n must be positive");
  if (w < 0 || w > n) throw RangeError("w must lie in [0, n]");
}

double log_binomial(int n, int u) {
  return std::lgamma(n + 1.0) - std::lgamma(u + 1.0) - std::lgamma(n - u + 1.0);
}

double log_partial_sum(int n, int w, double x) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(w) + 1);
  const double l3x = std::log(3.0 * x);
  for (int u = 0; u <= w; ++u) terms.push_back(log_binomial(n, u) + u * l3x);
  const double peak = *std::max_element(terms.begin(), terms.end());
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - peak);
  return peak + std::log(acc);
}

}  // namespace

void validate(const BoundQuery& q) {
  if (q.n < 1) throw RangeError("n must be positive");
  if (q.k < 0 || q.k > q.n) throw RangeError("k must lie in [0, n]");
  if (q.w < 0 || q.w > q.n) throw RangeError("w must lie in [0, n]");
  if (!(q.eps > 0.0)) throw RangeError("eps must be positive");
  if (!(q.delta > 0.0 && q.delta < 0.5)) throw RangeError("delta must lie in (0, 1/2)");
}

double pr_e_weight(int n, int u, double x) {
  check_x(x);
  check_nw(n, u);
  return std::exp(u * std::log(x) - n * std::log1p(3.0 * x));
}

double pr_e(const PauliString& e, double x) { return pr_e_weight(e.num_qubits(), weight(e), x); }

double pr_learnable(int n, int w, double x) {
  check_x(x);
  check_nw(n, w);
  if (w == n) return 1.0;
  return std::exp(log_partial_sum(n, w, x) - n * std::log1p(3.0 * x));
}

double log_f_w(int n, int w, double x) {
  check_x(x);
  check_nw(n, w);
  return log_partial_sum(n, w, x) - n * std::log1p(x);
}

double f_w(int n, int w, double x) { return std::exp(log_f_w(n, w, x)); }

OptimalX optimal_x(int n, int w) {
  check_nw(n, w);
  if (w == 0) return OptimalX{kOptimalXFloor, true};
  if (2 * w >= n) return OptimalX{1.0, false};
  const double r = static_cast<double>(w) / n;
  return OptimalX{std::min(r / (1.0 - r), 1.0), false};
}

double lower_bound_N(const BoundQuery& q) {
  validate(q);
  const double x = optimal_x(q.n, q.w).x;
  return (1.0 - 2.0 * q.delta) / (4.0 * q.eps * q.eps) * std::ldexp(f_w(q.n, q.w, x), -q.k);
}

double upper_bound_N(const BoundQuery& q, std::optional<double> measured_sigma) {
  validate(q);
  double groups = 0.0;
  for (int u = 0; u <= q.w; ++u) {
    const double sigma =
        (u == q.w && measured_sigma) ? *measured_sigma : sigma_formula(q.n, q.k, u).value;
    groups += static_cast<double>(cn_upper_bound(count_paulis_of_weight(q.n, u), sigma));
  }
  return q.n * groups * 2.0 / (q.eps * q.eps) * std::log(2.0 / q.delta);
}

std::pair<double, double> stirling_brackets(int n, int u) {
  if (n < 1 || u < 0 || u > n) throw RangeError("stirling brackets need 0 <= u <= n");
  if (u == 0 || u == n) return {1.0, 1.0};
  const double p = static_cast<double>(u) / n;
  const double h = -p * std::log(p) - (1.0 - p) * std::log1p(-p);
  const double e = std::exp(n * h);
  return {e / std::sqrt(2.0 * n), e / std::sqrt(std::numbers::pi)};
}

double weighted_sum_max_eigenvalue(int n, double x) {
  check_x(x);
  if (n < 1) throw RangeError("n must be positive");
  return std::pow((1.0 + x) / (1.0 + 3.0 * x), n);
}

}  // namespace pauliprobe
