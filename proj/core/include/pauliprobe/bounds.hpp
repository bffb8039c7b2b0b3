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

#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "pauliprobe/pauli_string.hpp"

namespace pauliprobe {

/// Learning-task parameters: n system qubits, k ancillas, target weight w,
/// accuracy eps and failure probability delta.
struct BoundQuery {
  int n = 1;
  int k = 0;
  int w = 0;
  double eps = 0.1;
  double delta = 0.05;
};

/// Throws RangeError unless 0 <= k <= n, 0 <= w <= n, eps > 0, 0 < delta < 1/2.
void validate(const BoundQuery& q);

/// Referee prior x^{|e|} / (1+3x)^n, x in (0, 1].
double pr_e(const PauliString& e, double x);
double pr_e_weight(int n, int u, double x);

/// Pr(|e| <= w) under the prior.
double pr_learnable(int n, int w, double x);

/// ln F_w(x), F_w(x) = (1+x)^{-n} sum_{u<=w} C(n,u) (3x)^u, via lgamma + logsumexp.
double log_f_w(int n, int w, double x);
double f_w(int n, int w, double x);

struct OptimalX {
  double x = 1.0;
  bool degenerate = false;  // w = 0: no interior optimum, floor value returned
};
inline constexpr double kOptimalXFloor = 1e-6;

/// min((w/n)/(1-w/n), 1); w = 0 returns kOptimalXFloor flagged degenerate.
OptimalX optimal_x(int n, int w);

/// ((1-2 delta)/(4 eps^2)) 2^{-k} F_w(optimal_x).
double lower_bound_N(const BoundQuery& q);

/// n * sum_{u<=w} cn_upper_bound(|P(u)|, Sigma(u,k)) * 2 eps^-2 ln(2/delta).
/// `measured_sigma` replaces the closed-form Sigma of the top class u = w.
double upper_bound_N(const BoundQuery& q, std::optional<double> measured_sigma = std::nullopt);

/// exp(n H(u/n))/sqrt(2n) <= C(n,u) <= exp(n H(u/n))/sqrt(pi), H in nats.
/// u in {0, n} gives (1, 1).
std::pair<double, double> stirling_brackets(int n, int u);

/// Largest eigenvalue of sum_e Pr(e) P_e^T (x) P_e, ((1+x)/(1+3x))^n.
double weighted_sum_max_eigenvalue(int n, double x);

}  // namespace pauliprobe
