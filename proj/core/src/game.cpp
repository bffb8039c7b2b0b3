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

#include "pauliprobe/game.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pauliprobe/bounds.hpp"
#include "pauliprobe/channel.hpp"
#include "pauliprobe/errors.hpp"
#include "pauliprobe/syndrome.hpp"

namespace pauliprobe {

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw RangeError("Wilson interval needs at least one trial");
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double center = (p + z2 / (2.0 * t)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t));
  return WilsonInterval{std::max(0.0, center - half), std::min(1.0, center + half), half};
}

PauliString sample_nonzero_error(int n, double x, Rng& rng) {
  std::vector<double> weights(static_cast<std::size_t>(n) + 1, 0.0);
  for (int u = 1; u <= n; ++u) weights[static_cast<std::size_t>(u)] = pr_e_weight(n, u, x) * static_cast<double>(count_paulis_of_weight(n, u));
  std::discrete_distribution<int> pick_weight(weights.begin(), weights.end());
  const int u = pick_weight(rng);
  // uniform support of size u, then uniform X/Y/Z on it
  std::vector<int> qubits(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) qubits[static_cast<std::size_t>(q)] = q;
  std::shuffle(qubits.begin(), qubits.end(), rng);
  std::uniform_int_distribution<int> pick_op(0, 2);
  static constexpr char kOps[3] = {'X', 'Y', 'Z'};
  PauliString e(n);
  for (int i = 0; i < u; ++i) e.set_op(qubits[static_cast<std::size_t>(i)], kOps[pick_op(rng)]);
  return e;
}

GameResult run_game(const GameConfig& cfg, const Strategy& strategy) {
  if (cfg.n < 1 || cfg.w < 0 || cfg.w > cfg.n) throw RangeError("game needs 0 <= w <= n");
  if (!(cfg.x > 0.0 && cfg.x <= 1.0)) throw RangeError("x must lie in (0, 1]");
  if (!(cfg.eps > 0.0 && cfg.eps <= 0.5)) throw RangeError("eps must lie in (0, 1/2]");
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw RangeError("delta must lie in (0, 1)");
  if (cfg.trials < 1) throw RangeError("trials must be >= 1");

  const AlphaStrategy* alpha = std::get_if<AlphaStrategy>(&strategy);
  const StabilizerStrategy* stab = std::get_if<StabilizerStrategy>(&strategy);
  if (stab && stab->group.num_system() != cfg.n) throw DimensionError("group system size differs from n");
  const Probe probe = make_alpha_probe(cfg.n, alpha ? alpha->alpha : 1.0);

  GameResult result;
  result.trials = cfg.trials;
  result.shots_per_trial = plan_samples(probe, cfg.eps, cfg.delta, cfg.w);
  const double p0 = pr_e_weight(cfg.n, 0, cfg.x);
  result.pr_learnable_nonzero = (pr_learnable(cfg.n, cfg.w, cfg.x) - p0) / (1.0 - p0);
  result.floor = result.pr_learnable_nonzero * (1.0 - cfg.delta) + (1.0 - result.pr_learnable_nonzero) / 2.0;
  const PauliChannel dep = depolarizing_channel(cfg.n);

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = make_rng(cfg.seed, trial);
    const PauliString e = sample_nonzero_error(cfg.n, cfg.x, rng);
    const int s = (rng() & 1U) ? 1 : -1;
    const bool referee_dep = (rng() & 1U) != 0;
    const std::uint64_t shot_seed = rng();
    const PauliChannel channel = referee_dep ? dep : spike_channel(cfg.n, e, s, cfg.eps);

    bool can_estimate = weight(e) <= cfg.w;
    if (stab) can_estimate = can_estimate && stab->group.sys_contains(e);
    bool answer_dep;
    if (can_estimate) {
      double estimate;
      if (stab) {
        const auto syndromes = sample_syndromes(stab->group, channel, result.shots_per_trial, shot_seed);
        estimate = estimate_from_syndromes(syndromes, stab->group, e);
      } else {
        const OutcomeRecord rec = sample_outcomes(channel, probe, result.shots_per_trial, shot_seed);
        estimate = estimate_eigenvalue(rec, e);
      }
      answer_dep = std::abs(estimate) <= cfg.eps;
    } else {
      answer_dep = (rng() & 1U) != 0;
    }
    result.wins += answer_dep == referee_dep;
  }
  result.win_rate = static_cast<double>(result.wins) / static_cast<double>(result.trials);
  const WilsonInterval ci = wilson_interval(result.wins, result.trials);
  result.ci_low = ci.low;
  result.ci_high = ci.high;
  result.sigma = ci.half_width / 1.96;
  return result;
}

}  // namespace pauliprobe
