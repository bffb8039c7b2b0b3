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
#include <variant>

#include "pauliprobe/pauli_string.hpp"
#include "pauliprobe/probe.hpp"
#include "pauliprobe/rng.hpp"
#include "pauliprobe/stabilizer_group.hpp"

namespace pauliprobe {

struct GameConfig {
  int n = 2;
  int w = 2;
  double x = 1.0;       // referee prior parameter, (0, 1]
  double eps = 0.1;
  double delta = 0.05;  // player's planning failure probability
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
};

/// Player measures single copies of the alpha probe in the Bell basis.
struct AlphaStrategy {
  double alpha = 1.0;
};
/// Player prepares the group's stabilizer state and measures syndromes.
struct StabilizerStrategy {
  StabilizerGroup group;
};
using Strategy = std::variant<AlphaStrategy, StabilizerStrategy>;

struct GameResult {
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  double win_rate = 0.0;
  double ci_low = 0.0;    // Wilson 95%
  double ci_high = 0.0;
  double sigma = 0.0;     // Wilson half-width / 1.96
  double floor = 0.0;     // Pr(L)(1-delta) + (1-Pr(L))/2, L = {|e| <= w} given e != 0
  double pr_learnable_nonzero = 0.0;
  std::uint64_t shots_per_trial = 0;
};

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
  double half_width = 0.0;
};
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.96);

/// e ~ x^{|e|}/(1+3x)^n conditioned on e != 0.
PauliString sample_nonzero_error(int n, double x, Rng& rng);

/// Referee/player discrimination game between the depolarizing channel and a
/// spike channel Lambda_(e,s). The player is non-adaptive: it collects
/// N = plan_samples(probe, eps, delta, w) outcomes, and after e is revealed
/// answers "not depolarizing" iff |lambda-hat(e)| > eps when it can estimate
/// lambda(e), otherwise it flips a fair coin.
GameResult run_game(const GameConfig& cfg, const Strategy& strategy);

}  // namespace pauliprobe
