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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pauliprobe/channel.hpp"
#include "pauliprobe/pauli_string.hpp"
#include "pauliprobe/rng.hpp"
#include "pauliprobe/walsh_hadamard.hpp"

namespace pauliprobe {

/// Interpolation between n Bell pairs (alpha = 1) and the product state
/// (alpha = 0); |c_a|^2 = alpha delta_{a,0} + (1-alpha) (1/2)^{n-|a|} (1/6)^{|a|}.
struct AlphaProbe {
  int n = 1;
  double alpha = 1.0;
};

/// Isotropic mixture of the n-pair Bell projector (weight lam_w) and the
/// maximally mixed state.
struct WernerProbe {
  int n = 1;
  double lam_w = 1.0;
};

using Probe = std::variant<AlphaProbe, WernerProbe>;

/// Checked constructors; throw RangeError outside [0, 1] or for bad n.
AlphaProbe make_alpha_probe(int n, double alpha);
WernerProbe make_werner_probe(int n, double lam_w);

int probe_qubits(const Probe& probe);
std::string describe(const Probe& probe);

/// |c_a(alpha)|^2 for a string of weight w.
double coefficient_sq(const AlphaProbe& probe, int w);

/// E(b) = Tr[(P_b^T (x) P_b) rho_in]; depends on b only through |b| (and b = 0).
double overlap_E(const Probe& probe, const PauliString& b);
double overlap_E_weight(const Probe& probe, int w);

/// Reduced-state spectrum: `q` with multiplicity 2^n - 1 and one `big_q`.
struct RdmSpectrum {
  double q = 0.0;
  double q_multiplicity = 0.0;
  double big_q = 0.0;
};
RdmSpectrum rdm_spectrum(const AlphaProbe& probe);

/// Von Neumann entropy (bits) of either half of |Psi_in(alpha)>.
double entanglement_entropy(const AlphaProbe& probe);

/// Entanglement of formation (bits) of the Werner probe. Valid for n >= 2 and
/// lam_w in [4(2^n-1)/4^n, 1]; throws DomainError elsewhere.
double eof_werner(const WernerProbe& probe);
double eof_window_lower_edge(int n);

/// Pr(v) = 4^-n sum_b (-1)^<b,v> lambda(b) E(b), clipped at 0 and renormalized.
RealFunctionOnPaulis bell_outcome_distribution(const PauliChannel& channel, const Probe& probe);

/// Inverse-CDF sampler over a fixed 4^n (or any length) table.
class OutcomeSampler {
 public:
  explicit OutcomeSampler(std::span<const double> probabilities);
  std::uint64_t operator()(Rng& rng) const;

 private:
  std::vector<double> cdf_;
};

struct OutcomeRecord {
  Probe probe;
  std::string channel_id;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> outcomes;  // canonical labels v^(l)

  int num_qubits() const { return probe_qubits(probe); }
  std::size_t shots() const { return outcomes.size(); }
};

/// Draws `shots` i.i.d. Bell outcomes; deterministic per seed.
OutcomeRecord sample_outcomes(const PauliChannel& channel, const Probe& probe, std::uint64_t shots,
                              std::uint64_t seed, std::string channel_id = "");

nlohmann::json record_to_json(const OutcomeRecord& rec);
OutcomeRecord record_from_json(const nlohmann::json& doc);

/// (1/N) sum_l (-1)^<b, v^(l)> / E(b). Throws DegenerateProbeError if E(b) = 0.
double estimate_eigenvalue(const OutcomeRecord& rec, const PauliString& b);

/// Every lambda-hat(b) at once, via the transform of the outcome histogram.
RealFunctionOnPaulis estimate_all(const OutcomeRecord& rec);

/// Number of weight <= w strings, sum_u C(n,u) 3^u.
double count_paulis_up_to_weight(int n, int w);

/// Smallest |E(b)| over |b| <= max_weight.
double min_overlap(const Probe& probe, int max_weight);

/// N = ceil((1/E_min^2) 2 eps^-2 ln(2M/delta)), M = #{b : |b| <= max_weight}.
std::uint64_t plan_samples(const Probe& probe, double eps, double delta, int max_weight);

}  // namespace pauliprobe
