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
#include <vector>

#include "pauliprobe/channel.hpp"
#include "pauliprobe/pauli_string.hpp"
#include "pauliprobe/stabilizer_group.hpp"

namespace pauliprobe {

/// Destabilizers d_i over k+n qubits with <d_i, g_j> = delta_ij, from Gaussian
/// elimination on the rows sigma(g_j) (x and z halves swapped) with pivots
/// taken from the most significant bit down and free variables set to 0.
std::vector<PauliString> destabilizers(const StabilizerGroup& group);

/// Coset representative v(s) = XOR of d_i over the set bits of s.
PauliString coset_representative(const StabilizerGroup& group, std::uint64_t syndrome);

/// Pr(s) = 2^{-(k+n)} sum_c lambda(Sys(a_c)) (-1)^{c.s}, where a_c is the
/// product of the generators selected by c and s indexes the generator signs.
/// Clipped at 0 and renormalized. Throws DimensionError on mismatched n.
std::vector<double> syndrome_distribution(const StabilizerGroup& group, const PauliChannel& channel);

/// I.i.d. syndrome draws; deterministic per seed.
std::vector<std::uint64_t> sample_syndromes(const StabilizerGroup& group, const PauliChannel& channel,
                                            std::uint64_t shots, std::uint64_t seed);

/// Mean of (-1)^{<v(s), a*>} with a* = group.min_preimage(b).
/// Throws NotCoveredError if b is not in Sys(S).
double estimate_from_syndromes(std::span<const std::uint64_t> syndromes, const StabilizerGroup& group,
                               const PauliString& b);

}  // namespace pauliprobe
