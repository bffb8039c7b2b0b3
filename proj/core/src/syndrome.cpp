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

#include "pauliprobe/syndrome.hpp"

#include <bit>

#include "pauliprobe/errors.hpp"
#include "pauliprobe/probe.hpp"
#include "pauliprobe/rng.hpp"
#include "pauliprobe/walsh_hadamard.hpp"

namespace pauliprobe {
namespace {

constexpr std::uint64_t kZMask = 0x5555555555555555ULL;

// Swapping x and z turns the symplectic form into the plain dot product.
std::uint64_t swap_xz(std::uint64_t a) { return ((a >> 1) & kZMask) | ((a & kZMask) << 1); }

}  // namespace

std::vector<PauliString> destabilizers(const StabilizerGroup& group) {
  const int total = group.num_total();
  const auto& gens = group.generators();
  struct Row {
    std::uint64_t bits;
    std::uint64_t rhs;
  };
  std::vector<Row> rows;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    rows.push_back(Row{swap_xz(gens[j].index()), std::uint64_t{1} << j});
  }
  std::vector<int> pivot_col(rows.size(), -1);
  std::size_t next = 0;
  for (int col = 2 * total - 1; col >= 0 && next < rows.size(); --col) {
    std::size_t hit = next;
    while (hit < rows.size() && !((rows[hit].bits >> col) & 1U)) ++hit;
    if (hit == rows.size()) continue;
    std::swap(rows[hit], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && ((rows[r].bits >> col) & 1U)) {
        rows[r].bits ^= rows[next].bits;
        rows[r].rhs ^= rows[next].rhs;
      }
    }
    pivot_col[next] = col;
    ++next;
  }
  if (next != rows.size()) throw ValidityError("generator matrix is rank deficient");
  std::vector<PauliString> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::uint64_t d = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if ((rows[r].rhs >> i) & 1U) d |= std::uint64_t{1} << pivot_col[r];
    }
    out.push_back(PauliString::from_index(total, d));
  }
  return out;
}

PauliString coset_representative(const StabilizerGroup& group, std::uint64_t syndrome) {
  const int total = group.num_total();
  if (total < 64 && (syndrome >> total) != 0) throw RangeError("syndrome has too many bits");
  const std::vector<PauliString> d = destabilizers(group);
  std::uint64_t v = 0;
  for (int i = 0; i < total; ++i) {
    if ((syndrome >> i) & 1U) v ^= d[static_cast<std::size_t>(i)].index();
  }
  return PauliString::from_index(total, v);
}

std::vector<double> syndrome_distribution(const StabilizerGroup& group, const PauliChannel& channel) {
  if (channel.num_qubits() != group.num_system()) {
    throw DimensionError("channel and group system sizes differ");
  }
  const int total = group.num_total();
  if (total > 26) throw CapacityError("syndrome table would exceed 2^26 entries");
  const std::uint64_t sys_mask = (std::uint64_t{1} << (2 * group.num_system())) - 1;
  const auto& gens = group.generators();
  const auto& lambda = channel.eigenvalues();
  std::vector<double> table(std::size_t{1} << total);
  std::uint64_t label = 0;
  table[0] = lambda[0];
  for (std::uint64_t c = 1; c < table.size(); ++c) {
    // After this toggle, label is the product selected by the Gray code of c.
    label ^= gens[static_cast<std::size_t>(std::countr_zero(c))].index();
    const std::uint64_t gray = c ^ (c >> 1);
    table[gray] = lambda[label & sys_mask];
  }
  hadamard_in_place(table);
  const double scale = 1.0 / static_cast<double>(table.size());
  double sum = 0.0;
  for (double& v : table) {
    v *= scale;
    if (v < 0.0) {
      if (v < -1e-9) throw ValidityError("syndrome distribution has a negative entry");
      v = 0.0;
    }
    sum += v;
  }
  for (double& v : table) v /= sum;
  return table;
}

std::vector<std::uint64_t> sample_syndromes(const StabilizerGroup& group, const PauliChannel& channel,
                                            std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw RangeError("shots must be >= 1");
  const std::vector<double> pr = syndrome_distribution(group, channel);
  const OutcomeSampler sampler(pr);
  Rng rng = make_rng(seed);
  std::vector<std::uint64_t> out(shots);
  for (auto& s : out) s = sampler(rng);
  return out;
}

double estimate_from_syndromes(std::span<const std::uint64_t> syndromes, const StabilizerGroup& group,
                               const PauliString& b) {
  const std::optional<PauliString> lift = group.min_preimage(b);
  if (!lift) throw NotCoveredError("b = " + b.to_string() + " is not in Sys(S)");
  if (syndromes.empty()) throw RangeError("no syndrome samples");
  const std::vector<PauliString> d = destabilizers(group);
  // <v(s), a*> = sum_i s_i <d_i, a*>, so precompute the per-bit parities.
  std::uint64_t parity_mask = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (symplectic_inner(d[i], *lift)) parity_mask |= std::uint64_t{1} << i;
  }
  long long total = 0;
  for (auto s : syndromes) total += (std::popcount(s & parity_mask) & 1) ? -1 : 1;
  return static_cast<double>(total) / static_cast<double>(syndromes.size());
}

}  // namespace pauliprobe
