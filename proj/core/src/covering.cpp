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

#include "pauliprobe/covering.hpp"

#include <cmath>
#include <string>

#include "pauliprobe/errors.hpp"
#include "pauliprobe/rng.hpp"

namespace pauliprobe {
namespace {

class BitSet {
 public:
  explicit BitSet(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

 private:
  std::vector<std::uint64_t> words_;
};

std::uint64_t uncovered_in(const StabilizerGroup& g, const BitSet& uncovered) {
  std::uint64_t count = 0;
  g.for_each_sys_index([&](std::uint64_t b) { count += uncovered.test(b); });
  return count;
}

}  // namespace

std::uint64_t cn_upper_bound(std::uint64_t p_size, double sigma) {
  if (p_size < 1) throw RangeError("target set must be nonempty");
  if (!(sigma >= 1.0)) throw RangeError("covering power must be >= 1");
  const double p = static_cast<double>(p_size);
  const double raw = std::ceil(p * std::log(p) / sigma);
  return raw < 1.0 ? 1 : static_cast<std::uint64_t>(raw);
}

GreedyResult greedy_cover(int n, int k, int w, const GreedyOptions& options) {
  if (n > 16) throw RangeError("greedy cover keeps a dense 4^n table; n must be <= 16");
  const UniformFamily family(n, k, w);
  GreedyResult result;
  result.covering = Covering{n, k, w, {}};
  result.family = family.kind();
  result.family_size = family.size();
  result.target_size = count_paulis_of_weight(n, w);
  result.sigma_formula = sigma_formula(n, k, w);
  result.sigma_measured = family.member(0).sys_weight_count(w);
  result.bound = cn_upper_bound(result.target_size, static_cast<double>(result.sigma_measured));

  BitSet uncovered(std::uint64_t{1} << (2 * n));
  for_each_pauli_of_weight(n, w, [&](const PauliString& p) { uncovered.set(p.index()); });
  std::uint64_t remaining = result.target_size;
  const std::uint64_t offset = derive_seed(options.seed, 0) % family.size();

  while (remaining > 0) {
    result.uncovered_history.push_back(remaining);
    const std::uint64_t target =
        (remaining * result.sigma_measured + result.target_size - 1) / result.target_size;
    std::optional<std::uint64_t> chosen;
    std::uint64_t best_index = 0;
    std::uint64_t best_gain = 0;
    for (std::uint64_t t = 0; t < family.size(); ++t) {
      const std::uint64_t idx = (offset + t) % family.size();
      const std::uint64_t gain = uncovered_in(family.member(idx), uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best_index = idx;
      }
      if (!options.argmax && gain >= target) {
        chosen = idx;
        break;
      }
    }
    if (!chosen) {
      if (!options.argmax) result.fallback_used = true;
      if (best_gain == 0) throw NotCoveredError("uniform family cannot cover the remaining strings");
      chosen = best_index;
    }
    StabilizerGroup g = family.member(*chosen);
    g.for_each_sys_index([&](std::uint64_t b) {
      if (uncovered.test(b)) {
        uncovered.reset(b);
        --remaining;
      }
    });
    result.covering.groups.push_back(std::move(g));
  }
  result.uncovered_history.push_back(0);
  return result;
}

CoverageReport verify_covering(const Covering& covering) {
  CoverageReport report;
  std::uint64_t total = 0;
  for_each_pauli_of_weight(covering.n, covering.w, [&](const PauliString& p) {
    ++total;
    for (const auto& g : covering.groups) {
      if (g.sys_contains(p)) return;
    }
    ++report.uncovered_count;
    if (!report.worst_uncovered) report.worst_uncovered = p;
  });
  report.covered_fraction =
      static_cast<double>(total - report.uncovered_count) / static_cast<double>(total);
  return report;
}

nlohmann::json covering_to_json(const Covering& covering) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : covering.groups) {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& gen : g.generators()) labels.push_back(gen.to_string());
    groups.push_back(std::move(labels));
  }
  return {{"n", covering.n}, {"k", covering.k}, {"w", covering.w}, {"groups", std::move(groups)}};
}

Covering covering_from_json(const nlohmann::json& doc) {
  Covering c;
  c.n = doc.at("n").get<int>();
  c.k = doc.at("k").get<int>();
  c.w = doc.at("w").get<int>();
  if (c.n < 1 || c.k < 0 || c.k > c.n || c.w < 0 || c.w > c.n) {
    throw RangeError("covering header out of range");
  }
  for (const auto& labels : doc.at("groups")) {
    std::vector<PauliString> gens;
    for (const auto& text : labels) gens.push_back(PauliString::parse(text.get<std::string>()));
    c.groups.push_back(StabilizerGroup::create(c.k, c.n, std::move(gens)));
  }
  return c;
}

}  // namespace pauliprobe
