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
#include <vector>

#include <json.hpp>

#include "pauliprobe/pauli_string.hpp"
#include "pauliprobe/stabilizer_group.hpp"
#include "pauliprobe/uniform_family.hpp"

namespace pauliprobe {

/// Stabilizer groups (over k+n qubits) meant to cover every weight-w system string.
struct Covering {
  int n = 1;
  int k = 0;
  int w = 0;
  std::vector<StabilizerGroup> groups;
};

/// max(ceil(P ln P / sigma), 1). Throws RangeError unless P >= 1 and sigma >= 1.
std::uint64_t cn_upper_bound(std::uint64_t p_size, double sigma);

struct GreedyOptions {
  bool argmax = false;     // always take the best group instead of the first good one
  std::uint64_t seed = 0;  // rotates the start of the family scan
};

struct GreedyResult {
  Covering covering;
  FamilyKind family = FamilyKind::kLow;
  std::uint64_t family_size = 0;
  std::uint64_t target_size = 0;      // |P(w)|
  std::uint64_t sigma_measured = 0;   // weight-w count of the first family member
  SigmaFormula sigma_formula;
  std::uint64_t bound = 0;            // cn_upper_bound(|P|, sigma_measured)
  std::vector<std::uint64_t> uncovered_history;  // |P_j| before each pick, then 0
  bool fallback_used = false;         // some step found no group meeting the target
};

/// Density greedy over the uniform family for (n, k, w). At step j the first
/// group (cyclic scan order) covering at least ceil(|P_j| sigma / |P|)
/// uncovered strings is taken. Dense bookkeeping limits n to 16.
GreedyResult greedy_cover(int n, int k, int w, const GreedyOptions& options = {});

struct CoverageReport {
  double covered_fraction = 0.0;
  std::uint64_t uncovered_count = 0;
  std::optional<PauliString> worst_uncovered;  // first uncovered string in enumeration order
};

CoverageReport verify_covering(const Covering& covering);

/// {"n", "k", "w", "groups": [[generator labels]]}
nlohmann::json covering_to_json(const Covering& covering);
Covering covering_from_json(const nlohmann::json& doc);

}  // namespace pauliprobe
