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
#include <functional>
#include <optional>
#include <vector>

#include "pauliprobe/gf2.hpp"
#include "pauliprobe/pauli_string.hpp"

namespace pauliprobe {

/// System part: the last n qubits of a (k+n)-qubit label.
PauliString sys_part(const PauliString& a, int k);
/// Ancilla part: the first k qubits (k >= 1).
PauliString anc_part(const PauliString& a, int k);

/// Abelian Pauli subgroup on k ancilla + n system qubits with k+n independent
/// commuting generators. Ancilla qubits come first in every label.
class StabilizerGroup {
 public:
  /// Validates count, qubit width, pairwise commutation and GF(2)
  /// independence. Throws ShapeError / ValidityError.
  static StabilizerGroup create(int k, int n, std::vector<PauliString> generators);

  int num_ancillas() const { return k_; }
  int num_system() const { return n_; }
  int num_total() const { return k_ + n_; }
  const std::vector<PauliString>& generators() const { return gens_; }

  /// GF(2) membership of the phase-free label.
  bool contains(const PauliString& a) const;

  /// All 2^{k+n} elements (Gray-code order starting at the identity).
  void for_each_element(const std::function<void(const PauliString&)>& visit) const;
  std::vector<PauliString> elements() const;

  /// Label of the product of the generators selected by `combination`.
  std::uint64_t element_index(std::uint64_t combination) const;

  /// Distinct system parts (canonical n-qubit indices) of the group, each once.
  std::vector<std::uint64_t> sys_image() const;
  template <class Visit>
  void for_each_sys_index(Visit&& visit) const;

  int sys_rank() const { return static_cast<int>(sys_rows_.size()); }
  bool sys_contains(const PauliString& b) const;
  /// Number of weight-w strings in the system image.
  std::uint64_t sys_weight_count(int w) const;

  /// Minimum-index element a* with Sys(a*) = b, or nullopt if b is not reached.
  std::optional<PauliString> min_preimage(const PauliString& b) const;

 private:
  StabilizerGroup() = default;

  int k_ = 0;
  int n_ = 0;
  std::vector<PauliString> gens_;
  Gf2Basis full_;
  Gf2Basis sys_;
  Gf2Basis kernel_;
  std::vector<std::uint64_t> sys_rows_;
};

template <class Visit>
void StabilizerGroup::for_each_sys_index(Visit&& visit) const {
  const std::size_t r = sys_rows_.size();
  std::uint64_t cur = 0;
  visit(cur);
  const std::uint64_t count = std::uint64_t{1} << r;
  for (std::uint64_t i = 1; i < count; ++i) {
    cur ^= sys_rows_[static_cast<std::size_t>(std::countr_zero(i))];
    visit(cur);
  }
}

/// Pairwise symplectic check over a generator list.
bool mutually_commute(const std::vector<PauliString>& generators);

/// GF(2) rank of a list of labels.
int gf2_rank(const std::vector<PauliString>& labels);

}  // namespace pauliprobe
