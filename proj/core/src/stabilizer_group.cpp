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

#include "pauliprobe/stabilizer_group.hpp"

#include <bit>
#include <string>

#include "pauliprobe/errors.hpp"

namespace pauliprobe {
namespace {

std::uint64_t low_mask(int qubits) {
  return qubits >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * qubits)) - 1;
}

}  // namespace

PauliString sys_part(const PauliString& a, int k) {
  if (k < 0 || k >= a.num_qubits()) throw RangeError("ancilla count must leave a system part");
  return restrict_to(a, k, a.num_qubits() - k);
}

PauliString anc_part(const PauliString& a, int k) {
  if (k < 1 || k > a.num_qubits()) throw RangeError("ancilla part needs 1 <= k <= width");
  return restrict_to(a, 0, k);
}

bool mutually_commute(const std::vector<PauliString>& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (symplectic_inner(generators[i], generators[j]) != 0) return false;
    }
  }
  return true;
}

int gf2_rank(const std::vector<PauliString>& labels) {
  Gf2Basis basis;
  for (const auto& a : labels) basis.insert(a.index(), 0);
  return basis.rank();
}

StabilizerGroup StabilizerGroup::create(int k, int n, std::vector<PauliString> generators) {
  if (k < 0 || n < 1 || k + n > kMaxQubits) throw ShapeError("invalid register sizes");
  const int total = k + n;
  if (static_cast<int>(generators.size()) != total) {
    throw ShapeError("expected " + std::to_string(total) + " generators, got " +
                     std::to_string(generators.size()));
  }
  StabilizerGroup g;
  g.k_ = k;
  g.n_ = n;
  for (const auto& gen : generators) {
    if (gen.num_qubits() != total) throw ShapeError("generator width differs from k+n");
  }
  if (!mutually_commute(generators)) throw ValidityError("generators do not commute");
  const std::uint64_t sys_mask = low_mask(n);
  for (std::size_t j = 0; j < generators.size(); ++j) {
    const std::uint64_t tag = std::uint64_t{1} << j;
    if (!g.full_.insert(generators[j].index(), tag)) {
      throw ValidityError("generators are not independent");
    }
    if (!g.sys_.insert(generators[j].index() & sys_mask, tag)) {
      // This combination of generators has a trivial system part.
      std::uint64_t label = 0;
      const std::uint64_t combo = g.sys_.last_dependency();
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if ((combo >> i) & 1U) label ^= generators[i].index();
      }
      g.kernel_.insert(label, combo);
    }
  }
  g.gens_ = std::move(generators);
  g.sys_rows_ = g.sys_.rows();
  return g;
}

bool StabilizerGroup::contains(const PauliString& a) const {
  if (a.num_qubits() != num_total()) return false;
  return full_.reduce(a.index()).residual == 0;
}

std::uint64_t StabilizerGroup::element_index(std::uint64_t combination) const {
  std::uint64_t label = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if ((combination >> i) & 1U) label ^= gens_[i].index();
  }
  return label;
}

void StabilizerGroup::for_each_element(
    const std::function<void(const PauliString&)>& visit) const {
  const int total = num_total();
  std::uint64_t cur = 0;
  visit(PauliString::from_index(total, cur));
  const std::uint64_t count = std::uint64_t{1} << total;
  for (std::uint64_t i = 1; i < count; ++i) {
    cur ^= gens_[static_cast<std::size_t>(std::countr_zero(i))].index();
    visit(PauliString::from_index(total, cur));
  }
}

std::vector<PauliString> StabilizerGroup::elements() const {
  std::vector<PauliString> out;
  out.reserve(std::size_t{1} << num_total());
  for_each_element([&](const PauliString& a) { out.push_back(a); });
  return out;
}

std::vector<std::uint64_t> StabilizerGroup::sys_image() const {
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << sys_rows_.size());
  for_each_sys_index([&](std::uint64_t b) { out.push_back(b); });
  return out;
}

bool StabilizerGroup::sys_contains(const PauliString& b) const {
  if (b.num_qubits() != n_) return false;
  return sys_.reduce(b.index()).residual == 0;
}

std::uint64_t StabilizerGroup::sys_weight_count(int w) const {
  std::uint64_t count = 0;
  for_each_sys_index([&](std::uint64_t b) { count += weight_index(b) == w; });
  return count;
}

std::optional<PauliString> StabilizerGroup::min_preimage(const PauliString& b) const {
  if (b.num_qubits() != n_) throw DimensionError("preimage target has the wrong qubit count");
  const Gf2Basis::Reduction r = sys_.reduce(b.index());
  if (r.residual != 0) return std::nullopt;
  const std::uint64_t a0 = element_index(r.combination);
  return PauliString::from_index(num_total(), kernel_.reduce(a0).residual);
}

}  // namespace pauliprobe
