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

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace pauliprobe {

/// Row-reduced basis of a subspace of GF(2)^64. Each row remembers which
/// inserted vectors it is a combination of (as a bit mask of insertion order).
class Gf2Basis {
 public:
  struct Reduction {
    std::uint64_t residual = 0;
    std::uint64_t combination = 0;
  };

  /// Inserts `v` tagged with `tag`; returns false (and leaves the basis
  /// unchanged) if `v` is already in the span. The reduction of a dependent
  /// vector is available through last_dependency().
  bool insert(std::uint64_t v, std::uint64_t tag) {
    Reduction r = reduce(v);
    r.combination ^= tag;
    if (r.residual == 0) {
      last_dependency_ = r.combination;
      return false;
    }
    const int pivot = 63 - std::countl_zero(r.residual);
    for (int p : pivots_) {
      Row& row = rows_[static_cast<std::size_t>(p)];
      if ((row.v >> pivot) & 1U) {
        row.v ^= r.residual;
        row.tag ^= r.combination;
      }
    }
    rows_[static_cast<std::size_t>(pivot)] = Row{r.residual, r.combination};
    pivots_.push_back(pivot);
    return true;
  }

  /// Reduces `v` against the basis. The residual is zero iff v is in the span;
  /// otherwise it is the minimum element of the coset v + span.
  Reduction reduce(std::uint64_t v) const {
    Reduction r{v, 0};
    // Rows are fully reduced, so one pass over the pivots suffices.
    for (int p : pivots_) {
      if ((r.residual >> p) & 1U) {
        r.residual ^= rows_[static_cast<std::size_t>(p)].v;
        r.combination ^= rows_[static_cast<std::size_t>(p)].tag;
      }
    }
    return r;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }
  std::uint64_t last_dependency() const { return last_dependency_; }

  /// Basis rows in insertion order of their pivots.
  std::vector<std::uint64_t> rows() const {
    std::vector<std::uint64_t> out;
    out.reserve(pivots_.size());
    for (int p : pivots_) out.push_back(rows_[static_cast<std::size_t>(p)].v);
    return out;
  }

 private:
  struct Row {
    std::uint64_t v = 0;
    std::uint64_t tag = 0;
  };
  std::array<Row, 64> rows_{};
  std::vector<int> pivots_;
  std::uint64_t last_dependency_ = 0;
};

}  // namespace pauliprobe
