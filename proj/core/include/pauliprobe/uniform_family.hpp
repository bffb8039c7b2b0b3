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
#include <string>
#include <vector>

#include "pauliprobe/pauli_string.hpp"
#include "pauliprobe/stabilizer_group.hpp"

namespace pauliprobe {

// Qubit indices below are 0-based system positions. Ancilla j pairs with S[j].

/// Single-site generators ops[j] on qubit j (k = 0). ops over {X,Y,Z}.
StabilizerGroup build_uniform_low(int n, const std::vector<char>& ops);

/// Cyclic relabelling X -> Y -> Z -> X (identity stays identity).
char cycle_op(char op);

/// k = 0, n/2 < w <= n. `g` has full weight; |A| = 2(n-w), |B| = 2w-n.
/// Generators: g, g restricted to each A_j, and cycle(g_{B_j}) cycle(g_{B_j+1}).
StabilizerGroup build_uniform_high(int n, int w, const PauliString& g, const std::vector<int>& a,
                                   const std::vector<int>& b);

/// 2k generators X_anc(j) X_sys(S_j) and Z_anc(j) Z_sys(S_j) over k+n qubits.
std::vector<PauliString> build_bell_generators(int k, int n, const std::vector<int>& s);

/// 2w <= k+n. Bell pairs on S plus single-site ops[j] on the j-th qubit of the
/// sorted complement T of S (|ops| = n-k).
StabilizerGroup build_uniform_ancilla_low(int n, int k, int w, const std::vector<int>& s,
                                          const std::vector<char>& ops);

/// 2w > k+n. Bell pairs on S, plus g (an n-qubit system string supported
/// exactly on A u B) and its A / B generators as in build_uniform_high.
/// |S| = k, |A| = 2(n-w), |B| = 2w-n-k.
StabilizerGroup build_uniform_ancilla_high(int n, int k, int w, const std::vector<int>& s,
                                           const PauliString& g, const std::vector<int>& a,
                                           const std::vector<int>& b);

// Covering powers. The *_bound forms are lower bounds on the per-group count.
double sigma_low(int n, int w);
double sigma_high_bound(int n, int w);
double sigma_ancilla_low(int n, int k, int w);
double sigma_ancilla_high_bound(int n, int k, int w);

enum class FamilyKind { kLow, kHigh, kAncillaLow, kAncillaHigh };
std::string to_string(FamilyKind kind);

struct SigmaFormula {
  double value = 0.0;
  bool exact = true;  // false when only a lower bound is known
};
SigmaFormula sigma_formula(int n, int k, int w);

/// Lazily indexed uniform family for weight-w targets with k ancillas.
/// Member order: the selection of subsets (lexicographic combinations) is the
/// slow index and the operator tuple (last qubit fastest, X < Y < Z) the fast one.
///   kLow:         ops over 3^n
///   kHigh:        B subsets x g over 3^n
///   kAncillaLow:  S subsets x ops over 3^{n-k}
///   kAncillaHigh: S subsets x A subsets of T x g over 3^{n-k}
class UniformFamily {
 public:
  UniformFamily(int n, int k, int w);

  int n() const { return n_; }
  int k() const { return k_; }
  int w() const { return w_; }
  FamilyKind kind() const { return kind_; }
  std::uint64_t size() const { return size_; }
  StabilizerGroup member(std::uint64_t index) const;

 private:
  int n_, k_, w_;
  FamilyKind kind_;
  std::uint64_t ops_count_ = 1;
  std::uint64_t inner_count_ = 1;  // A subsets of T for kAncillaHigh
  std::uint64_t size_ = 0;
};

/// Lexicographic rank -> r-subset of `pool` (pool sorted ascending).
std::vector<int> unrank_combination(const std::vector<int>& pool, int r, std::uint64_t index);

}  // namespace pauliprobe
