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
#include <string>
#include <string_view>
#include <vector>

namespace pauliprobe {

inline constexpr int kMaxQubits = 32;

/// Phase-free label of an n-qubit Pauli operator.
///
/// The 2n label bits are stored per qubit interleaved as x1 z1 x2 z2 ... xn zn,
/// with x1 as the most significant bit. The resulting integer is the canonical
/// index used by every dense table in the library: single-qubit I, Z, X, Y map
/// to 0, 1, 2, 3.
class PauliString {
 public:
  PauliString() = default;

  /// Identity on `n` qubits. Throws RangeError unless 1 <= n <= kMaxQubits.
  explicit PauliString(int n);

  /// Label with the given canonical index. Throws RangeError if the index does
  /// not fit in 2n bits.
  static PauliString from_index(int n, std::uint64_t index);

  /// Parses a length-n token over {I,X,Y,Z}. Throws std::invalid_argument.
  static PauliString parse(std::string_view text);

  /// Single-site operator ('I','X','Y','Z') on `qubit` of an n-qubit register.
  static PauliString single(int n, int qubit, char op);

  int num_qubits() const { return n_; }
  std::uint64_t index() const { return bits_; }

  bool x_bit(int qubit) const;
  bool z_bit(int qubit) const;
  /// One of 'I','X','Y','Z'.
  char op(int qubit) const;
  void set_op(int qubit, char op);

  bool is_identity() const { return bits_ == 0; }

  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  PauliString(int n, std::uint64_t bits) : n_(n), bits_(bits) {}
  int shift_of(int qubit) const { return 2 * (n_ - 1 - qubit); }

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

// Index-level helpers. Callers guarantee both indices belong to the same n.
int symplectic_inner_index(std::uint64_t a, std::uint64_t b);
int weight_index(std::uint64_t a);

/// Returns 1 iff P_a and P_b anticommute. Throws DimensionError on mismatched n.
int symplectic_inner(const PauliString& a, const PauliString& b);

/// Number of non-identity tensor factors.
int weight(const PauliString& a);

/// Label of P_a P_b up to phase (bitwise XOR).
PauliString multiply_labels(const PauliString& a, const PauliString& b);

/// Concatenates registers: `hi` occupies the first qubits.
PauliString concat(const PauliString& hi, const PauliString& lo);

/// Restriction to qubits [first, first + count).
PauliString restrict_to(const PauliString& a, int first, int count);

/// Visits every weight-w string on n qubits: supports in lexicographic
/// combination order, then operator assignments with the last qubit fastest
/// (X < Y < Z). Exactly C(n,w) 3^w calls. Throws RangeError unless 0 <= w <= n.
void for_each_pauli_of_weight(int n, int w,
                              const std::function<void(const PauliString&)>& visit);

std::vector<PauliString> enumerate_paulis_of_weight(int n, int w);

/// Number of weight-w strings, C(n,w) 3^w.
std::uint64_t count_paulis_of_weight(int n, int w);

/// Exact binomial coefficient; throws RangeError on uint64 overflow.
std::uint64_t binomial(int n, int k);

}  // namespace pauliprobe

template <>
struct std::hash<pauliprobe::PauliString> {
  std::size_t operator()(const pauliprobe::PauliString& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.index() * 131 + static_cast<std::uint64_t>(p.num_qubits()));
  }
};
