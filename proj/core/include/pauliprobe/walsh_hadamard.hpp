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

#include "pauliprobe/pauli_string.hpp"

namespace pauliprobe {

/// Dense real table over all 4^n Pauli labels, indexed by PauliString::index().
class RealFunctionOnPaulis {
 public:
  RealFunctionOnPaulis() = default;
  /// Zero-filled table for n qubits.
  explicit RealFunctionOnPaulis(int n);
  /// Takes ownership of `values`; throws ShapeError unless the length is 4^n.
  RealFunctionOnPaulis(int n, std::vector<double> values);

  /// Infers n from the length; throws ShapeError if it is not a positive power of 4.
  static RealFunctionOnPaulis from_values(std::vector<double> values);

  int num_qubits() const { return n_; }
  std::size_t size() const { return values_.size(); }

  double operator[](std::uint64_t index) const { return values_[index]; }
  double& operator[](std::uint64_t index) { return values_[index]; }
  double at(const PauliString& a) const;

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

 private:
  int n_ = 0;
  std::vector<double> values_;
};

enum class TransformDirection { kForward, kInverse };

/// In-place symplectic Walsh-Hadamard transform of a length-4^n buffer.
///
/// Forward: F(b) = sum_a (-1)^<a,b> f(a). Inverse divides by 4^n.
/// Each qubit contributes two butterfly stages (x-bit stride and z-bit stride)
/// followed by the x/z swap that turns the dot-product kernel into the
/// symplectic one. Throws ShapeError if the length is not a power of 4.
void walsh_hadamard_in_place(std::span<double> values, TransformDirection direction);

RealFunctionOnPaulis walsh_hadamard(const RealFunctionOnPaulis& f, TransformDirection direction);

/// Plain (dot-product) Hadamard transform over Z_2^m, length 2^m, unnormalized.
void hadamard_in_place(std::span<double> values);

/// log4 of the length, or -1 if not a power of 4.
int qubits_for_length(std::size_t length);

}  // namespace pauliprobe
