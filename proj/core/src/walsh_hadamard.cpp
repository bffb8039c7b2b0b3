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

#include "pauliprobe/walsh_hadamard.hpp"

#include <bit>
#include <string>
#include <utility>

#include "pauliprobe/errors.hpp"

namespace pauliprobe {

int qubits_for_length(std::size_t length) {
  if (length < 4 || !std::has_single_bit(length)) return -1;
  const int bits = std::countr_zero(length);
  return bits % 2 == 0 ? bits / 2 : -1;
}

RealFunctionOnPaulis::RealFunctionOnPaulis(int n) : n_(n) {
  if (n < 1 || n > 16) throw RangeError("dense tables support 1..16 qubits");
  values_.assign(std::size_t{1} << (2 * n), 0.0);
}

RealFunctionOnPaulis::RealFunctionOnPaulis(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1 || qubits_for_length(values_.size()) != n) {
    throw ShapeError("table length " + std::to_string(values_.size()) + " is not 4^" +
                     std::to_string(n));
  }
}

RealFunctionOnPaulis RealFunctionOnPaulis::from_values(std::vector<double> values) {
  const int n = qubits_for_length(values.size());
  if (n < 1) {
    throw ShapeError("table length " + std::to_string(values.size()) + " is not a power of 4");
  }
  return RealFunctionOnPaulis(n, std::move(values));
}

double RealFunctionOnPaulis::at(const PauliString& a) const {
  if (a.num_qubits() != n_) throw DimensionError("label and table qubit counts differ");
  return values_[a.index()];
}

void hadamard_in_place(std::span<double> values) {
  const std::size_t len = values.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double u = values[j];
        const double v = values[j + h];
        values[j] = u + v;
        values[j + h] = u - v;
      }
    }
  }
}

void walsh_hadamard_in_place(std::span<double> values, TransformDirection direction) {
  const int n = qubits_for_length(values.size());
  if (n < 1) {
    throw ShapeError("transform length " + std::to_string(values.size()) +
                     " is not a power of 4");
  }
  const std::size_t len = values.size();
  for (int q = 0; q < n; ++q) {
    const std::size_t z_stride = std::size_t{1} << (2 * q);
    const std::size_t x_stride = z_stride << 1;
    const std::size_t block = x_stride << 1;
    for (std::size_t base = 0; base < len; base += block) {
      for (std::size_t off = 0; off < z_stride; ++off) {
        double& f00 = values[base + off];
        double& f01 = values[base + off + z_stride];
        double& f10 = values[base + off + x_stride];
        double& f11 = values[base + off + x_stride + z_stride];
        // z-bit butterfly
        const double a0 = f00 + f01, a1 = f00 - f01;
        const double b0 = f10 + f11, b1 = f10 - f11;
        // x-bit butterfly
        const double g00 = a0 + b0, g01 = a1 + b1;
        const double g10 = a0 - b0, g11 = a1 - b1;
        // symplectic pairing: output (bx, bz) reads dot-product entry (bz, bx)
        f00 = g00;
        f01 = g10;
        f10 = g01;
        f11 = g11;
      }
    }
  }
  if (direction == TransformDirection::kInverse) {
    const double scale = 1.0 / static_cast<double>(len);
    for (double& v : values) v *= scale;
  }
}

RealFunctionOnPaulis walsh_hadamard(const RealFunctionOnPaulis& f, TransformDirection direction) {
  RealFunctionOnPaulis out = f;
  walsh_hadamard_in_place(out.values(), direction);
  return out;
}

}  // namespace pauliprobe
