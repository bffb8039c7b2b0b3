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
#include <utility>

#include <json.hpp>

#include "pauliprobe/pauli_string.hpp"
#include "pauliprobe/walsh_hadamard.hpp"

namespace pauliprobe {

inline constexpr double kNegativeSlack = 1e-12;
inline constexpr double kSumTolerance = 1e-9;

/// n-qubit Pauli channel held as both error rates p(a) and eigenvalues
/// lambda(b) = sum_a (-1)^<a,b> p(a). Immutable once built.
class PauliChannel {
 public:
  int num_qubits() const { return p_.num_qubits(); }
  const RealFunctionOnPaulis& error_rates() const { return p_; }
  const RealFunctionOnPaulis& eigenvalues() const { return lambda_; }
  double error_rate(const PauliString& a) const { return p_.at(a); }
  double eigenvalue(const PauliString& b) const { return lambda_.at(b); }

 private:
  friend PauliChannel channel_from_error_rates(RealFunctionOnPaulis p);
  friend PauliChannel channel_from_eigenvalues(RealFunctionOnPaulis lambda);
  PauliChannel(RealFunctionOnPaulis p, RealFunctionOnPaulis lambda)
      : p_(std::move(p)), lambda_(std::move(lambda)) {}

  RealFunctionOnPaulis p_;
  RealFunctionOnPaulis lambda_;
};

/// Validates p (entries >= -1e-12, sum 1 +- 1e-9) and derives lambda.
/// Throws ValidityError.
PauliChannel channel_from_error_rates(RealFunctionOnPaulis p);

/// Derives p by the inverse transform and validates it. Throws ValidityError
/// naming the most negative entry.
PauliChannel channel_from_eigenvalues(RealFunctionOnPaulis lambda);

PauliChannel identity_channel(int n);
PauliChannel depolarizing_channel(int n);

/// lambda(b) = delta_{b,0} + 2 s eps delta_{b,e}. Requires 0 < eps <= 1/2,
/// s = +-1 and e != 0; throws RangeError otherwise.
PauliChannel spike_channel(int n, const PauliString& e, int s, double eps);

/// Error rates from normalized i.i.d. Exp(1) draws; deterministic per seed.
PauliChannel random_channel(int n, std::uint64_t seed);

/// {"n": int, "p": [4^n reals]}
nlohmann::json channel_to_json(const PauliChannel& channel);
PauliChannel channel_from_json(const nlohmann::json& doc);

}  // namespace pauliprobe
