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

#include "pauliprobe/channel.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "pauliprobe/errors.hpp"
#include "pauliprobe/rng.hpp"

namespace pauliprobe {
namespace {

void validate_rates(const RealFunctionOnPaulis& p) {
  double sum = 0.0;
  double worst = 0.0;
  std::uint64_t worst_index = 0;
  for (std::uint64_t a = 0; a < p.size(); ++a) {
    const double v = p[a];
    if (!std::isfinite(v)) throw ValidityError("error rate is not finite");
    sum += v;
    if (v < worst) {
      worst = v;
      worst_index = a;
    }
  }
  if (worst < -kNegativeSlack) {
    std::ostringstream msg;
    msg << "negative error rate p(" << PauliString::from_index(p.num_qubits(), worst_index).to_string()
        << ") = " << worst;
    throw ValidityError(msg.str());
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream msg;
    msg << "error rates sum to " << sum << ", not 1";
    throw ValidityError(msg.str());
  }
}

}  // namespace

PauliChannel channel_from_error_rates(RealFunctionOnPaulis p) {
  validate_rates(p);
  RealFunctionOnPaulis lambda = walsh_hadamard(p, TransformDirection::kForward);
  return PauliChannel(std::move(p), std::move(lambda));
}

PauliChannel channel_from_eigenvalues(RealFunctionOnPaulis lambda) {
  RealFunctionOnPaulis p = walsh_hadamard(lambda, TransformDirection::kInverse);
  validate_rates(p);
  return PauliChannel(std::move(p), std::move(lambda));
}

PauliChannel identity_channel(int n) {
  RealFunctionOnPaulis p(n);
  p[0] = 1.0;
  return channel_from_error_rates(std::move(p));
}

PauliChannel depolarizing_channel(int n) {
  RealFunctionOnPaulis lambda(n);
  lambda[0] = 1.0;
  return channel_from_eigenvalues(std::move(lambda));
}

PauliChannel spike_channel(int n, const PauliString& e, int s, double eps) {
  if (e.num_qubits() != n) throw DimensionError("spike label has the wrong qubit count");
  if (e.is_identity()) throw RangeError("spike label must be non-identity");
  if (s != 1 && s != -1) throw RangeError("spike sign must be +1 or -1");
  if (!(eps > 0.0 && eps <= 0.5)) throw RangeError("spike eps must lie in (0, 1/2]");
  RealFunctionOnPaulis lambda(n);
  lambda[0] = 1.0;
  lambda[e.index()] = 2.0 * s * eps;
  return channel_from_eigenvalues(std::move(lambda));
}

PauliChannel random_channel(int n, std::uint64_t seed) {
  RealFunctionOnPaulis p(n);
  Rng rng = make_rng(seed);
  std::exponential_distribution<double> draw(1.0);
  double sum = 0.0;
  for (double& v : p.values()) {
    v = draw(rng);
    sum += v;
  }
  for (double& v : p.values()) v /= sum;
  return channel_from_error_rates(std::move(p));
}

nlohmann::json channel_to_json(const PauliChannel& channel) {
  const auto rates = channel.error_rates().values();
  return {{"n", channel.num_qubits()}, {"p", std::vector<double>(rates.begin(), rates.end())}};
}

PauliChannel channel_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("p")) {
    throw ShapeError("channel JSON needs fields \"n\" and \"p\"");
  }
  const int n = doc.at("n").get<int>();
  return channel_from_error_rates(RealFunctionOnPaulis(n, doc.at("p").get<std::vector<double>>()));
}

}  // namespace pauliprobe
