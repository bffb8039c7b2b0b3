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
#include <random>

namespace pauliprobe {

using Rng = std::mt19937_64;

/// One splitmix64 step: returns the mixed output and advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives the seed of stream `stream` under master seed `seed`.
/// Two splitmix64 rounds over (seed, stream) so that neighbouring streams
/// are decorrelated.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// mt19937_64 seeded from derive_seed(seed, stream).
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(Rng& rng);

}  // namespace pauliprobe
