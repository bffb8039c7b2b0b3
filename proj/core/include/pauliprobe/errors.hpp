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

#include <stdexcept>
#include <string>

namespace pauliprobe {

// Operand sizes disagree (qubit counts, table lengths).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A table does not have a 4^n (or 2^m) length.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A generator tuple contains the identity or an unknown symbol.
class InvalidTupleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A scalar argument is outside the documented range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Error rates do not form a probability distribution.
class ValidityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Closed form evaluated outside its validity window.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Estimator normalization vanishes.
class DegenerateProbeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested eigenvalue is not reachable by the measured stabilizer group.
class NotCoveredError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Dense oracle objects exceed the dimension cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace pauliprobe
