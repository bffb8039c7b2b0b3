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

#include "pauliprobe/pauli_string.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "pauliprobe/errors.hpp"

namespace pauliprobe {
namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kZMask = 0x5555555555555555ULL;

std::uint64_t label_mask(int n) {
  return n >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * n)) - 1;
}

void check_n(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw RangeError("qubit count " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxQubits) + "]");
  }
}

void check_same_n(const PauliString& a, const PauliString& b, const char* what) {
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError(std::string(what) + ": qubit counts differ (" +
                         std::to_string(a.num_qubits()) + " vs " +
                         std::to_string(b.num_qubits()) + ")");
  }
}

std::uint64_t op_bits(char op) {
  switch (op) {
    case 'I': return 0;
    case 'Z': return 1;
    case 'X': return 2;
    case 'Y': return 3;
    default: throw std::invalid_argument(std::string("not a Pauli symbol: '") + op + "'");
  }
}

constexpr char kOpChars[4] = {'I', 'Z', 'X', 'Y'};

}  // namespace

PauliString::PauliString(int n) : n_(n), bits_(0) { check_n(n); }

PauliString PauliString::from_index(int n, std::uint64_t index) {
  check_n(n);
  if ((index & ~label_mask(n)) != 0) {
    throw RangeError("index does not fit in 2n bits");
  }
  return PauliString(n, index);
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("Pauli token must have 1.." + std::to_string(kMaxQubits) +
                                " symbols");
  }
  const int n = static_cast<int>(text.size());
  std::uint64_t bits = 0;
  for (char c : text) bits = (bits << 2) | op_bits(c);
  return PauliString(n, bits);
}

PauliString PauliString::single(int n, int qubit, char op) {
  PauliString p(n);
  p.set_op(qubit, op);
  return p;
}

bool PauliString::x_bit(int qubit) const { return (bits_ >> (shift_of(qubit) + 1)) & 1U; }
bool PauliString::z_bit(int qubit) const { return (bits_ >> shift_of(qubit)) & 1U; }

char PauliString::op(int qubit) const {
  if (qubit < 0 || qubit >= n_) throw RangeError("qubit index out of range");
  return kOpChars[(bits_ >> shift_of(qubit)) & 3U];
}

void PauliString::set_op(int qubit, char op) {
  if (qubit < 0 || qubit >= n_) throw RangeError("qubit index out of range");
  const int s = shift_of(qubit);
  bits_ = (bits_ & ~(std::uint64_t{3} << s)) | (op_bits(op) << s);
}

std::string PauliString::to_string() const {
  std::string out(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) out[static_cast<std::size_t>(q)] = op(q);
  return out;
}

int symplectic_inner_index(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t ax = (a >> 1) & kZMask;
  const std::uint64_t az = a & kZMask;
  const std::uint64_t bx = (b >> 1) & kZMask;
  const std::uint64_t bz = b & kZMask;
  return std::popcount((ax & bz) ^ (az & bx)) & 1;
}

int weight_index(std::uint64_t a) { return std::popcount((a | (a >> 1)) & kZMask); }

int symplectic_inner(const PauliString& a, const PauliString& b) {
  check_same_n(a, b, "symplectic_inner");
  return symplectic_inner_index(a.index(), b.index());
}

int weight(const PauliString& a) { return weight_index(a.index()); }

PauliString multiply_labels(const PauliString& a, const PauliString& b) {
  check_same_n(a, b, "multiply_labels");
  return PauliString::from_index(a.num_qubits(), a.index() ^ b.index());
}

PauliString concat(const PauliString& hi, const PauliString& lo) {
  const int n = hi.num_qubits() + lo.num_qubits();
  return PauliString::from_index(n, (hi.index() << (2 * lo.num_qubits())) | lo.index());
}

PauliString restrict_to(const PauliString& a, int first, int count) {
  if (first < 0 || count < 1 || first + count > a.num_qubits()) {
    throw RangeError("restriction window outside the register");
  }
  const int tail = a.num_qubits() - first - count;
  return PauliString::from_index(count, (a.index() >> (2 * tail)) & label_mask(count));
}

void for_each_pauli_of_weight(int n, int w,
                              const std::function<void(const PauliString&)>& visit) {
  check_n(n);
  if (w < 0 || w > n) {
    throw RangeError("weight " + std::to_string(w) + " outside [0, " + std::to_string(n) + "]");
  }
  std::vector<int> support(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) support[static_cast<std::size_t>(i)] = i;
  std::vector<int> ops(static_cast<std::size_t>(w));
  static constexpr std::uint64_t kNonIdentity[3] = {2, 3, 1};  // X, Y, Z
  while (true) {
    std::fill(ops.begin(), ops.end(), 0);
    while (true) {
      std::uint64_t bits = 0;
      for (int i = 0; i < w; ++i) {
        const int q = support[static_cast<std::size_t>(i)];
        bits |= kNonIdentity[ops[static_cast<std::size_t>(i)]] << (2 * (n - 1 - q));
      }
      visit(PauliString::from_index(n, bits));
      int i = w - 1;
      while (i >= 0 && ops[static_cast<std::size_t>(i)] == 2) ops[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++ops[static_cast<std::size_t>(i)];
    }
    // next combination
    int i = w - 1;
    while (i >= 0 && support[static_cast<std::size_t>(i)] == n - w + i) --i;
    if (i < 0) break;
    ++support[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < w; ++j) {
      support[static_cast<std::size_t>(j)] = support[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::vector<PauliString> enumerate_paulis_of_weight(int n, int w) {
  std::vector<PauliString> out;
  out.reserve(static_cast<std::size_t>(count_paulis_of_weight(n, w)));
  for_each_pauli_of_weight(n, w, [&](const PauliString& p) { out.push_back(p); });
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) throw RangeError("binomial overflow");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t count_paulis_of_weight(int n, int w) {
  if (w < 0 || w > n) return 0;
  u128 r = binomial(n, w);
  for (int i = 0; i < w; ++i) {
    r *= 3;
    if (r > std::numeric_limits<std::uint64_t>::max()) throw RangeError("count overflow");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace pauliprobe
