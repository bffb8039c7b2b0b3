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

#include "pauliprobe/uniform_family.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "pauliprobe/errors.hpp"

namespace pauliprobe {
namespace {

constexpr char kOps[3] = {'X', 'Y', 'Z'};

void check_op(char op) {
  if (op != 'X' && op != 'Y' && op != 'Z') {
    throw InvalidTupleError(std::string("generator tuple entry must be X, Y or Z, got '") + op + "'");
  }
}

void check_indices(int n, const std::vector<int>& idx, const char* what) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int q : idx) {
    if (q < 0 || q >= n) throw ShapeError(std::string(what) + ": qubit index out of range");
    if (seen[static_cast<std::size_t>(q)]) throw ShapeError(std::string(what) + ": duplicate qubit index");
    seen[static_cast<std::size_t>(q)] = true;
  }
}

std::vector<int> complement(int n, const std::vector<int>& s) {
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int q : s) used[static_cast<std::size_t>(q)] = true;
  std::vector<int> out;
  for (int q = 0; q < n; ++q) {
    if (!used[static_cast<std::size_t>(q)]) out.push_back(q);
  }
  return out;
}

PauliString embed(int k, const PauliString& sys) {
  return k == 0 ? sys : concat(PauliString(k), sys);
}

// g, g|A_j, and cycle(g_{B_j}) cycle(g_{B_j+1}) as n-qubit system strings.
std::vector<PauliString> high_generators(int n, const PauliString& g, const std::vector<int>& a,
                                         const std::vector<int>& b) {
  std::vector<PauliString> out{g};
  for (int q : a) out.push_back(PauliString::single(n, q, g.op(q)));
  for (std::size_t j = 0; j + 1 < b.size(); ++j) {
    PauliString p(n);
    p.set_op(b[j], cycle_op(g.op(b[j])));
    p.set_op(b[j + 1], cycle_op(g.op(b[j + 1])));
    out.push_back(p);
  }
  return out;
}

void check_high_partition(int n, const PauliString& g, const std::vector<int>& rest,
                          const std::vector<int>& a, const std::vector<int>& b,
                          std::size_t want_a, std::size_t want_b) {
  if (g.num_qubits() != n) throw ShapeError("g must act on the n system qubits");
  if (a.size() != want_a || b.size() != want_b) throw ShapeError("partition sizes are wrong");
  std::vector<int> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  check_indices(n, ab, "partition");
  std::sort(ab.begin(), ab.end());
  if (ab != rest) throw ShapeError("A and B must exhaust the non-Bell system qubits");
  for (int q = 0; q < n; ++q) {
    const bool in_support = std::binary_search(rest.begin(), rest.end(), q);
    if ((g.op(q) != 'I') != in_support) throw ShapeError("g must be supported exactly on A u B");
  }
  if (!std::is_sorted(b.begin(), b.end())) throw ShapeError("B must be sorted ascending");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw RangeError("family size overflows 64 bits");
  }
  return a * b;
}

std::uint64_t pow3(int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, 3);
  return r;
}

std::vector<char> ops_from_index(std::uint64_t index, int len) {
  std::vector<char> ops(static_cast<std::size_t>(len));
  for (int j = len - 1; j >= 0; --j) {
    ops[static_cast<std::size_t>(j)] = kOps[index % 3];
    index /= 3;
  }
  return ops;
}

double dbinom(int n, int k) { return static_cast<double>(binomial(n, k)); }

}  // namespace

char cycle_op(char op) {
  switch (op) {
    case 'X': return 'Y';
    case 'Y': return 'Z';
    case 'Z': return 'X';
    default: return op;
  }
}

StabilizerGroup build_uniform_low(int n, const std::vector<char>& ops) {
  if (static_cast<int>(ops.size()) != n) throw ShapeError("tuple length must equal n");
  std::vector<PauliString> gens;
  for (int j = 0; j < n; ++j) {
    check_op(ops[static_cast<std::size_t>(j)]);
    gens.push_back(PauliString::single(n, j, ops[static_cast<std::size_t>(j)]));
  }
  return StabilizerGroup::create(0, n, std::move(gens));
}

StabilizerGroup build_uniform_high(int n, int w, const PauliString& g, const std::vector<int>& a,
                                   const std::vector<int>& b) {
  if (!(2 * w > n && w <= n)) throw RangeError("high construction needs n/2 < w <= n");
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;
  check_high_partition(n, g, all, a, b, static_cast<std::size_t>(2 * (n - w)),
                       static_cast<std::size_t>(2 * w - n));
  return StabilizerGroup::create(0, n, high_generators(n, g, a, b));
}

std::vector<PauliString> build_bell_generators(int k, int n, const std::vector<int>& s) {
  if (k < 0 || k > n) throw RangeError("Bell generators need 0 <= k <= n");
  if (static_cast<int>(s.size()) != k) throw ShapeError("S must list k system qubits");
  check_indices(n, s, "S");
  std::vector<PauliString> out;
  for (int j = 0; j < k; ++j) {
    for (char op : {'X', 'Z'}) {
      PauliString p(k + n);
      p.set_op(j, op);
      p.set_op(k + s[static_cast<std::size_t>(j)], op);
      out.push_back(p);
    }
  }
  return out;
}

StabilizerGroup build_uniform_ancilla_low(int n, int k, int w, const std::vector<int>& s,
                                          const std::vector<char>& ops) {
  if (w < 0 || w > n || 2 * w > k + n) throw RangeError("ancilla-low construction needs 2w <= k+n");
  std::vector<PauliString> gens = build_bell_generators(k, n, s);
  const std::vector<int> t = complement(n, s);
  if (ops.size() != t.size()) throw ShapeError("tuple length must equal n-k");
  for (std::size_t j = 0; j < t.size(); ++j) {
    check_op(ops[j]);
    gens.push_back(PauliString::single(k + n, k + t[j], ops[j]));
  }
  return StabilizerGroup::create(k, n, std::move(gens));
}

StabilizerGroup build_uniform_ancilla_high(int n, int k, int w, const std::vector<int>& s,
                                           const PauliString& g, const std::vector<int>& a,
                                           const std::vector<int>& b) {
  if (!(2 * w > k + n && w <= n)) throw RangeError("ancilla-high construction needs 2w > k+n");
  std::vector<PauliString> gens = build_bell_generators(k, n, s);
  const std::vector<int> t = complement(n, s);
  check_high_partition(n, g, t, a, b, static_cast<std::size_t>(2 * (n - w)),
                       static_cast<std::size_t>(2 * w - n - k));
  for (const auto& p : high_generators(n, g, a, b)) gens.push_back(embed(k, p));
  return StabilizerGroup::create(k, n, std::move(gens));
}

double sigma_low(int n, int w) { return dbinom(n, w); }

double sigma_high_bound(int n, int w) {
  return dbinom(2 * (n - w), n - w) * std::ldexp(1.0, 2 * w - n - 1);
}

double sigma_ancilla_low(int n, int k, int w) {
  double total = 0.0;
  for (int m = 0; m <= k; ++m) total += dbinom(k, m) * std::pow(3.0, m) * dbinom(n - k, w - m);
  return total;
}

double sigma_ancilla_high_bound(int n, int k, int w) {
  double total = 0.0;
  for (int m = 0; m <= k; ++m) {
    total += dbinom(k, m) * std::pow(3.0, m) * dbinom(2 * (n - w), (n - k) - (w - m));
  }
  return total * std::ldexp(1.0, 2 * w - n - k - 1);
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kLow: return "low";
    case FamilyKind::kHigh: return "high";
    case FamilyKind::kAncillaLow: return "ancilla-low";
    case FamilyKind::kAncillaHigh: return "ancilla-high";
  }
  return "?";
}

SigmaFormula sigma_formula(int n, int k, int w) {
  if (k == 0) {
    return 2 * w <= n ? SigmaFormula{sigma_low(n, w), true} : SigmaFormula{sigma_high_bound(n, w), false};
  }
  return 2 * w <= k + n ? SigmaFormula{sigma_ancilla_low(n, k, w), true}
                        : SigmaFormula{sigma_ancilla_high_bound(n, k, w), false};
}

std::vector<int> unrank_combination(const std::vector<int>& pool, int r, std::uint64_t index) {
  const int m = static_cast<int>(pool.size());
  if (r < 0 || r > m || index >= binomial(m, r)) throw RangeError("combination rank out of range");
  std::vector<int> out;
  int start = 0;
  for (int slot = 0; slot < r; ++slot) {
    for (int i = start; i < m; ++i) {
      const std::uint64_t with_i = binomial(m - i - 1, r - slot - 1);
      if (index < with_i) {
        out.push_back(pool[static_cast<std::size_t>(i)]);
        start = i + 1;
        break;
      }
      index -= with_i;
    }
  }
  return out;
}

UniformFamily::UniformFamily(int n, int k, int w) : n_(n), k_(k), w_(w) {
  if (n < 1 || n > kMaxQubits) throw RangeError("n out of range");
  if (k < 0 || k > n || k + n > kMaxQubits) throw RangeError("k must lie in [0, n]");
  if (w < 0 || w > n) throw RangeError("w must lie in [0, n]");
  if (k == 0) {
    kind_ = 2 * w <= n ? FamilyKind::kLow : FamilyKind::kHigh;
  } else {
    kind_ = 2 * w <= k + n ? FamilyKind::kAncillaLow : FamilyKind::kAncillaHigh;
  }
  ops_count_ = pow3(n - k);
  switch (kind_) {
    case FamilyKind::kLow: size_ = ops_count_; break;
    case FamilyKind::kHigh: size_ = checked_mul(binomial(n, 2 * w - n), ops_count_); break;
    case FamilyKind::kAncillaLow: size_ = checked_mul(binomial(n, k), ops_count_); break;
    case FamilyKind::kAncillaHigh:
      inner_count_ = binomial(n - k, 2 * (n - w));
      size_ = checked_mul(checked_mul(binomial(n, k), inner_count_), ops_count_);
      break;
  }
}

StabilizerGroup UniformFamily::member(std::uint64_t index) const {
  if (index >= size_) throw RangeError("family member index out of range");
  std::vector<int> all(static_cast<std::size_t>(n_));
  for (int q = 0; q < n_; ++q) all[static_cast<std::size_t>(q)] = q;
  const std::uint64_t ops_index = index % ops_count_;
  const std::uint64_t outer = index / ops_count_;
  const std::vector<char> ops = ops_from_index(ops_index, n_ - k_);
  switch (kind_) {
    case FamilyKind::kLow: return build_uniform_low(n_, ops);
    case FamilyKind::kHigh: {
      const std::vector<int> b = unrank_combination(all, 2 * w_ - n_, outer);
      const std::vector<int> a = complement(n_, b);
      PauliString g(n_);
      for (int q = 0; q < n_; ++q) g.set_op(q, ops[static_cast<std::size_t>(q)]);
      return build_uniform_high(n_, w_, g, a, b);
    }
    case FamilyKind::kAncillaLow: {
      const std::vector<int> s = unrank_combination(all, k_, outer);
      return build_uniform_ancilla_low(n_, k_, w_, s, ops);
    }
    case FamilyKind::kAncillaHigh: {
      const std::vector<int> s = unrank_combination(all, k_, outer / inner_count_);
      const std::vector<int> t = complement(n_, s);
      const std::vector<int> a = unrank_combination(t, 2 * (n_ - w_), outer % inner_count_);
      std::vector<int> b;
      std::set_difference(t.begin(), t.end(), a.begin(), a.end(), std::back_inserter(b));
      PauliString g(n_);
      for (std::size_t j = 0; j < t.size(); ++j) g.set_op(t[j], ops[j]);
      return build_uniform_ancilla_high(n_, k_, w_, s, g, a, b);
    }
  }
  throw RangeError("unknown family kind");
}

}  // namespace pauliprobe
