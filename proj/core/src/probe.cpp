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

#include "pauliprobe/probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pauliprobe/errors.hpp"

namespace pauliprobe {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw RangeError(std::string(name) + " must lie in [0, 1]");
  }
}

void check_probe_n(int n) {
  if (n < 1 || n > kMaxQubits) throw RangeError("probe qubit count out of range");
}

double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

AlphaProbe make_alpha_probe(int n, double alpha) {
  check_probe_n(n);
  check_unit(alpha, "alpha");
  return AlphaProbe{n, alpha};
}

WernerProbe make_werner_probe(int n, double lam_w) {
  check_probe_n(n);
  check_unit(lam_w, "lam_w");
  return WernerProbe{n, lam_w};
}

int probe_qubits(const Probe& probe) {
  return std::visit([](const auto& p) { return p.n; }, probe);
}

std::string describe(const Probe& probe) {
  std::ostringstream out;
  std::visit(Overloaded{[&](const AlphaProbe& p) { out << "alpha=" << p.alpha; },
                        [&](const WernerProbe& p) { out << "lam_w=" << p.lam_w; }},
             probe);
  return out.str();
}

double coefficient_sq(const AlphaProbe& probe, int w) {
  const double spread = (1.0 - probe.alpha) * std::pow(0.5, probe.n - w) * std::pow(1.0 / 6.0, w);
  return (w == 0 ? probe.alpha : 0.0) + spread;
}

double overlap_E_weight(const Probe& probe, int w) {
  return std::visit(
      Overloaded{[&](const AlphaProbe& p) { return p.alpha + (1.0 - p.alpha) * std::pow(3.0, -w); },
                 [&](const WernerProbe& p) {
                   const double dd = std::ldexp(1.0, 2 * p.n);
                   const double flat = p.lam_w - (1.0 - p.lam_w) / (dd - 1.0);
                   return w == 0 ? dd / (dd - 1.0) * (1.0 - p.lam_w) + flat : flat;
                 }},
      probe);
}

double overlap_E(const Probe& probe, const PauliString& b) {
  if (b.num_qubits() != probe_qubits(probe)) throw DimensionError("overlap_E: qubit counts differ");
  return overlap_E_weight(probe, weight(b));
}

RdmSpectrum rdm_spectrum(const AlphaProbe& probe) {
  check_unit(probe.alpha, "alpha");
  const double d = std::ldexp(1.0, probe.n);
  const double a = std::sqrt(probe.alpha + (1.0 - probe.alpha) / d);
  const double b = std::sqrt((1.0 - probe.alpha) / d);
  // (A - B)^2 written as alpha^2 / (A + B)^2 to avoid cancellation.
  const double q = probe.alpha * probe.alpha / ((a + b) * (a + b) * d);
  return RdmSpectrum{q, d - 1.0, 1.0 - (d - 1.0) * q};
}

double entanglement_entropy(const AlphaProbe& probe) {
  check_unit(probe.alpha, "alpha");
  if (probe.alpha == 0.0) return 0.0;
  if (probe.alpha == 1.0) return static_cast<double>(probe.n);
  const RdmSpectrum s = rdm_spectrum(probe);
  return -(s.q_multiplicity * xlog2x(s.q) + xlog2x(s.big_q));
}

double eof_window_lower_edge(int n) {
  const double d = std::ldexp(1.0, n);
  return 4.0 * (d - 1.0) / (d * d);
}

double eof_werner(const WernerProbe& probe) {
  if (probe.n < 2) throw DomainError("Werner EoF formula needs n >= 2");
  if (probe.lam_w > 1.0 || probe.lam_w < eof_window_lower_edge(probe.n)) {
    throw DomainError("lam_w outside the EoF validity window");
  }
  const double d = std::ldexp(1.0, probe.n);
  return d * std::log2(d - 1.0) / (d - 2.0) * (probe.lam_w - 1.0) + probe.n;
}

RealFunctionOnPaulis bell_outcome_distribution(const PauliChannel& channel, const Probe& probe) {
  const int n = channel.num_qubits();
  if (probe_qubits(probe) != n) throw DimensionError("channel and probe qubit counts differ");
  std::vector<double> by_weight(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) by_weight[static_cast<std::size_t>(w)] = overlap_E_weight(probe, w);
  RealFunctionOnPaulis pr(n);
  const auto& lambda = channel.eigenvalues();
  for (std::uint64_t b = 0; b < pr.size(); ++b) {
    pr[b] = lambda[b] * by_weight[static_cast<std::size_t>(weight_index(b))];
  }
  walsh_hadamard_in_place(pr.values(), TransformDirection::kInverse);
  double total = 0.0;
  for (double& v : pr.values()) {
    if (v < 0.0) {
      if (v < -1e-9) throw ValidityError("outcome distribution has a negative entry");
      v = 0.0;
    }
    total += v;
  }
  for (double& v : pr.values()) v /= total;
  return pr;
}

OutcomeSampler::OutcomeSampler(std::span<const double> probabilities) {
  cdf_.reserve(probabilities.size());
  double acc = 0.0;
  for (double p : probabilities) {
    acc += p;
    cdf_.push_back(acc);
  }
  if (cdf_.empty() || !(acc > 0.0)) throw ValidityError("sampler needs positive total mass");
}

std::uint64_t OutcomeSampler::operator()(Rng& rng) const {
  const double u = uniform01(rng) * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) {
    // u rounded up to the total; take the last cell with positive mass
    it = std::lower_bound(cdf_.begin(), cdf_.end(), cdf_.back());
  }
  return static_cast<std::uint64_t>(it - cdf_.begin());
}

OutcomeRecord sample_outcomes(const PauliChannel& channel, const Probe& probe, std::uint64_t shots,
                              std::uint64_t seed, std::string channel_id) {
  if (shots < 1) throw RangeError("shots must be >= 1");
  const RealFunctionOnPaulis pr = bell_outcome_distribution(channel, probe);
  const OutcomeSampler sampler(pr.values());
  Rng rng = make_rng(seed);
  OutcomeRecord rec{probe, std::move(channel_id), seed, {}};
  rec.outcomes.resize(shots);
  for (auto& v : rec.outcomes) v = sampler(rng);
  return rec;
}

nlohmann::json record_to_json(const OutcomeRecord& rec) {
  nlohmann::json doc;
  doc["n"] = rec.num_qubits();
  std::visit(Overloaded{[&](const AlphaProbe& p) { doc["alpha"] = p.alpha; },
                        [&](const WernerProbe& p) { doc["lam_w"] = p.lam_w; }},
             rec.probe);
  doc["seed"] = rec.seed;
  doc["shots"] = rec.shots();
  if (!rec.channel_id.empty()) doc["channel_id"] = rec.channel_id;
  doc["outcomes"] = rec.outcomes;
  return doc;
}

OutcomeRecord record_from_json(const nlohmann::json& doc) {
  const int n = doc.at("n").get<int>();
  OutcomeRecord rec;
  if (doc.contains("alpha")) {
    rec.probe = make_alpha_probe(n, doc.at("alpha").get<double>());
  } else if (doc.contains("lam_w")) {
    rec.probe = make_werner_probe(n, doc.at("lam_w").get<double>());
  } else {
    throw ShapeError("outcome record needs \"alpha\" or \"lam_w\"");
  }
  rec.seed = doc.at("seed").get<std::uint64_t>();
  rec.channel_id = doc.value("channel_id", std::string{});
  rec.outcomes = doc.at("outcomes").get<std::vector<std::uint64_t>>();
  if (doc.contains("shots") && doc.at("shots").get<std::size_t>() != rec.outcomes.size()) {
    throw ShapeError("\"shots\" disagrees with the outcome count");
  }
  const std::uint64_t limit = n >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * n)) - 1;
  for (auto v : rec.outcomes) {
    if (v > limit) throw RangeError("outcome label does not fit n qubits");
  }
  return rec;
}

double estimate_eigenvalue(const OutcomeRecord& rec, const PauliString& b) {
  if (b.num_qubits() != rec.num_qubits()) throw DimensionError("estimate: qubit counts differ");
  const double e = overlap_E(rec.probe, b);
  if (e == 0.0) throw DegenerateProbeError("E(b) vanishes for this probe");
  if (rec.outcomes.empty()) throw RangeError("empty outcome record");
  long long signed_sum = 0;
  for (auto v : rec.outcomes) signed_sum += symplectic_inner_index(b.index(), v) ? -1 : 1;
  return static_cast<double>(signed_sum) / static_cast<double>(rec.outcomes.size()) / e;
}

RealFunctionOnPaulis estimate_all(const OutcomeRecord& rec) {
  const int n = rec.num_qubits();
  if (rec.outcomes.empty()) throw RangeError("empty outcome record");
  RealFunctionOnPaulis hist(n);
  for (auto v : rec.outcomes) hist[v] += 1.0;
  walsh_hadamard_in_place(hist.values(), TransformDirection::kForward);
  const double shots = static_cast<double>(rec.outcomes.size());
  std::vector<double> by_weight(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) {
    by_weight[static_cast<std::size_t>(w)] = overlap_E_weight(rec.probe, w);
    if (by_weight[static_cast<std::size_t>(w)] == 0.0) {
      throw DegenerateProbeError("E(b) vanishes for this probe");
    }
  }
  for (std::uint64_t b = 0; b < hist.size(); ++b) {
    hist[b] /= shots * by_weight[static_cast<std::size_t>(weight_index(b))];
  }
  return hist;
}

double count_paulis_up_to_weight(int n, int w) {
  double m = 0.0;
  for (int u = 0; u <= w; ++u) m += static_cast<double>(binomial(n, u)) * std::pow(3.0, u);
  return m;
}

double min_overlap(const Probe& probe, int max_weight) {
  double e_min = std::numeric_limits<double>::infinity();
  for (int u = 0; u <= max_weight; ++u) e_min = std::min(e_min, std::abs(overlap_E_weight(probe, u)));
  return e_min;
}

std::uint64_t plan_samples(const Probe& probe, double eps, double delta, int max_weight) {
  const int n = probe_qubits(probe);
  if (!(eps > 0.0)) throw RangeError("eps must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw RangeError("delta must lie in (0, 1)");
  if (max_weight < 0 || max_weight > n) throw RangeError("max_weight must lie in [0, n]");
  const double e_min = min_overlap(probe, max_weight);
  if (e_min == 0.0) throw DegenerateProbeError("E(b) vanishes on the targeted weights");
  const double m = count_paulis_up_to_weight(n, max_weight);
  const double shots = 2.0 / (eps * eps) * std::log(2.0 * m / delta) / (e_min * e_min);
  if (!(shots < 1.8e19)) throw RangeError("planned sample count overflows");
  return static_cast<std::uint64_t>(std::ceil(shots));
}

}  // namespace pauliprobe
