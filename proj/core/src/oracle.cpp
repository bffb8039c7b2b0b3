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

#include "pauliprobe/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "pauliprobe/bounds.hpp"
#include "pauliprobe/errors.hpp"
#include "pauliprobe/rng.hpp"
#include "pauliprobe/syndrome.hpp"
#include "pauliprobe/uniform_family.hpp"

namespace pauliprobe::oracle {
namespace {

using cd = std::complex<double>;

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseOperator single_qubit(char op) {
  DenseOperator m = DenseOperator::Zero(2, 2);
  switch (op) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("unknown Pauli symbol");
  }
  return m;
}

DenseOperator identity(int qubits) {
  const int d = 1 << qubits;
  return DenseOperator::Identity(d, d);
}

// I_{k} (x) P on the trailing qubits.
DenseOperator embed_system(const PauliString& sys, int ancillas) {
  const DenseOperator p = dense_pauli(sys);
  return ancillas == 0 ? p : kron(identity(ancillas), p);
}

int qubits_of(const DenseOperator& m) {
  const Eigen::Index d = m.rows();
  if (d != m.cols() || d < 1 || (d & (d - 1)) != 0) throw ShapeError("operator is not square of power-of-two size");
  int q = 0;
  while ((Eigen::Index{1} << q) < d) ++q;
  return q;
}

}  // namespace

int checked_dim(int qubits) {
  if (qubits < 0 || qubits > 6) {
    throw CapacityError("dense oracle capped at dimension " + std::to_string(kDimCap));
  }
  return 1 << qubits;
}

DenseOperator dense_pauli(const PauliString& a) {
  checked_dim(a.num_qubits());
  DenseOperator out = DenseOperator::Identity(1, 1);
  for (int q = 0; q < a.num_qubits(); ++q) out = kron(out, single_qubit(a.op(q)));
  return out;
}

DenseOperator dense_channel_apply(const PauliChannel& channel, const DenseOperator& rho) {
  const int total = qubits_of(rho);
  checked_dim(total);
  const int n = channel.num_qubits();
  if (n > total) throw DimensionError("channel acts on more qubits than the state has");
  DenseOperator out = DenseOperator::Zero(rho.rows(), rho.cols());
  const auto& p = channel.error_rates();
  for (std::uint64_t a = 0; a < p.size(); ++a) {
    if (p[a] == 0.0) continue;
    const DenseOperator k = embed_system(PauliString::from_index(n, a), total - n);
    out += p[a] * k * rho * k.adjoint();
  }
  return out;
}

DenseState dense_bell_state(int n, const PauliString& a) {
  const int d = 1 << n;
  checked_dim(2 * n);
  DenseState phi = DenseState::Zero(d * d);
  for (int i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return embed_system(a, n) * phi;
}

DenseState dense_alpha_state(const AlphaProbe& probe, const std::vector<double>& phases) {
  const int n = probe.n;
  checked_dim(2 * n);
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  if (!phases.empty() && phases.size() != count) throw ShapeError("need one phase per label");
  DenseState psi = DenseState::Zero(Eigen::Index{1} << (2 * n));
  for (std::uint64_t a = 0; a < count; ++a) {
    const double c = std::sqrt(coefficient_sq(probe, weight_index(a)));
    const cd phase = phases.empty() ? cd(1.0, 0.0) : std::polar(1.0, phases[a]);
    psi += c * phase * dense_bell_state(n, PauliString::from_index(n, a));
  }
  return psi;
}

DenseOperator dense_probe_density(const Probe& probe) {
  if (const auto* p = std::get_if<AlphaProbe>(&probe)) {
    const DenseState psi = dense_alpha_state(*p);
    return psi * psi.adjoint();
  }
  const auto& w = std::get<WernerProbe>(probe);
  const DenseState phi = dense_bell_state(w.n, PauliString(w.n));
  const int dd = 1 << (2 * w.n);
  const double mixed = (1.0 - w.lam_w) / (dd - 1.0);
  return mixed * DenseOperator::Identity(dd, dd) + (w.lam_w - mixed) * (phi * phi.adjoint());
}

double dense_overlap_E(const DenseOperator& rho, const PauliString& b) {
  const DenseOperator pb = dense_pauli(b);
  const DenseOperator pbt = pb.transpose();
  return (kron(pbt, pb) * rho).trace().real();
}

std::vector<double> dense_outcome_distribution(const PauliChannel& channel, const DenseOperator& rho) {
  const int n = channel.num_qubits();
  const DenseOperator out = dense_channel_apply(channel, rho);
  std::vector<double> pr(std::size_t{1} << (2 * n));
  for (std::uint64_t v = 0; v < pr.size(); ++v) {
    const DenseState psi = dense_bell_state(n, PauliString::from_index(n, v));
    pr[v] = (psi.adjoint() * out * psi)(0, 0).real();
  }
  return pr;
}

std::vector<double> dense_outcome_distribution(const PauliChannel& channel, const Probe& probe) {
  if (probe_qubits(probe) != channel.num_qubits()) throw DimensionError("probe and channel sizes differ");
  return dense_outcome_distribution(channel, dense_probe_density(probe));
}

double dense_partial_trace_entropy(const DenseOperator& rho, int ancilla_qubits, Keep keep) {
  const int total = qubits_of(rho);
  checked_dim(total);
  if (ancilla_qubits < 0 || ancilla_qubits > total) throw DimensionError("bad bipartition");
  const int da = 1 << ancilla_qubits;
  const int ds = 1 << (total - ancilla_qubits);
  const int dk = keep == Keep::kAncilla ? da : ds;
  DenseOperator red = DenseOperator::Zero(dk, dk);
  for (int a1 = 0; a1 < da; ++a1) {
    for (int a2 = 0; a2 < da; ++a2) {
      for (int s1 = 0; s1 < ds; ++s1) {
        for (int s2 = 0; s2 < ds; ++s2) {
          if (keep == Keep::kAncilla && s1 == s2) red(a1, a2) += rho(a1 * ds + s1, a2 * ds + s2);
          if (keep == Keep::kSystem && a1 == a2) red(s1, s2) += rho(a1 * ds + s1, a2 * ds + s2);
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(red);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double p = solver.eigenvalues()(i);
    if (p > 1e-14) entropy -= p * std::log2(p);
  }
  return entropy;
}

DenseOperator dense_stabilizer_state(const StabilizerGroup& group) {
  const int total = group.num_total();
  const int d = checked_dim(total);
  DenseOperator rho = DenseOperator::Identity(d, d) / static_cast<double>(d);
  for (const auto& g : group.generators()) {
    rho = (DenseOperator::Identity(d, d) + dense_pauli(g)) * rho;
  }
  return rho;
}

std::vector<double> dense_syndrome_distribution(const StabilizerGroup& group, const PauliChannel& channel) {
  if (channel.num_qubits() != group.num_system()) throw DimensionError("channel and group sizes differ");
  const int total = group.num_total();
  const int d = checked_dim(total);
  const DenseOperator rho = dense_stabilizer_state(group);
  const DenseOperator out = dense_channel_apply(channel, rho);
  std::vector<DenseOperator> gens;
  for (const auto& g : group.generators()) gens.push_back(dense_pauli(g));
  std::vector<double> pr(std::size_t{1} << total);
  for (std::uint64_t s = 0; s < pr.size(); ++s) {
    DenseOperator proj = DenseOperator::Identity(d, d);
    for (int j = 0; j < total; ++j) {
      const double sign = ((s >> j) & 1U) ? -1.0 : 1.0;
      proj = proj * (DenseOperator::Identity(d, d) + sign * gens[static_cast<std::size_t>(j)]) * 0.5;
    }
    pr[s] = (proj * out).trace().real();
  }
  return pr;
}

double dense_weighted_sum_max_eigenvalue(int n, double x) {
  const int d = checked_dim(2 * n);
  DenseOperator m = DenseOperator::Zero(d, d);
  for (std::uint64_t e = 0; e < (std::uint64_t{1} << (2 * n)); ++e) {
    const PauliString pe = PauliString::from_index(n, e);
    const DenseOperator p = dense_pauli(pe);
    m += pr_e(pe, x) * kron(p, p);
  }
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m);
  return solver.eigenvalues().maxCoeff();
}

double hermiticity_defect(const DenseOperator& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

std::vector<OracleCheck> run_oracle_checks(int seeds, std::uint64_t base_seed) {
  OracleCheck outcome{"bell_outcome_distribution", 0.0, 1e-9};
  OracleCheck syndrome{"syndrome_distribution", 0.0, 1e-9};
  OracleCheck entropy{"entanglement_entropy", 0.0, 1e-9};
  OracleCheck eigen{"weighted_sum_max_eigenvalue", 0.0, 1e-9};
  OracleCheck overlap{"overlap_E", 0.0, 1e-9};
  for (int t = 0; t < seeds; ++t) {
    const std::uint64_t seed = derive_seed(base_seed, static_cast<std::uint64_t>(t));
    Rng rng(seed);
    const double alpha = uniform01(rng);
    const double lam_w = uniform01(rng);
    const double x = 0.05 + 0.95 * uniform01(rng);
    for (int n = 1; n <= 2; ++n) {
      const PauliChannel channel = random_channel(n, seed + static_cast<std::uint64_t>(n));
      for (const Probe probe : {Probe{AlphaProbe{n, alpha}}, Probe{WernerProbe{n, lam_w}}}) {
        const auto fast = bell_outcome_distribution(channel, probe);
        const auto dense = dense_outcome_distribution(channel, probe);
        const DenseOperator rho = dense_probe_density(probe);
        for (std::uint64_t v = 0; v < dense.size(); ++v) {
          outcome.max_deviation = std::max(outcome.max_deviation, std::abs(fast[v] - dense[v]));
          const PauliString b = PauliString::from_index(n, v);
          overlap.max_deviation =
              std::max(overlap.max_deviation, std::abs(overlap_E(probe, b) - dense_overlap_E(rho, b)));
        }
      }
      for (int k = 0; k <= 1 && k <= n; ++k) {
        const int w = std::min(n, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
        const UniformFamily family(n, k, w);
        const StabilizerGroup g = family.member(rng() % family.size());
        const auto fast = syndrome_distribution(g, channel);
        const auto dense = dense_syndrome_distribution(g, channel);
        for (std::size_t s = 0; s < dense.size(); ++s) {
          syndrome.max_deviation = std::max(syndrome.max_deviation, std::abs(fast[s] - dense[s]));
        }
      }
      eigen.max_deviation = std::max(
          eigen.max_deviation, std::abs(weighted_sum_max_eigenvalue(n, x) - dense_weighted_sum_max_eigenvalue(n, x)));
    }
    for (int n = 1; n <= 3; ++n) {
      const AlphaProbe probe{n, alpha};
      const double dense = dense_partial_trace_entropy(dense_probe_density(probe), n, Keep::kAncilla);
      entropy.max_deviation = std::max(entropy.max_deviation, std::abs(entanglement_entropy(probe) - dense));
    }
  }
  return {outcome, overlap, syndrome, entropy, eigen};
}

}  // namespace pauliprobe::oracle
