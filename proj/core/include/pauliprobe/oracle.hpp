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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pauliprobe/channel.hpp"
#include "pauliprobe/pauli_string.hpp"
#include "pauliprobe/probe.hpp"
#include "pauliprobe/stabilizer_group.hpp"

namespace pauliprobe::oracle {

// Dense reference objects. Registers are ordered ancilla first; qubit 0 is
// the most significant tensor factor. Everything here is a test fixture.

using DenseOperator = Eigen::MatrixXcd;
using DenseState = Eigen::VectorXcd;

inline constexpr int kDimCap = 64;

/// Throws CapacityError if 2^qubits exceeds kDimCap.
int checked_dim(int qubits);

/// tensor_j i^{x_j z_j} X^{x_j} Z^{z_j}
DenseOperator dense_pauli(const PauliString& a);

/// (I_anc (x) Lambda)(rho) via the Kraus sum over p(a); the channel acts on
/// the last channel.num_qubits() qubits of rho.
DenseOperator dense_channel_apply(const PauliChannel& channel, const DenseOperator& rho);

/// |Psi_a> = (I (x) P_a) 2^{-n/2} sum_i |i>_anc |i>_sys.
DenseState dense_bell_state(int n, const PauliString& a);

/// |Psi_in(alpha)> = sum_a c_a |Psi_a>, c_a = sqrt(|c_a|^2) e^{i phase_a}.
/// `phases` (length 4^n) defaults to all zero.
DenseState dense_alpha_state(const AlphaProbe& probe, const std::vector<double>& phases = {});

/// Density matrix of either probe family over 2n qubits.
DenseOperator dense_probe_density(const Probe& probe);

/// Tr[(P_b^T (x) P_b) rho].
double dense_overlap_E(const DenseOperator& rho, const PauliString& b);

/// Pr(v) = <Psi_v| (I (x) Lambda)(rho) |Psi_v> over all 4^n labels v.
std::vector<double> dense_outcome_distribution(const PauliChannel& channel, const DenseOperator& rho);
std::vector<double> dense_outcome_distribution(const PauliChannel& channel, const Probe& probe);

enum class Keep { kAncilla, kSystem };
/// Entropy (bits) of the reduced state of a bipartite operator with
/// `ancilla_qubits` leading qubits; eigenvalues below 1e-14 are dropped.
double dense_partial_trace_entropy(const DenseOperator& rho, int ancilla_qubits, Keep keep);

/// Stabilizer state prod_j (I + G_j)/2, dense.
DenseOperator dense_stabilizer_state(const StabilizerGroup& group);

/// Tr[Pi_s (I (x) Lambda)(rho_S)] with Pi_s = prod_j (I + (-1)^{s_j} G_j)/2.
std::vector<double> dense_syndrome_distribution(const StabilizerGroup& group, const PauliChannel& channel);

/// Largest eigenvalue of sum_e x^{|e|}/(1+3x)^n P_e^T (x) P_e.
double dense_weighted_sum_max_eigenvalue(int n, double x);

/// Max |M - M^dagger|.
double hermiticity_defect(const DenseOperator& m);

/// Cross-checks every closed form against its dense counterpart.
struct OracleCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 1e-9;
  bool passed() const { return max_deviation <= tolerance; }
};
std::vector<OracleCheck> run_oracle_checks(int seeds, std::uint64_t base_seed);

}  // namespace pauliprobe::oracle
