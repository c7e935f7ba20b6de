// Copyright 2026 The kicked-ising Authors
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

#ifndef KISING_ORACLE_H
#define KISING_ORACLE_H

#include <cstdint>

#include <Eigen/Dense>

#include "kising/entanglement_dynamics.h"
#include "kising/symmetric_core.h"

namespace kising::oracle {

/// Largest register the brute-force reference accepts.
constexpr int kMaxQubits = 12;
/// Largest register for which a 2^N x 2^N matrix is materialized.
constexpr int kMaxMaterialized = 10;

/// State of N qubits in the computational basis. Bit N-1-l of the index is qubit l,
/// so qubit 0 is the most significant bit.
struct FullState {
    int n_qubits = 0;
    Eigen::VectorXcd amplitudes;
};

FullState product_state(const CoherentParams &params, int n);

/// exp(-i tau sigma^y) on every qubit.
void apply_kick(FullState &state, double tau);

/// exp(-i J tau sum_{l<l'} sigma^z_l sigma^z_l').
void apply_ising(FullState &state, double j, double tau);

/// One Floquet period: kick, then Ising phase.
void apply_floquet(FullState &state, double j, double tau);

FullState full_state_evolve(const CoherentParams &params, int n, double j, double tau, std::int64_t n_kicks);

/// Materialized one-period unitary.
Eigen::MatrixXcd full_floquet(int n, double j, double tau);

/// Reduced state of qubit 0.
SingleQubitRdm full_rdm_qubit(const FullState &state);

/// Reduced density matrix of qubits 0..n_a-1 (2^n_a square).
Eigen::MatrixXcd full_rdm_block(const FullState &state, int n_a);

/// max |U P - P U| with P the product of sigma^y over all qubits.
double parity_commutation_check(int n, double j, double tau);

/// 2^N x (N+1) isometry whose column q is the normalized Dicke state |w_q>.
Eigen::MatrixXcd symmetric_isometry(int n);

/// Dicke amplitudes <w_q|state>.
Eigen::VectorXcd project_symmetric(const FullState &state);

/// Embeds Dicke amplitudes into the full register.
FullState embed_symmetric(const Eigen::VectorXcd &coeffs, int n);

/// V^dagger U V for the symmetric isometry V, built without materializing U.
Eigen::MatrixXcd projected_floquet(int n, double j, double tau);

}  // namespace kising::oracle

#endif
