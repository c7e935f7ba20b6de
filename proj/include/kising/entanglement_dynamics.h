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

#ifndef KISING_ENTANGLEMENT_DYNAMICS_H
#define KISING_ENTANGLEMENT_DYNAMICS_H

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "kising/coupling.h"
#include "kising/floquet_engine.h"
#include "kising/symmetric_core.h"

namespace kising {

/// rho = [[population, coherence], [conj(coherence), 1 - population]] for one qubit.
struct SingleQubitRdm {
    double population = 1.0;
    cplx coherence = 0.0;

    Eigen::Matrix2cd matrix() const;
    /// Eigenvalues in ascending order.
    std::array<double, 2> eigenvalues() const;
};

/// Applies U^n_kicks to a parity-basis state using the analytic block phases.
ParityState evolve_parity(const ParityState &state, const FloquetBlocks &blocks, std::int64_t n_kicks);

/// Closed-form RDM of the first qubit from the parity amplitudes B_q^+-.
SingleQubitRdm single_qubit_rdm(const ParityState &state);

/// RDM of the first qubit from Dicke amplitudes:
/// rho_00 = sum |c_q|^2 (N-q)/N, rho_01 = sum c_q conj(c_{q+1}) sqrt((N-q)(q+1))/N.
SingleQubitRdm single_qubit_rdm(const SymmetricState &state);

/// [r(2-r) - |w|^2]/2 with r = 2 rho_00 and w = 2 rho_01; equals 1 - Tr rho^2, in [0, 1/2].
double linear_entropy(const SingleQubitRdm &rdm);

/// -sum lambda ln lambda, in [0, ln 2].
double von_neumann_entropy(const SingleQubitRdm &rdm);

struct EntropySeries {
    CoherentParams params;
    int n_qubits = 0;
    CouplingSpec coupling;
    std::int64_t m = 1;
    std::vector<std::int64_t> kicks;
    std::vector<double> linear;
    std::vector<double> von_neumann;
};

/// Entropies for kicks 0..n_max; every kick count is evaluated independently.
EntropySeries entropy_series(const CoherentParams &params, int n, const CouplingSpec &j, std::int64_t m, std::int64_t n_max);

/// Smallest p in [1, (len-1)/2] with max_n |s[n+p] - s[n]| <= tol, if any.
std::optional<std::int64_t> detect_period(const std::vector<double> &series, double tol);

}  // namespace kising

#endif
