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

#ifndef KISING_EIGENSTATE_ENTROPY_H
#define KISING_EIGENSTATE_ENTROPY_H

#include <cstdint>
#include <vector>

#include "kising/coupling.h"
#include "kising/floquet_engine.h"
#include "kising/symmetric_core.h"

namespace kising {

enum class PerturbParam { J, tau };

const char *perturb_name(PerturbParam p);

struct Perturbation {
    PerturbParam parameter = PerturbParam::tau;
    double delta = 1e-10;
};

/// Floquet eigenvectors in the Dicke basis together with their parity sector.
struct EigenstateEnsemble {
    enum class Source { diagonal_basis, dense_diagonalization };

    int n_qubits = 0;
    Source source = Source::diagonal_basis;
    Perturbation perturbation;
    std::vector<SymmetricState> states;
    std::vector<Parity> sectors;
    /// Set when the spectrum is exactly degenerate, which makes any average basis-dependent.
    bool degenerate = false;
    /// max ||U v - lambda v|| over dense eigenpairs.
    double max_residual = 0.0;
};

/// Perturbing J keeps U diagonal in the parity basis, so the eigenvectors are
/// |phi_q^+->. Perturbing tau diagonalizes the dense blocks of U(m pi/2 + delta).
EigenstateEnsemble floquet_eigenstates(int n, const CouplingSpec &j, std::int64_t m, const Perturbation &perturb,
                                       const DenseGuard &guard = {});

struct ScalingPoint {
    int n_qubits = 0;
    int n_a = 0;
    double inv_smax = 0.0;
    /// Pooled <S>/S_Max over both sectors.
    double ratio = 0.0;
    double ratio_plus = 0.0;
    double ratio_minus = 0.0;
    /// Largest single-state entropy in bits.
    double max_entropy = 0.0;
};

/// Default truncation for the Schmidt decomposition of ensemble members.
constexpr double kEnsembleDropBudget = 1e-12;

/// Mean base-2 entanglement entropy at N_A = floor(N/2), divided by log2(N_A + 1).
ScalingPoint average_ee_ratio(const EigenstateEnsemble &ensemble, double drop_budget = kEnsembleDropBudget);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y);

struct ScalingSeries {
    std::vector<ScalingPoint> points;
    /// ratio against 1/S_Max; the intercept is the N -> infinity extrapolation.
    LineFit fit;
};

ScalingSeries scaling_series(const std::vector<int> &ns, const CouplingSpec &j, std::int64_t m, const Perturbation &perturb,
                             const DenseGuard &guard = {});

/// Fit of already computed points (at least 4).
LineFit fit_scaling(const std::vector<ScalingPoint> &points);

}  // namespace kising

#endif
