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

#include "kising/eigenstate_entropy.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "kising/errors.h"
#include "kising/parallel.h"

namespace kising {

namespace {

constexpr double kResidualLimit = 1e-9;
constexpr double kDegeneracyTolerance = 1e-10;

bool has_repeated_phase(std::vector<double> phases) {
    if (phases.size() < 2) {
        return false;
    }
    std::sort(phases.begin(), phases.end());
    for (std::size_t i = 0; i + 1 < phases.size(); ++i) {
        if (phases[i + 1] - phases[i] <= kDegeneracyTolerance) {
            return true;
        }
    }
    return phases.front() + 2.0 * M_PI - phases.back() <= kDegeneracyTolerance;
}

bool degenerate_blocks(const FloquetBlocks &blocks) {
    return has_repeated_phase(blocks.phases(Parity::plus)) || has_repeated_phase(blocks.phases(Parity::minus));
}

SymmetricState parity_vector(int n, Parity sector, const Eigen::VectorXcd &v) {
    Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(plus_size(n));
    Eigen::VectorXcd minus = Eigen::VectorXcd::Zero(minus_size(n));
    (sector == Parity::plus ? plus : minus) = v;
    return from_parity(ParityState(n, std::move(plus), std::move(minus)));
}

void append_basis(EigenstateEnsemble &out, int n, Parity sector) {
    const int size = block_size(n, sector);
    for (int q = 0; q < size; ++q) {
        out.states.push_back(parity_vector(n, sector, Eigen::VectorXcd::Unit(size, q)));
        out.sectors.push_back(sector);
    }
}

double append_dense(EigenstateEnsemble &out, int n, Parity sector, const Eigen::MatrixXcd &u) {
    // U is normal, so its Schur vectors are eigenvectors.
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
    if (schur.info() != Eigen::Success) {
        throw NumericGuardError("Schur decomposition of the Floquet block did not converge");
    }
    const Eigen::MatrixXcd &q = schur.matrixU();
    const Eigen::VectorXcd lambda = schur.matrixT().diagonal();
    const Eigen::MatrixXcd r = u * q - q * lambda.asDiagonal();
    double worst = 0.0;
    for (Eigen::Index c = 0; c < q.cols(); ++c) {
        worst = std::max(worst, r.col(c).norm());
        Eigen::VectorXcd v = q.col(c);
        v /= v.norm();
        out.states.push_back(parity_vector(n, sector, v));
        out.sectors.push_back(sector);
    }
    return worst;
}

}  // namespace

const char *perturb_name(PerturbParam p) {
    return p == PerturbParam::J ? "J" : "tau";
}

EigenstateEnsemble floquet_eigenstates(int n, const CouplingSpec &j, std::int64_t m, const Perturbation &perturb,
                                       const DenseGuard &guard) {
    if (n < 2) {
        throw ArgumentError("eigenstate ensembles need N >= 2");
    }
    if (!(perturb.delta >= 0.0) || perturb.delta > 1e-4) {
        throw ArgumentError("perturbation delta must lie in [0, 1e-4]");
    }
    EigenstateEnsemble out;
    out.n_qubits = n;
    out.perturbation = perturb;
    out.states.reserve(static_cast<std::size_t>(n) + 1);
    out.sectors.reserve(static_cast<std::size_t>(n) + 1);
    if (perturb.parameter == PerturbParam::J) {
        out.source = EigenstateEnsemble::Source::diagonal_basis;
        const CouplingSpec shifted =
            perturb.delta == 0.0 ? j : j.offset_by(static_cast<quad>(perturb.delta), format_quad(perturb.delta, 6));
        out.degenerate = degenerate_blocks(diagonal_blocks(n, shifted, m));
        append_basis(out, n, Parity::plus);
        append_basis(out, n, Parity::minus);
        return out;
    }
    if (n > guard.max_qubits) {
        throw ResourceError("dense diagonalization limited to N <= " + std::to_string(guard.max_qubits));
    }
    out.source = EigenstateEnsemble::Source::dense_diagonalization;
    out.degenerate = perturb.delta == 0.0 && degenerate_blocks(diagonal_blocks(n, j, m));
    const KickInterval tau{m, static_cast<quad>(perturb.delta)};
    const FloquetBlocks blocks = general_tau_blocks(n, j, tau.radians(), guard);
    out.max_residual = std::max(append_dense(out, n, Parity::plus, blocks.dense(Parity::plus)),
                                append_dense(out, n, Parity::minus, blocks.dense(Parity::minus)));
    if (out.max_residual > kResidualLimit) {
        throw NumericGuardError("eigenpair residual " + std::to_string(out.max_residual) + " exceeds 1e-9");
    }
    return out;
}

ScalingPoint average_ee_ratio(const EigenstateEnsemble &ensemble, double drop_budget) {
    const int n = ensemble.n_qubits;
    if (ensemble.states.empty()) {
        throw ArgumentError("empty eigenstate ensemble");
    }
    if (ensemble.sectors.size() != ensemble.states.size()) {
        throw ArgumentError("ensemble sectors and states differ in length");
    }
    ScalingPoint out;
    out.n_qubits = n;
    out.n_a = n / 2;
    const double smax = std::log2(out.n_a + 1.0);
    out.inv_smax = 1.0 / smax;
    const BipartiteSplit split(n, out.n_a);
    const SchmidtOptions options{drop_budget};
    std::vector<double> entropy(ensemble.states.size());
    parallel_for(static_cast<std::int64_t>(entropy.size()), [&](std::int64_t i) {
        entropy[i] = schmidt_entropy(split.schmidt(ensemble.states[i].coeffs(), options), 2.0);
    });
    double sum = 0.0;
    double sum_plus = 0.0;
    double sum_minus = 0.0;
    std::size_t count_plus = 0;
    for (std::size_t i = 0; i < entropy.size(); ++i) {
        sum += entropy[i];
        if (ensemble.sectors[i] == Parity::plus) {
            sum_plus += entropy[i];
            ++count_plus;
        } else {
            sum_minus += entropy[i];
        }
        out.max_entropy = std::max(out.max_entropy, entropy[i]);
    }
    const std::size_t count_minus = entropy.size() - count_plus;
    out.ratio = sum / static_cast<double>(entropy.size()) / smax;
    out.ratio_plus = count_plus > 0 ? sum_plus / static_cast<double>(count_plus) / smax : 0.0;
    out.ratio_minus = count_minus > 0 ? sum_minus / static_cast<double>(count_minus) / smax : 0.0;
    return out;
}

LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ArgumentError("line fit needs at least two matching points");
    }
    const double nd = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= nd;
    my /= nd;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) {
        throw ArgumentError("line fit needs distinct abscissae");
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

LineFit fit_scaling(const std::vector<ScalingPoint> &points) {
    if (points.size() < 4) {
        throw ArgumentError("finite-size scaling needs at least 4 sizes");
    }
    std::vector<double> x;
    std::vector<double> y;
    for (const auto &p : points) {
        x.push_back(p.inv_smax);
        y.push_back(p.ratio);
    }
    return fit_line(x, y);
}

ScalingSeries scaling_series(const std::vector<int> &ns, const CouplingSpec &j, std::int64_t m, const Perturbation &perturb,
                             const DenseGuard &guard) {
    if (ns.size() < 4) {
        throw ArgumentError("finite-size scaling needs at least 4 sizes");
    }
    ScalingSeries out;
    for (int n : ns) {
        out.points.push_back(average_ee_ratio(floquet_eigenstates(n, j, m, perturb, guard)));
    }
    out.fit = fit_scaling(out.points);
    return out;
}

}  // namespace kising
