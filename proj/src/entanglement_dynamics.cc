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

#include "kising/entanglement_dynamics.h"

#include <algorithm>
#include <cmath>

#include "kising/errors.h"
#include "kising/parallel.h"

namespace kising {

Eigen::Matrix2cd SingleQubitRdm::matrix() const {
    Eigen::Matrix2cd m;
    m << population, coherence, std::conj(coherence), 1.0 - population;
    return m;
}

std::array<double, 2> SingleQubitRdm::eigenvalues() const {
    const double dz = population - 0.5;
    const double radius = std::sqrt(dz * dz + std::norm(coherence));
    const double hi = 0.5 + radius;
    // det = lo * hi avoids the cancellation in 0.5 - radius for nearly pure states.
    const double det = population * (1.0 - population) - std::norm(coherence);
    double lo = hi > 0 ? det / hi : 0.0;
    return {lo, hi};
}

ParityState evolve_parity(const ParityState &state, const FloquetBlocks &blocks, std::int64_t n_kicks) {
    if (blocks.n_qubits() != state.n_qubits()) {
        throw ArgumentError("Floquet blocks and state have different N");
    }
    if (n_kicks == 0) {
        return state;
    }
    FloquetBlocks e = evolved_diagonal(blocks, n_kicks);
    Eigen::VectorXcd plus = state.plus().cwiseProduct(e.diagonal(Parity::plus));
    Eigen::VectorXcd minus = state.minus().cwiseProduct(e.diagonal(Parity::minus));
    return ParityState(state.n_qubits(), std::move(plus), std::move(minus));
}

SingleQubitRdm single_qubit_rdm(const ParityState &state) {
    const int n = state.n_qubits();
    const auto &bp = state.plus();
    const auto &bm = state.minus();
    const double nd = n;
    // r_n = 1 + sum_q (N-2q)/N 2 Re(B+_q conj(B-_q)); the even-N central term has no partner.
    double r = 1.0;
    for (int q = 0; q < minus_size(n); ++q) {
        r += (n - 2.0 * q) / nd * 2.0 * std::real(bp[q] * std::conj(bm[q]));
    }
    auto kappa = [&](int q) { return std::sqrt((nd - q) * (q + 1.0)) / nd; };
    // w_n = 2 rho_01, pairing the terms q and N-1-q of the Dicke sum.
    cplx w = 0.0;
    if (n % 2 == 0) {
        const int jh = n / 2;
        for (int q = 0; q + 2 <= jh; ++q) {
            w += kappa(q) * ((bp[q] + bm[q]) * std::conj(bp[q + 1] + bm[q + 1]) -
                             (bp[q + 1] - bm[q + 1]) * std::conj(bp[q] - bm[q]));
        }
        const int c = jh - 1;
        const cplx central = bp[jh];
        w += std::sqrt(2.0) * kappa(c) *
             ((bp[c] + bm[c]) * std::conj(central) + central * (std::conj(bm[c]) - std::conj(bp[c])));
    } else {
        const int t = (n - 1) / 2;
        for (int q = 0; q < t; ++q) {
            w += kappa(q) * ((bp[q] + bm[q]) * std::conj(bp[q + 1] + bm[q + 1]) -
                             (bp[q + 1] - bm[q + 1]) * std::conj(bp[q] - bm[q]));
        }
        w += cplx(0.0, -1.0) * kappa(t) * (bp[t] + bm[t]) * std::conj(bp[t] - bm[t]);
    }
    return SingleQubitRdm{0.5 * r, 0.5 * w};
}

SingleQubitRdm single_qubit_rdm(const SymmetricState &state) {
    const int n = state.n_qubits();
    const auto &c = state.coeffs();
    const double nd = n;
    double p = 0.0;
    cplx w = 0.0;
    for (int q = 0; q <= n; ++q) {
        p += std::norm(c[q]) * (nd - q) / nd;
        if (q < n) {
            w += c[q] * std::conj(c[q + 1]) * std::sqrt((nd - q) * (q + 1.0)) / nd;
        }
    }
    return SingleQubitRdm{p, w};
}

double linear_entropy(const SingleQubitRdm &rdm) {
    const double r = 2.0 * rdm.population;
    const double w2 = 4.0 * std::norm(rdm.coherence);
    return std::clamp((r * (2.0 - r) - w2) / 2.0, 0.0, 0.5);
}

double von_neumann_entropy(const SingleQubitRdm &rdm) {
    double s = 0.0;
    for (double l : rdm.eigenvalues()) {
        if (l > 0.0) {
            s -= l * std::log(l);
        }
    }
    return std::clamp(s, 0.0, std::log(2.0));
}

EntropySeries entropy_series(const CoherentParams &params, int n, const CouplingSpec &j, std::int64_t m, std::int64_t n_max) {
    if (n_max < 1) {
        throw ArgumentError("entropy series needs n_max >= 1");
    }
    EntropySeries out;
    out.params = CoherentParams::make(params.theta0, params.phi0);
    out.n_qubits = n;
    out.coupling = j;
    out.m = m;
    const ParityState initial = to_parity(coherent_dicke(out.params, n));
    const FloquetBlocks blocks = diagonal_blocks(n, j, m);
    const std::size_t len = static_cast<std::size_t>(n_max) + 1;
    out.kicks.resize(len);
    out.linear.resize(len);
    out.von_neumann.resize(len);
    parallel_for(static_cast<std::int64_t>(len), [&](std::int64_t k) {
        SingleQubitRdm rdm = single_qubit_rdm(evolve_parity(initial, blocks, k));
        out.kicks[k] = k;
        out.linear[k] = linear_entropy(rdm);
        out.von_neumann[k] = von_neumann_entropy(rdm);
    });
    return out;
}

std::optional<std::int64_t> detect_period(const std::vector<double> &series, double tol) {
    const std::int64_t len = static_cast<std::int64_t>(series.size());
    if (len < 3) {
        throw ArgumentError("period detection needs at least 3 samples");
    }
    for (std::int64_t p = 1; p <= (len - 1) / 2; ++p) {
        bool ok = true;
        for (std::int64_t k = 0; k + p < len; ++k) {
            if (std::fabs(series[k + p] - series[k]) > tol) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace kising
