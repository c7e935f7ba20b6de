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

#include "kising/oracle.h"

#include <bit>
#include <cmath>

#include "kising/errors.h"

namespace kising::oracle {

namespace {

void check_size(int n, int limit) {
    if (n < 1 || n > limit) {
        throw ResourceError("oracle supports 1 <= N <= " + std::to_string(limit) + ", requested " + std::to_string(n));
    }
}

std::size_t dim(int n) {
    return std::size_t{1} << n;
}

}  // namespace

FullState product_state(const CoherentParams &params, int n) {
    check_size(n, kMaxQubits);
    CoherentParams p = CoherentParams::make(params.theta0, params.phi0);
    const cplx a0 = std::cos(p.theta0 / 2);
    const cplx a1 = std::exp(cplx(0, -p.phi0)) * std::sin(p.theta0 / 2);
    FullState s{n, Eigen::VectorXcd(static_cast<Eigen::Index>(dim(n)))};
    for (std::size_t idx = 0; idx < dim(n); ++idx) {
        cplx amp = 1.0;
        for (int l = 0; l < n; ++l) {
            amp *= (idx >> l) & 1 ? a1 : a0;
        }
        s.amplitudes[static_cast<Eigen::Index>(idx)] = amp;
    }
    return s;
}

void apply_kick(FullState &state, double tau) {
    const double c = std::cos(tau);
    const double s = std::sin(tau);
    auto &a = state.amplitudes;
    for (int bit = 0; bit < state.n_qubits; ++bit) {
        const std::size_t mask = std::size_t{1} << bit;
        for (std::size_t idx = 0; idx < dim(state.n_qubits); ++idx) {
            if (idx & mask) {
                continue;
            }
            const auto i0 = static_cast<Eigen::Index>(idx);
            const auto i1 = static_cast<Eigen::Index>(idx | mask);
            const cplx v0 = a[i0];
            const cplx v1 = a[i1];
            a[i0] = c * v0 - s * v1;
            a[i1] = s * v0 + c * v1;
        }
    }
}

void apply_ising(FullState &state, double j, double tau) {
    const int n = state.n_qubits;
    for (std::size_t idx = 0; idx < dim(n); ++idx) {
        // sum over pairs of z_l z_l' with z = +1 for |0>, -1 for |1>.
        const int ones = std::popcount(idx);
        const int mz = n - 2 * ones;
        const double pairs = (static_cast<double>(mz) * mz - n) / 2.0;
        state.amplitudes[static_cast<Eigen::Index>(idx)] *= std::exp(cplx(0, -j * tau * pairs));
    }
}

void apply_floquet(FullState &state, double j, double tau) {
    apply_kick(state, tau);
    apply_ising(state, j, tau);
}

FullState full_state_evolve(const CoherentParams &params, int n, double j, double tau, std::int64_t n_kicks) {
    FullState s = product_state(params, n);
    for (std::int64_t k = 0; k < n_kicks; ++k) {
        apply_floquet(s, j, tau);
    }
    return s;
}

Eigen::MatrixXcd full_floquet(int n, double j, double tau) {
    check_size(n, kMaxMaterialized);
    const auto d = static_cast<Eigen::Index>(dim(n));
    Eigen::MatrixXcd u(d, d);
    for (Eigen::Index col = 0; col < d; ++col) {
        FullState s{n, Eigen::VectorXcd::Zero(d)};
        s.amplitudes[col] = 1.0;
        apply_floquet(s, j, tau);
        u.col(col) = s.amplitudes;
    }
    return u;
}

SingleQubitRdm full_rdm_qubit(const FullState &state) {
    Eigen::MatrixXcd rho = full_rdm_block(state, 1);
    return SingleQubitRdm{rho(0, 0).real(), rho(0, 1)};
}

Eigen::MatrixXcd full_rdm_block(const FullState &state, int n_a) {
    const int n = state.n_qubits;
    if (n_a < 1 || n_a > n) {
        throw ArgumentError("block size out of range");
    }
    const auto da = static_cast<Eigen::Index>(dim(n_a));
    const auto db = static_cast<Eigen::Index>(dim(n - n_a));
    // Qubits 0..n_a-1 are the high bits, so the index is a * db + b.
    Eigen::MatrixXcd m(da, db);
    for (Eigen::Index a = 0; a < da; ++a) {
        for (Eigen::Index b = 0; b < db; ++b) {
            m(a, b) = state.amplitudes[a * db + b];
        }
    }
    return m * m.adjoint();
}

namespace {

void apply_parity(FullState &state) {
    // sigma^y |0> = i|1>, sigma^y |1> = -i|0> on every qubit.
    const int n = state.n_qubits;
    const std::size_t full = dim(n) - 1;
    Eigen::VectorXcd out(state.amplitudes.size());
    for (std::size_t idx = 0; idx < dim(n); ++idx) {
        const int ones = std::popcount(idx);
        const int zeros = n - ones;
        cplx factor = std::pow(cplx(0, 1), zeros) * std::pow(cplx(0, -1), ones);
        out[static_cast<Eigen::Index>(idx ^ full)] = factor * state.amplitudes[static_cast<Eigen::Index>(idx)];
    }
    state.amplitudes = std::move(out);
}

}  // namespace

double parity_commutation_check(int n, double j, double tau) {
    check_size(n, kMaxMaterialized);
    const auto d = static_cast<Eigen::Index>(dim(n));
    double worst = 0.0;
    for (Eigen::Index col = 0; col < d; ++col) {
        FullState a{n, Eigen::VectorXcd::Zero(d)};
        a.amplitudes[col] = 1.0;
        FullState b = a;
        apply_parity(a);
        apply_floquet(a, j, tau);
        apply_floquet(b, j, tau);
        apply_parity(b);
        worst = std::max(worst, (a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff());
    }
    return worst;
}

Eigen::MatrixXcd symmetric_isometry(int n) {
    check_size(n, kMaxQubits);
    const auto d = static_cast<Eigen::Index>(dim(n));
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(d, n + 1);
    std::vector<double> count(n + 1, 0.0);
    for (std::size_t idx = 0; idx < dim(n); ++idx) {
        count[std::popcount(idx)] += 1.0;
    }
    for (std::size_t idx = 0; idx < dim(n); ++idx) {
        const int q = std::popcount(idx);
        v(static_cast<Eigen::Index>(idx), q) = 1.0 / std::sqrt(count[q]);
    }
    return v;
}

Eigen::VectorXcd project_symmetric(const FullState &state) {
    return symmetric_isometry(state.n_qubits).adjoint() * state.amplitudes;
}

FullState embed_symmetric(const Eigen::VectorXcd &coeffs, int n) {
    if (coeffs.size() != n + 1) {
        throw ArgumentError("Dicke vector length must be N+1");
    }
    return FullState{n, symmetric_isometry(n) * coeffs};
}

Eigen::MatrixXcd projected_floquet(int n, double j, double tau) {
    Eigen::MatrixXcd v = symmetric_isometry(n);
    Eigen::MatrixXcd out(n + 1, n + 1);
    for (int q = 0; q <= n; ++q) {
        FullState s{n, v.col(q)};
        apply_floquet(s, j, tau);
        out.col(q) = v.adjoint() * s.amplitudes;
    }
    return out;
}

}  // namespace kising::oracle
