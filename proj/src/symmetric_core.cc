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

#include "kising/symmetric_core.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kising/errors.h"
#include "kising/quad.h"

namespace kising {

namespace {

constexpr double kNormTolerance = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_n(int n) {
    if (n < 1) {
        throw ArgumentError("number of qubits must be at least 1, got " + std::to_string(n));
    }
}

}  // namespace

CoherentParams CoherentParams::make(double theta0, double phi0) {
    if (!std::isfinite(theta0) || !std::isfinite(phi0)) {
        throw ArgumentError("coherent-state angles must be finite");
    }
    CoherentParams p;
    p.theta0 = std::clamp(theta0, 0.0, M_PI);
    double phi = std::remainder(phi0, 2.0 * M_PI);
    if (phi <= -M_PI) {
        phi += 2.0 * M_PI;
    }
    p.phi0 = phi;
    return p;
}

SymmetricState::SymmetricState(int n_qubits, Eigen::VectorXcd coeffs) : n_(n_qubits), coeffs_(std::move(coeffs)) {
    check_n(n_qubits);
    if (coeffs_.size() != n_qubits + 1) {
        throw ArgumentError("symmetric state needs N+1 amplitudes");
    }
    double norm2 = coeffs_.squaredNorm();
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kNormTolerance) {
        throw NumericGuardError("symmetric state norm deviates from 1 by " + std::to_string(std::abs(norm2 - 1.0)));
    }
}

SymmetricState SymmetricState::normalized(int n_qubits, Eigen::VectorXcd coeffs) {
    double norm = coeffs.norm();
    if (!(norm > 0) || !std::isfinite(norm)) {
        throw ArgumentError("cannot normalize a zero or non-finite vector");
    }
    coeffs /= norm;
    return SymmetricState(n_qubits, std::move(coeffs));
}

int plus_size(int n) {
    return n / 2 + 1;
}

int minus_size(int n) {
    return (n + 1) / 2;
}

ParityState::ParityState(int n_qubits, Eigen::VectorXcd plus, Eigen::VectorXcd minus)
    : n_(n_qubits), plus_(std::move(plus)), minus_(std::move(minus)) {
    check_n(n_qubits);
    if (plus_.size() != plus_size(n_qubits) || minus_.size() != minus_size(n_qubits)) {
        throw ArgumentError("parity block lengths do not match N");
    }
    double norm2 = plus_.squaredNorm() + minus_.squaredNorm();
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kNormTolerance) {
        throw NumericGuardError("parity state norm deviates from 1 by " + std::to_string(std::abs(norm2 - 1.0)));
    }
}

cplx mirror_phase(int n, int q) {
    // i^N (-1)^q, reduced to a quarter-turn count.
    int quarter = ((n + 2 * q) % 4 + 4) % 4;
    static const cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[quarter];
}

double log_binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) {
        throw ArgumentError("log_binomial requires 0 <= k <= n");
    }
    if (k == 0 || k == n) {
        return 0.0;
    }
    quad v = lgammaq(static_cast<quad>(n) + 1) - lgammaq(static_cast<quad>(k) + 1) - lgammaq(static_cast<quad>(n - k) + 1);
    return static_cast<double>(v);
}

std::vector<double> log_binomial_row(int n) {
    if (n < 0) {
        throw ArgumentError("log_binomial_row requires n >= 0");
    }
    std::vector<double> row(n + 1, 0.0);
    quad acc = 0;
    for (int k = 0; k < n; ++k) {
        acc += logq(static_cast<quad>(n - k) / static_cast<quad>(k + 1));
        row[k + 1] = static_cast<double>(acc);
    }
    row[n] = 0.0;
    return row;
}

std::vector<double> hypergeometric_weights(int n, int n_a, int q) {
    if (n_a < 0 || n_a > n || q < 0 || q > n) {
        throw ArgumentError("hypergeometric_weights arguments out of range");
    }
    int n_b = n - n_a;
    std::vector<double> w(n_a + 1, 0.0);
    double lc = log_binomial(n, q);
    for (int k = std::max(0, q - n_b); k <= std::min(q, n_a); ++k) {
        w[k] = std::exp(log_binomial(n_a, k) + log_binomial(n_b, q - k) - lc);
    }
    return w;
}

SymmetricState coherent_dicke(const CoherentParams &params, int n) {
    check_n(n);
    CoherentParams p = CoherentParams::make(params.theta0, params.phi0);
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
    const quad two_pi = 2 * quad_pi();
    auto phase = [&](int q) {
        quad angle = reduce_mod(-static_cast<quad>(q) * static_cast<quad>(p.phi0), two_pi);
        double a = static_cast<double>(angle);
        return cplx(std::cos(a), std::sin(a));
    };
    if (p.theta0 == 0.0) {
        c[0] = 1.0;
        return SymmetricState(n, std::move(c));
    }
    if (p.theta0 == M_PI) {
        c[n] = phase(n);
        return SymmetricState(n, std::move(c));
    }
    const double lc = std::log(std::cos(p.theta0 / 2));
    const double ls = std::log(std::sin(p.theta0 / 2));
    std::vector<double> row = log_binomial_row(n);
    for (int q = 0; q <= n; ++q) {
        double lm = 0.5 * row[q] + (n - q) * lc + q * ls;
        if (lm < -745.0) {
            continue;
        }
        c[q] = std::exp(lm) * phase(q);
    }
    return SymmetricState::normalized(n, std::move(c));
}

ParityState to_parity(const SymmetricState &state) {
    const int n = state.n_qubits();
    const auto &c = state.coeffs();
    Eigen::VectorXcd plus(plus_size(n));
    Eigen::VectorXcd minus(minus_size(n));
    for (int q = 0; q < minus_size(n); ++q) {
        cplx mirrored = std::conj(mirror_phase(n, q)) * c[n - q];
        plus[q] = (c[q] + mirrored) * kInvSqrt2;
        minus[q] = (c[q] - mirrored) * kInvSqrt2;
    }
    if (n % 2 == 0) {
        plus[n / 2] = c[n / 2];
    }
    return ParityState(n, std::move(plus), std::move(minus));
}

SymmetricState from_parity(const ParityState &state) {
    const int n = state.n_qubits();
    const auto &plus = state.plus();
    const auto &minus = state.minus();
    Eigen::VectorXcd c(n + 1);
    for (int q = 0; q < minus_size(n); ++q) {
        c[q] = (plus[q] + minus[q]) * kInvSqrt2;
        c[n - q] = mirror_phase(n, q) * (plus[q] - minus[q]) * kInvSqrt2;
    }
    if (n % 2 == 0) {
        c[n / 2] = plus[n / 2];
    }
    return SymmetricState(n, std::move(c));
}

BipartiteSplit::BipartiteSplit(int n, int n_a) : n_(n), n_a_(n_a), n_b_(n - n_a) {
    check_n(n);
    if (n_a < 1 || n_a > n - 1) {
        throw ArgumentError("subsystem size must satisfy 1 <= N_A <= N-1");
    }
    log_a_ = log_binomial_row(n_a_);
    log_b_ = log_binomial_row(n_b_);
    log_n_ = log_binomial_row(n_);
}

namespace {

struct Entry {
    int row;
    int col;
    cplx value;
    double weight;
};

int find_root(std::vector<int> &parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

SchmidtSpectrum BipartiteSplit::schmidt(const Eigen::VectorXcd &coeffs, const SchmidtOptions &options) const {
    if (coeffs.size() != n_ + 1) {
        throw ArgumentError("state length does not match the split");
    }
    const double budget = std::max(0.0, options.drop_budget);
    const double floor_weight = budget / (static_cast<double>(n_a_ + 1) * static_cast<double>(n_b_ + 1));

    std::vector<Entry> entries;
    double skipped_bound = 0.0;
    for (int q = 0; q <= n_; ++q) {
        double p = std::norm(coeffs[q]);
        if (p == 0.0) {
            continue;
        }
        const int k_lo = std::max(0, q - n_b_);
        const int k_hi = std::min(q, n_a_);
        auto entry_at = [&](int k) {
            double lh = log_a_[k] + log_b_[q - k] - log_n_[q];
            double h = std::exp(lh);
            return Entry{k, q - k, coeffs[q] * std::sqrt(h), p * h};
        };
        if (budget == 0.0) {
            for (int k = k_lo; k <= k_hi; ++k) {
                entries.push_back(entry_at(k));
            }
            continue;
        }
        // The weights are unimodal in k; walk outward from the mode.
        int mode = static_cast<int>(std::lround(static_cast<double>(q) * n_a_ / n_));
        mode = std::clamp(mode, k_lo, k_hi);
        int kept = 0;
        for (int k = mode; k <= k_hi; ++k) {
            Entry e = entry_at(k);
            if (e.weight < floor_weight) {
                break;
            }
            entries.push_back(e);
            ++kept;
        }
        for (int k = mode - 1; k >= k_lo; --k) {
            Entry e = entry_at(k);
            if (e.weight < floor_weight) {
                break;
            }
            entries.push_back(e);
            ++kept;
        }
        skipped_bound += (k_hi - k_lo + 1 - kept) * floor_weight;
    }

    double dropped = 0.0;
    if (budget > 0.0) {
        std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) { return a.weight < b.weight; });
        double remaining = budget - skipped_bound;
        std::size_t cut = 0;
        while (cut < entries.size() && dropped + entries[cut].weight <= remaining) {
            dropped += entries[cut].weight;
            ++cut;
        }
        entries.erase(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(cut));
        dropped += skipped_bound;
    }

    // Connected components of the bipartite row/column graph.
    const int rows = n_a_ + 1;
    const int cols = n_b_ + 1;
    std::vector<int> parent(rows + cols);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Entry &e : entries) {
        int a = find_root(parent, e.row);
        int b = find_root(parent, rows + e.col);
        if (a != b) {
            parent[a] = b;
        }
    }
    std::vector<int> component_of_root(rows + cols, -1);
    std::vector<std::vector<int>> comp_rows;
    std::vector<std::vector<int>> comp_cols;
    std::vector<int> local_index(rows + cols, -1);
    std::vector<std::vector<const Entry *>> comp_entries;
    for (const Entry &e : entries) {
        int root = find_root(parent, e.row);
        if (component_of_root[root] < 0) {
            component_of_root[root] = static_cast<int>(comp_rows.size());
            comp_rows.emplace_back();
            comp_cols.emplace_back();
            comp_entries.emplace_back();
        }
        int id = component_of_root[root];
        if (local_index[e.row] < 0) {
            local_index[e.row] = static_cast<int>(comp_rows[id].size());
            comp_rows[id].push_back(e.row);
        }
        if (local_index[rows + e.col] < 0) {
            local_index[rows + e.col] = static_cast<int>(comp_cols[id].size());
            comp_cols[id].push_back(e.col);
        }
        comp_entries[id].push_back(&e);
    }

    std::vector<double> values;
    values.reserve(std::min(rows, cols));
    for (std::size_t id = 0; id < comp_rows.size(); ++id) {
        const int r = static_cast<int>(comp_rows[id].size());
        const int c = static_cast<int>(comp_cols[id].size());
        if (r == 1 || c == 1) {
            double s = 0.0;
            for (const Entry *e : comp_entries[id]) {
                s += std::norm(e->value);
            }
            values.push_back(s);
            continue;
        }
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r, c);
        for (const Entry *e : comp_entries[id]) {
            m(local_index[e->row], local_index[rows + e->col]) = e->value;
        }
        Eigen::MatrixXcd gram = r <= c ? Eigen::MatrixXcd(m * m.adjoint()) : Eigen::MatrixXcd(m.adjoint() * m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
        for (int i = 0; i < solver.eigenvalues().size(); ++i) {
            values.push_back(solver.eigenvalues()[i]);
        }
    }

    SchmidtSpectrum out;
    out.dropped = dropped;
    for (double &v : values) {
        if (v < 0.0) {
            v = 0.0;
        }
    }
    double total = std::accumulate(values.begin(), values.end(), 0.0);
    if (!(total > 0.0)) {
        throw NumericGuardError("Schmidt spectrum has zero weight");
    }
    for (double &v : values) {
        v /= total;
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    values.resize(static_cast<std::size_t>(std::min(rows, cols)), 0.0);
    out.values = std::move(values);
    return out;
}

SchmidtSpectrum bipartite_schmidt(const SymmetricState &state, int n_a, const SchmidtOptions &options) {
    return BipartiteSplit(state.n_qubits(), n_a).schmidt(state.coeffs(), options);
}

Eigen::MatrixXcd reduced_block_matrix(const SymmetricState &state, int n_a) {
    const int n = state.n_qubits();
    if (n_a < 1 || n_a > n - 1) {
        throw ArgumentError("subsystem size must satisfy 1 <= N_A <= N-1");
    }
    const int n_b = n - n_a;
    std::vector<double> la = log_binomial_row(n_a);
    std::vector<double> lb = log_binomial_row(n_b);
    std::vector<double> ln = log_binomial_row(n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_a + 1, n_b + 1);
    for (int k = 0; k <= n_a; ++k) {
        for (int l = 0; l <= n_b; ++l) {
            m(k, l) = state[k + l] * std::exp(0.5 * (la[k] + lb[l] - ln[k + l]));
        }
    }
    return m * m.adjoint();
}

double schmidt_entropy(const SchmidtSpectrum &spectrum, double base) {
    double s = 0.0;
    for (double v : spectrum.values) {
        if (v > 0.0) {
            s -= v * std::log(v);
        }
    }
    return s / std::log(base);
}

}  // namespace kising
