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

#include "kising/floquet_engine.h"

#include <cmath>
#include <limits>
#include <numeric>

#include "kising/errors.h"

namespace kising {

namespace {

using i128 = __int128;

void check_n(int n) {
    if (n < 1) {
        throw ArgumentError("number of qubits must be at least 1");
    }
}

std::int64_t dq(int n, int q) {
    std::int64_t a = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(q);
    return (a * a - n) / 2;
}

std::int64_t mod_pos(i128 x, std::int64_t m) {
    i128 r = x % m;
    if (r < 0) {
        r += m;
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace

const char *parity_name(Parity sector) {
    return sector == Parity::plus ? "plus" : "minus";
}

int block_size(int n, Parity sector) {
    check_n(n);
    return sector == Parity::plus ? plus_size(n) : minus_size(n);
}

std::vector<std::int64_t> dq_table(int n, Parity sector) {
    check_n(n);
    std::vector<std::int64_t> out(block_size(n, sector));
    for (int q = 0; q < static_cast<int>(out.size()); ++q) {
        out[q] = dq(n, q);
    }
    return out;
}

std::int64_t gcd_dq(int n) {
    check_n(n);
    std::int64_t g = 0;
    for (int q = 0; q < plus_size(n); ++q) {
        g = std::gcd(g, dq(n, q));
    }
    return g;
}

int sector_quarter_turns(int n, Parity sector) {
    int base = sector == Parity::plus ? -n : 2 - n;
    return ((base % 4) + 4) % 4;
}

std::int64_t predicted_period(int n, std::int64_t r, std::int64_t h, std::int64_t m, PeriodMode mode) {
    check_n(n);
    if (h < 1) {
        throw ArgumentError("period prediction needs h >= 1");
    }
    if (std::gcd(r, h) != 1) {
        throw ArgumentError("period prediction needs a reduced fraction r/h");
    }
    if (m < 1) {
        throw ArgumentError("tau multiple m must be at least 1");
    }
    const std::int64_t modulus = 4 * h;
    // Differences of d_q within a block generate 2Z (even N) or 4Z (odd N >= 3).
    std::int64_t spread = n == 1 ? 0 : (n % 2 == 0 ? 2 : 4);
    std::int64_t g = std::gcd(modulus, 2 * h);
    g = std::gcd(g, mod_pos(static_cast<i128>(r) * spread, modulus));
    if (mode == PeriodMode::exact) {
        i128 l0 = static_cast<i128>(sector_quarter_turns(n, Parity::plus)) * h - static_cast<i128>(r) * dq(n, 0);
        g = std::gcd(g, mod_pos(l0, modulus));
    }
    std::int64_t base = modulus / g;
    return base / std::gcd(base, m);
}

std::int64_t case_rule_period(int n, std::int64_t r, std::int64_t h) {
    check_n(n);
    if (h < 1 || std::gcd(r, h) != 1) {
        throw ArgumentError("period rule needs a reduced fraction r/h with h >= 1");
    }
    if (n % 2 == 0) {
        return n % 4 == 2 ? 4 * h : 2 * h;
    }
    if (n % 4 == 3) {
        return 4 * h;
    }
    if (n % 8 == 5) {
        return h % 2 == 0 ? 4 * h : 2 * h;
    }
    if (h % 2 == 1) {
        return 4 * h;
    }
    return h % 4 == 2 ? 2 * h : h;
}

std::int64_t lattice_phase(int n, Parity sector, int q, const Rational &j, std::int64_t multiplier) {
    const std::int64_t modulus = 4 * j.den;
    i128 base = static_cast<i128>(sector_quarter_turns(n, sector)) * j.den - static_cast<i128>(j.num) * dq(n, q);
    std::int64_t l = mod_pos(base, modulus);
    return mod_pos(static_cast<i128>(l) * mod_pos(multiplier, modulus), modulus);
}

namespace {

double quad_phase(int n, Parity sector, int q, quad jv, std::int64_t multiplier) {
    // Quarter turns: multiplier * (e_s - J d_q), reduced mod 4 in binary128.
    i128 md = static_cast<i128>(multiplier) * dq(n, q);
    quad turns = static_cast<quad>(mod_pos(static_cast<i128>(multiplier) * sector_quarter_turns(n, sector), 4)) -
                 jv * static_cast<quad>(md);
    turns = reduce_mod(turns, 4);
    double phase = static_cast<double>(turns * (quad_pi() / 2));
    return phase >= 2 * M_PI ? 0.0 : phase;
}

}  // namespace

double floquet_phase(int n, Parity sector, int q, const CouplingSpec &j, std::int64_t multiplier) {
    if (j.is_rational()) {
        const Rational &r = j.as_rational();
        std::int64_t l = lattice_phase(n, sector, q, r, multiplier);
        return 2 * M_PI * static_cast<double>(l) / static_cast<double>(4 * r.den);
    }
    return quad_phase(n, sector, q, j.value(), multiplier);
}

FloquetBlocks FloquetBlocks::make_diagonal(int n, CouplingSpec coupling, std::int64_t multiplier, std::vector<double> plus,
                                           std::vector<double> minus, double error) {
    FloquetBlocks b;
    b.rep_ = Representation::diagonal;
    b.n_ = n;
    b.coupling_ = std::move(coupling);
    b.multiplier_ = multiplier;
    b.tau_ = static_cast<quad>(multiplier) * quad_pi() / 2;
    b.plus_phases_ = std::move(plus);
    b.minus_phases_ = std::move(minus);
    b.phase_error_ = error;
    return b;
}

FloquetBlocks FloquetBlocks::make_dense(int n, CouplingSpec coupling, quad tau, Eigen::MatrixXcd plus,
                                        Eigen::MatrixXcd minus) {
    FloquetBlocks b;
    b.rep_ = Representation::dense;
    b.n_ = n;
    b.coupling_ = std::move(coupling);
    b.tau_ = tau;
    b.plus_dense_ = std::move(plus);
    b.minus_dense_ = std::move(minus);
    return b;
}

const std::vector<double> &FloquetBlocks::phases(Parity sector) const {
    if (rep_ != Representation::diagonal) {
        throw UnsupportedRepresentationError("phases are only stored for diagonal blocks");
    }
    return sector == Parity::plus ? plus_phases_ : minus_phases_;
}

Eigen::VectorXcd FloquetBlocks::diagonal(Parity sector) const {
    const auto &ph = phases(sector);
    Eigen::VectorXcd out(static_cast<Eigen::Index>(ph.size()));
    for (std::size_t i = 0; i < ph.size(); ++i) {
        out[static_cast<Eigen::Index>(i)] = cplx(std::cos(ph[i]), std::sin(ph[i]));
    }
    return out;
}

Eigen::MatrixXcd FloquetBlocks::dense(Parity sector) const {
    if (rep_ == Representation::dense) {
        return sector == Parity::plus ? plus_dense_ : minus_dense_;
    }
    return diagonal(sector).asDiagonal();
}

FloquetBlocks diagonal_blocks(int n, const CouplingSpec &j, std::int64_t m) {
    check_n(n);
    if (m < 1) {
        throw ArgumentError("tau multiple m must be at least 1");
    }
    std::vector<double> plus(plus_size(n));
    std::vector<double> minus(minus_size(n));
    for (int q = 0; q < plus_size(n); ++q) {
        plus[q] = floquet_phase(n, Parity::plus, q, j, m);
    }
    for (int q = 0; q < minus_size(n); ++q) {
        minus[q] = floquet_phase(n, Parity::minus, q, j, m);
    }
    double error;
    if (j.is_rational()) {
        error = 8 * std::numeric_limits<double>::epsilon() * 2 * M_PI;
    } else {
        // binary128 product error plus the final rounding to double.
        double scale = std::fabs(j.to_double()) * static_cast<double>(m) * static_cast<double>(dq(n, 0));
        error = (scale * 4 * 1e-34 + 8 * std::numeric_limits<double>::epsilon()) * 2 * M_PI;
    }
    return FloquetBlocks::make_diagonal(n, j, m, std::move(plus), std::move(minus), error);
}

FloquetBlocks evolved_diagonal(const FloquetBlocks &blocks, std::int64_t n_kicks) {
    if (blocks.representation() != FloquetBlocks::Representation::diagonal) {
        throw UnsupportedRepresentationError("evolved_diagonal needs diagonal blocks");
    }
    if (n_kicks < 0) {
        throw ArgumentError("kick count must be non-negative");
    }
    const int n = blocks.n_qubits();
    const std::int64_t mult = blocks.multiplier() * n_kicks;
    std::vector<double> plus(plus_size(n));
    std::vector<double> minus(minus_size(n));
    for (int q = 0; q < plus_size(n); ++q) {
        plus[q] = floquet_phase(n, Parity::plus, q, blocks.coupling(), mult);
    }
    for (int q = 0; q < minus_size(n); ++q) {
        minus[q] = floquet_phase(n, Parity::minus, q, blocks.coupling(), mult);
    }
    double error = blocks.phase_error_bound() * static_cast<double>(std::max<std::int64_t>(n_kicks, 1));
    return FloquetBlocks::make_diagonal(n, blocks.coupling(), mult, std::move(plus), std::move(minus), error);
}

void split_parity(int n, const Eigen::Ref<const Eigen::VectorXcd> &x, Eigen::Ref<Eigen::VectorXcd> plus,
                  Eigen::Ref<Eigen::VectorXcd> minus) {
    const double s = 1.0 / std::sqrt(2.0);
    for (int q = 0; q < minus_size(n); ++q) {
        cplx mirrored = std::conj(mirror_phase(n, q)) * x[n - q];
        plus[q] = (x[q] + mirrored) * s;
        minus[q] = (x[q] - mirrored) * s;
    }
    if (n % 2 == 0) {
        plus[n / 2] = x[n / 2];
    }
}

namespace {

Eigen::VectorXcd ising_diagonal(int n, const CouplingSpec &j, quad tau) {
    Eigen::VectorXcd d(n + 1);
    const quad two_pi = 2 * quad_pi();
    const quad jt = j.value() * tau;
    for (int q = 0; q <= n; ++q) {
        double a = static_cast<double>(reduce_mod(-jt * static_cast<quad>(dq(n, q)), two_pi));
        d[q] = cplx(std::cos(a), std::sin(a));
    }
    return d;
}

void check_guard(int n, const DenseGuard &guard) {
    check_n(n);
    if (n > guard.max_qubits) {
        throw ResourceError("dense Floquet construction limited to N <= " + std::to_string(guard.max_qubits) +
                            ", requested " + std::to_string(n));
    }
}

double kick_angle(quad tau) {
    return static_cast<double>(reduce_mod(2 * tau, 4 * quad_pi()));
}

}  // namespace

Eigen::MatrixXcd dicke_floquet(int n, const CouplingSpec &j, quad tau, const DenseGuard &guard) {
    check_guard(n, guard);
    Eigen::MatrixXd r = collective_y_rotation(n, kick_angle(tau));
    return ising_diagonal(n, j, tau).asDiagonal() * r.cast<cplx>();
}

FloquetBlocks general_tau_blocks(int n, const CouplingSpec &j, quad tau, const DenseGuard &guard) {
    check_guard(n, guard);
    const Eigen::VectorXcd ising = ising_diagonal(n, j, tau);
    const int np = plus_size(n);
    const int nm = minus_size(n);
    Eigen::MatrixXcd plus = Eigen::MatrixXcd::Zero(np, np);
    Eigen::MatrixXcd minus = Eigen::MatrixXcd::Zero(nm, nm);
    const double s = 1.0 / std::sqrt(2.0);
    double leak = 0.0;
    Eigen::VectorXcd x(n + 1);
    Eigen::VectorXcd xp(np);
    Eigen::VectorXcd xm(nm);
    for_each_rotation_column_pair(n, kick_angle(tau), [&](int q, const Eigen::VectorXd &lo, const Eigen::VectorXd &hi) {
        if (q == n - q) {
            x = ising.cwiseProduct(lo.cast<cplx>());
            split_parity(n, x, xp, xm);
            plus.col(q) = xp;
            leak = std::max(leak, xm.cwiseAbs().maxCoeff());
            return;
        }
        const cplx c = mirror_phase(n, q);
        for (int sign = 0; sign < 2; ++sign) {
            const double sg = sign == 0 ? 1.0 : -1.0;
            for (int p = 0; p <= n; ++p) {
                x[p] = ising[p] * ((lo[p] + sg * c * hi[p]) * s);
            }
            split_parity(n, x, xp, xm);
            if (sign == 0) {
                plus.col(q) = xp;
                leak = std::max(leak, xm.cwiseAbs().maxCoeff());
            } else {
                minus.col(q) = xm;
                leak = std::max(leak, xp.cwiseAbs().maxCoeff());
            }
        }
    });
    if (leak > 1e-9) {
        throw NumericGuardError("parity leakage " + std::to_string(leak) + " in dense Floquet blocks");
    }
    return FloquetBlocks::make_dense(n, j, tau, std::move(plus), std::move(minus));
}

namespace {

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd &u, std::int64_t e) {
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    Eigen::MatrixXcd base = u;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

}  // namespace

double deviation(const FloquetBlocks &blocks, std::int64_t n_kicks) {
    if (n_kicks < 1) {
        throw ArgumentError("deviation needs n_kicks >= 1");
    }
    double total = 0.0;
    for (Parity s : {Parity::plus, Parity::minus}) {
        if (blocks.representation() == FloquetBlocks::Representation::diagonal) {
            Eigen::VectorXcd a = evolved_diagonal(blocks, n_kicks).diagonal(s);
            Eigen::VectorXcd b = blocks.diagonal(s);
            total += (a - b).cwiseAbs().sum();
        } else {
            Eigen::MatrixXcd u = blocks.dense(s);
            total += (matrix_power(u, n_kicks) - u).cwiseAbs().sum();
        }
    }
    return total;
}

double deviation_from_identity(const FloquetBlocks &blocks, std::int64_t n_kicks, Parity sector, PeriodMode mode) {
    if (n_kicks < 0) {
        throw ArgumentError("kick count must be non-negative");
    }
    if (blocks.representation() == FloquetBlocks::Representation::diagonal) {
        FloquetBlocks e = evolved_diagonal(blocks, n_kicks);
        cplx ref = 1.0;
        if (mode == PeriodMode::projective) {
            ref = e.diagonal(Parity::plus)[0];
        }
        return (e.diagonal(sector).array() - ref).abs().sum();
    }
    Eigen::MatrixXcd up = matrix_power(blocks.dense(sector), n_kicks);
    cplx ref = 1.0;
    if (mode == PeriodMode::projective) {
        Eigen::MatrixXcd p0 = matrix_power(blocks.dense(Parity::plus), n_kicks);
        ref = p0(0, 0) / std::abs(p0(0, 0));
    }
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(up.rows(), up.cols()) * ref;
    return (up - id).cwiseAbs().sum();
}

std::optional<std::int64_t> measured_period(const FloquetBlocks &blocks, std::int64_t max_n, double tol, PeriodMode mode) {
    for (std::int64_t k = 1; k <= max_n; ++k) {
        if (deviation_from_identity(blocks, k, Parity::plus, mode) < tol &&
            deviation_from_identity(blocks, k, Parity::minus, mode) < tol) {
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace kising
