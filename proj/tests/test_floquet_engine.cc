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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "kising/errors.h"
#include "kising/floquet_engine.h"
#include "kising/oracle.h"

namespace kising {
namespace {

using big = boost::multiprecision::cpp_bin_float_50;

// Smallest n >= 1 with n L_q = 0 (mod 4h) for every integer phase L_q of U(pi/2)^m;
// in projective mode the phases are taken relative to the first plus entry.
std::int64_t lattice_period(int n, std::int64_t r, std::int64_t h, std::int64_t m, bool projective) {
    const std::int64_t modulus = 4 * h;
    std::vector<std::int64_t> lattice;
    for (Parity s : {Parity::plus, Parity::minus}) {
        const std::int64_t e = s == Parity::plus ? ((-n) % 4 + 4) % 4 : ((2 - n) % 4 + 4) % 4;
        for (int q = 0; q < block_size(n, s); ++q) {
            const std::int64_t d = ((static_cast<std::int64_t>(n) - 2 * q) * (n - 2 * q) - n) / 2;
            std::int64_t l = (m % modulus) * (((e * h - r * d) % modulus + modulus) % modulus) % modulus;
            lattice.push_back(l);
        }
    }
    const std::int64_t ref = lattice.front();
    for (std::int64_t k = 1;; ++k) {
        bool ok = true;
        for (std::int64_t l : lattice) {
            const std::int64_t v = projective ? l - ref : l;
            if (((k * v) % modulus + modulus) % modulus != 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return k;
        }
    }
}

TEST(DqTable, Values) {
    EXPECT_EQ(dq_table(6, Parity::plus), (std::vector<std::int64_t>{15, 5, -1, -3}));
    EXPECT_EQ(dq_table(8, Parity::plus), (std::vector<std::int64_t>{28, 14, 4, -2, -4}));
    EXPECT_EQ(dq_table(9, Parity::plus), (std::vector<std::int64_t>{36, 20, 8, 0, -4}));
    EXPECT_EQ(gcd_dq(6), 1);
    EXPECT_EQ(gcd_dq(8), 2);
    EXPECT_EQ(gcd_dq(9), 4);
}

TEST(DiagonalBlocks, TwoQubits) {
    const FloquetBlocks b = diagonal_blocks(2, CouplingSpec::rational(1, 1), 1);
    const Eigen::VectorXcd plus = b.diagonal(Parity::plus);
    const Eigen::VectorXcd minus = b.diagonal(Parity::minus);
    ASSERT_EQ(plus.size(), 2);
    ASSERT_EQ(minus.size(), 1);
    EXPECT_LT(std::abs(plus[0] - cplx(0, 1)), 1e-15);
    EXPECT_LT(std::abs(plus[1] - cplx(0, -1)), 1e-15);
    EXPECT_LT(std::abs(minus[0] - cplx(0, -1)), 1e-15);
    const FloquetBlocks four = evolved_diagonal(b, 4);
    EXPECT_LT((four.diagonal(Parity::plus) - Eigen::VectorXcd::Ones(2)).norm(), 1e-15);
}

TEST(DiagonalBlocks, RationalPhasesOnLattice) {
    const std::int64_t h = 7;
    const FloquetBlocks b = diagonal_blocks(4, CouplingSpec::rational(3, h), 1);
    for (Parity s : {Parity::plus, Parity::minus}) {
        for (double p : b.phases(s)) {
            const double x = p * 2.0 * h / M_PI;
            EXPECT_NEAR(x, std::round(x), 1e-10);
        }
    }
}

TEST(DiagonalBlocks, ExtendedPrecisionPhases) {
    const big pi = boost::math::constants::pi<big>();
    const big j = boost::multiprecision::sqrt(big(5)) / 3;
    for (int n : {10, 500000}) {
        for (std::int64_t m : {1, 3}) {
            const FloquetBlocks b = diagonal_blocks(n, parse_coupling("sqrt(5)/3"), m);
            for (Parity s : {Parity::plus, Parity::minus}) {
                const int size = block_size(n, s);
                const int e = s == Parity::plus ? ((-n) % 4 + 4) % 4 : ((2 - n) % 4 + 4) % 4;
                const int step = std::max(1, size / 997);
                for (int q = 0; q < size; q += step) {
                    const big d = (big(n) - 2 * q) * (big(n) - 2 * q) - n;
                    big phase = big(m) * (big(e) - j * d / 2) * pi / 2;
                    phase = phase - 2 * pi * boost::multiprecision::floor(phase / (2 * pi));
                    double diff = std::fabs(b.phases(s)[q] - phase.convert_to<double>());
                    diff = std::min(diff, 2 * M_PI - diff);
                    EXPECT_LT(diff, n == 10 ? 1e-13 : 1e-12) << "n=" << n << " q=" << q;
                }
            }
        }
    }
}

TEST(DiagonalBlocks, MatchOracleAtQuarterTurns) {
    for (int n = 1; n <= 9; ++n) {
        for (std::int64_t m : {1, 2, 3}) {
            const CouplingSpec j = parse_coupling("sqrt(5)/3");
            const Eigen::MatrixXcd oracle_u =
                oracle::projected_floquet(n, j.to_double(), static_cast<double>(m) * M_PI / 2);
            const Eigen::MatrixXcd ours = dicke_floquet(n, j, static_cast<quad>(m) * quad_pi() / 2);
            EXPECT_LT((ours - oracle_u).cwiseAbs().maxCoeff(), 1e-12) << "n=" << n << " m=" << m;
            // Dense construction at tau = m pi/2 reproduces the analytic diagonal blocks.
            const FloquetBlocks dense = general_tau_blocks(n, j, static_cast<quad>(m) * quad_pi() / 2);
            const FloquetBlocks diag = diagonal_blocks(n, j, m);
            for (Parity s : {Parity::plus, Parity::minus}) {
                EXPECT_LT((dense.dense(s) - diag.dense(s)).cwiseAbs().maxCoeff(), 1e-10) << "n=" << n;
            }
        }
    }
}

TEST(GeneralTau, MatchesOracle) {
    for (int n = 1; n <= 10; ++n) {
        for (double tau : {0.37, 1.1, 2.9}) {
            const CouplingSpec j = parse_coupling("0.83");
            const Eigen::MatrixXcd ours = dicke_floquet(n, j, static_cast<quad>(tau));
            EXPECT_LT((ours - oracle::projected_floquet(n, 0.83, tau)).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

TEST(GeneralTau, IdentityAtZero) {
    const Eigen::MatrixXcd u = dicke_floquet(7, CouplingSpec::rational(0, 1), 0);
    EXPECT_LT((u - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GeneralTau, BlocksAreUnitary) {
    const FloquetBlocks b = general_tau_blocks(300, parse_coupling("sqrt(5)/3"), 0.61Q);
    for (Parity s : {Parity::plus, Parity::minus}) {
        const Eigen::MatrixXcd u = b.dense(s);
        const Eigen::MatrixXcd g = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
        EXPECT_LT(g.cwiseAbs().maxCoeff(), 1e-11);
    }
    EXPECT_THROW(general_tau_blocks(50, parse_coupling("1"), 0.3Q, DenseGuard{40}), ResourceError);
}

TEST(Rotation, MatchesKickedProductStates) {
    for (int n : {1, 4, 7}) {
      for (double beta : {0.9, 3.5, 2 * M_PI, 5.0, -4.0}) {
        const Eigen::MatrixXd d = collective_y_rotation(n, beta);
        for (int q = 0; q <= n; ++q) {
            oracle::FullState s = oracle::embed_symmetric(Eigen::VectorXcd::Unit(n + 1, q), n);
            oracle::apply_kick(s, beta / 2);
            const Eigen::VectorXcd col = oracle::project_symmetric(s);
            EXPECT_LT((col - d.col(q).cast<cplx>()).cwiseAbs().maxCoeff(), 1e-13) << n << " " << beta;
        }
      }
    }
}

TEST(Rotation, OrthogonalAtLargeN) {
    const Eigen::MatrixXd d = collective_y_rotation(2000, 1.3);
    const Eigen::MatrixXd g = d.transpose() * d - Eigen::MatrixXd::Identity(2001, 2001);
    EXPECT_LT(g.cwiseAbs().maxCoeff(), 1e-11);
}

TEST(Period, PrintedExamples) {
    EXPECT_EQ(predicted_period(6, 1, 3), 12);
    EXPECT_EQ(predicted_period(8, 1, 3), 6);
    EXPECT_EQ(predicted_period(9, 1, 4), 4);
    EXPECT_THROW(predicted_period(6, 2, 4), ArgumentError);
    const FloquetBlocks b = diagonal_blocks(6, CouplingSpec::rational(1, 3), 1);
    EXPECT_LT(deviation_from_identity(b, 12, Parity::plus), 1e-12);
    EXPECT_LT(deviation_from_identity(b, 12, Parity::minus), 1e-12);
    EXPECT_EQ(deviation(b, 1), 0.0);
    EXPECT_LT(deviation(b, 13), 1e-11);
}

TEST(Period, ClosedFormMatchesLatticeOracle) {
    std::vector<int> sizes;
    for (int n = 1; n <= 48; ++n) {
        sizes.push_back(n);
    }
    for (int n : {97, 128, 199, 200}) {
        sizes.push_back(n);
    }
    for (int n : sizes) {
        for (std::int64_t h = 1; h <= 16; ++h) {
            for (std::int64_t r = -5; r <= 11; ++r) {
                if (std::gcd(r, h) != 1) {
                    continue;
                }
                for (std::int64_t m : {1, 2, 3}) {
                    ASSERT_EQ(predicted_period(n, r, h, m, PeriodMode::exact), lattice_period(n, r, h, m, false))
                        << n << " " << r << "/" << h << " m=" << m;
                    ASSERT_EQ(predicted_period(n, r, h, m, PeriodMode::projective), lattice_period(n, r, h, m, true))
                        << n << " " << r << "/" << h << " m=" << m;
                }
            }
        }
    }
}

TEST(Period, MeasuredEqualsPredicted) {
    for (int n : {2, 3, 5, 6, 8, 9, 13, 50, 101, 200}) {
        for (auto [r, h] : std::vector<std::pair<int, int>>{{1, 3}, {7, 20}, {1, 25}, {5, 12}, {3, 8}}) {
            const FloquetBlocks b = diagonal_blocks(n, CouplingSpec::rational(r, h), 1);
            EXPECT_EQ(measured_period(b, 8 * h), predicted_period(n, r, h)) << n << " " << r << "/" << h;
            EXPECT_EQ(measured_period(b, 8 * h, 1e-9, PeriodMode::projective),
                      predicted_period(n, r, h, 1, PeriodMode::projective));
        }
    }
}

TEST(Period, IrrationalHasNoRecurrence) {
    const FloquetBlocks b = diagonal_blocks(50, parse_coupling("sqrt(5)/3"), 1);
    double smallest = INFINITY;
    for (std::int64_t k = 2; k <= 10000; ++k) {
        smallest = std::min(smallest, deviation(b, k));
    }
    EXPECT_GT(smallest, 0.1);
}

TEST(EvolvedDiagonal, RejectsDense) {
    const FloquetBlocks b = general_tau_blocks(4, parse_coupling("1"), 0.2Q);
    EXPECT_THROW(evolved_diagonal(b, 2), UnsupportedRepresentationError);
}

}  // namespace
}  // namespace kising
