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
#include <random>

#include <Eigen/Eigenvalues>

#include "kising/errors.h"
#include "kising/oracle.h"
#include "kising/symmetric_core.h"

namespace kising {
namespace {

Eigen::VectorXcd random_vector(int size, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(size);
    for (int i = 0; i < size; ++i) {
        v[i] = cplx(g(rng), g(rng));
    }
    return v / v.norm();
}

TEST(CoherentParams, ClampsAndWraps) {
    CoherentParams p = CoherentParams::make(4.0, 3.0 * M_PI);
    EXPECT_DOUBLE_EQ(p.theta0, M_PI);
    EXPECT_NEAR(p.phi0, M_PI, 1e-15);
    EXPECT_DOUBLE_EQ(CoherentParams::make(-1.0, -M_PI).phi0, M_PI);
}

TEST(CoherentDicke, MatchesTensorProduct) {
    const CoherentParams params = CoherentParams::make(M_PI / 4, -M_PI / 4);
    const SymmetricState s = coherent_dicke(params, 8);
    const Eigen::VectorXcd expect = oracle::project_symmetric(oracle::product_state(params, 8));
    EXPECT_LT((s.coeffs() - expect).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(CoherentDicke, PolesAreBasisStates) {
    const SymmetricState up = coherent_dicke(CoherentParams::make(0.0, 0.0), 30);
    EXPECT_EQ(up[0], cplx(1.0, 0.0));
    const SymmetricState down = coherent_dicke(CoherentParams::make(M_PI, 0.0), 30);
    EXPECT_NEAR(std::abs(down[30]), 1.0, 1e-15);
    EXPECT_EQ(down[0], cplx(0.0, 0.0));
}

TEST(CoherentDicke, LargeNIsNormalized) {
    const SymmetricState s = coherent_dicke(CoherentParams::make(1.1, 0.3), 200000);
    EXPECT_NEAR(s.coeffs().norm(), 1.0, 1e-12);
}

TEST(SymmetricState, RejectsBadInput) {
    EXPECT_THROW(SymmetricState(3, Eigen::VectorXcd::Ones(3)), ArgumentError);
    EXPECT_THROW(SymmetricState(2, Eigen::VectorXcd::Ones(3)), NumericGuardError);
    EXPECT_THROW(SymmetricState::normalized(2, Eigen::VectorXcd::Zero(3)), ArgumentError);
}

TEST(Parity, RoundTripAndEigenvalue) {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 11; ++n) {
        const SymmetricState s(n, random_vector(n + 1, rng));
        const ParityState p = to_parity(s);
        EXPECT_EQ(p.plus().size(), plus_size(n));
        EXPECT_EQ(p.minus().size(), minus_size(n));
        EXPECT_LT((from_parity(p).coeffs() - s.coeffs()).cwiseAbs().maxCoeff(), 1e-15);
        // Each basis vector |phi_q^+-> has parity eigenvalue +-1 under the product of sigma^y.
        for (int q = 0; q < plus_size(n); ++q) {
            Eigen::VectorXcd plus = Eigen::VectorXcd::Zero(plus_size(n));
            plus[q] = 1.0;
            const SymmetricState phi = from_parity(ParityState(n, plus, Eigen::VectorXcd::Zero(minus_size(n))));
            oracle::FullState full = oracle::embed_symmetric(phi.coeffs(), n);
            // Product of sigma^y maps |b> to i^N (-1)^{popcount(b)} |~b>.
            Eigen::VectorXcd mapped = Eigen::VectorXcd::Zero(full.amplitudes.size());
            const std::size_t mask = (std::size_t{1} << n) - 1;
            const cplx in = std::pow(cplx(0.0, 1.0), n);
            for (std::size_t b = 0; b <= mask; ++b) {
                const double sign = __builtin_popcountll(b) % 2 ? -1.0 : 1.0;
                mapped[b ^ mask] += in * sign * full.amplitudes[b];
            }
            EXPECT_LT((mapped - full.amplitudes).cwiseAbs().maxCoeff(), 1e-14) << "n=" << n << " q=" << q;
        }
    }
}

TEST(LogBinomial, SmallAndLarge) {
    EXPECT_NEAR(log_binomial(4, 2), std::log(6.0), 1e-15);
    EXPECT_EQ(log_binomial(17, 0), 0.0);
    long double direct = 0.0L;
    for (long long i = 1; i <= 250000; ++i) {
        direct += std::log1pl(250000.0L / static_cast<long double>(i));
    }
    const double v = log_binomial(500000, 250000);
    EXPECT_NEAR(v, static_cast<double>(direct), 1e-15 * v);
    const std::vector<double> row = log_binomial_row(1000);
    for (int k = 0; k <= 1000; k += 37) {
        EXPECT_NEAR(row[k], log_binomial(1000, k), 1e-12);
    }
}

TEST(Hypergeometric, SumsToOne) {
    for (int q : {0, 3, 17, 40}) {
        const std::vector<double> w = hypergeometric_weights(40, 15, q);
        double s = 0.0;
        for (double x : w) {
            s += x;
        }
        EXPECT_NEAR(s, 1.0, 1e-13);
    }
}

TEST(Schmidt, MatchesFullPartialTrace) {
    std::mt19937_64 rng(11);
    for (int n_a : {1, 3, 5}) {
        const SymmetricState s(10, random_vector(11, rng));
        const SchmidtSpectrum spec = bipartite_schmidt(s, n_a);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
            oracle::full_rdm_block(oracle::embed_symmetric(s.coeffs(), 10), n_a), Eigen::EigenvaluesOnly);
        std::vector<double> full(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
        std::sort(full.rbegin(), full.rend());
        ASSERT_EQ(spec.values.size(), static_cast<std::size_t>(n_a + 1));
        for (std::size_t i = 0; i < full.size(); ++i) {
            const double expect = std::max(full[i], 0.0);
            EXPECT_NEAR(i < spec.values.size() ? spec.values[i] : 0.0, expect, 1e-12);
        }
    }
}

TEST(Schmidt, ReducedMatrixAgrees) {
    std::mt19937_64 rng(3);
    const SymmetricState s(24, random_vector(25, rng));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(reduced_block_matrix(s, 9), Eigen::EigenvaluesOnly);
    const SchmidtSpectrum spec = bipartite_schmidt(s, 9);
    for (int i = 0; i < 10; ++i) {
        EXPECT_NEAR(spec.values[i], es.eigenvalues()[9 - i], 1e-13);
    }
}

TEST(Schmidt, ProductAndBellLikeStates) {
    const SymmetricState product = coherent_dicke(CoherentParams::make(0.7, 1.2), 60);
    EXPECT_NEAR(schmidt_entropy(bipartite_schmidt(product, 30), 2.0), 0.0, 1e-10);

    Eigen::VectorXcd ghz = Eigen::VectorXcd::Zero(21);
    ghz[0] = ghz[20] = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(schmidt_entropy(bipartite_schmidt(SymmetricState(20, ghz), 10), 2.0), 1.0, 1e-14);
    EXPECT_NEAR(schmidt_entropy(bipartite_schmidt(SymmetricState(20, ghz), 10), M_E), std::log(2.0), 1e-14);
}

TEST(Schmidt, TruncationBudgetBoundsDroppedWeight) {
    const SymmetricState s = coherent_dicke(CoherentParams::make(1.3, 0.4), 400);
    const SchmidtSpectrum exact = bipartite_schmidt(s, 200);
    const SchmidtSpectrum cut = bipartite_schmidt(s, 200, SchmidtOptions{1e-12});
    EXPECT_LE(cut.dropped, 1e-12);
    EXPECT_NEAR(schmidt_entropy(cut, 2.0), schmidt_entropy(exact, 2.0), 1e-9);
}

}  // namespace
}  // namespace kising
