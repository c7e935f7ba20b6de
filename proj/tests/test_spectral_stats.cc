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
#include <set>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "kising/errors.h"
#include "kising/spectral_stats.h"

namespace kising {
namespace {

PhaseSpectrum uniform_random_spectrum(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 2 * M_PI);
    std::vector<double> raw(count);
    for (double &x : raw) {
        x = u(rng);
    }
    return merge_phases(std::move(raw), 0.0);
}

TEST(MergePhases, WrapsAndMerges) {
    const PhaseSpectrum s = merge_phases({0.1, 0.1 + 1e-12, 2 * M_PI - 1e-12, 3.0, -1.0}, 1e-10);
    ASSERT_EQ(s.phases.size(), 4u);
    EXPECT_EQ(s.total_count(), 5);
    EXPECT_NEAR(s.phases[0], 0.1, 1e-15);
    EXPECT_EQ(s.multiplicities[0], 2);
    EXPECT_NEAR(s.phases[2], 2 * M_PI - 1.0, 1e-15);
    EXPECT_FALSE(s.nondegenerate());

    const PhaseSpectrum w = merge_phases({1e-13, 2 * M_PI - 1e-12, 3.0, 3.0 + 1e-12, -1.0}, 1e-10);
    ASSERT_EQ(w.phases.size(), 3u);
    EXPECT_EQ(w.total_count(), 5);
    EXPECT_NEAR(w.phases[0], 1e-13, 1e-15);
    EXPECT_EQ(w.multiplicities[0], 2);
    EXPECT_EQ(w.multiplicities[1], 2);
    EXPECT_NEAR(w.phases[2], 2 * M_PI - 1.0, 1e-15);
}

TEST(Eigenphases, RationalDegeneracyBound) {
    for (int n : {100, 1000, 10000}) {
        for (auto [r, h] : std::vector<std::pair<int, int>>{{1, 3}, {7, 20}, {21, 37}, {1, 25}}) {
            for (SectorChoice s : {SectorChoice::plus, SectorChoice::minus}) {
                const PhaseSpectrum spec = eigenphases(n, CouplingSpec::rational(r, h), 1, s);
                EXPECT_LE(spec.phases.size(), static_cast<std::size_t>(4 * h));
                const Parity p = s == SectorChoice::plus ? Parity::plus : Parity::minus;
                std::set<std::int64_t> lattice;
                for (int q = 0; q < block_size(n, p); ++q) {
                    lattice.insert(lattice_phase(n, p, q, Rational{r, h}, 1));
                }
                EXPECT_EQ(spec.phases.size(), lattice.size());
                EXPECT_EQ(spec.total_count(), block_size(n, p));
            }
        }
    }
}

TEST(Eigenphases, IrrationalIsNondegenerate) {
    const PhaseSpectrum s = eigenphases(20000, parse_coupling("sqrt(5)/3"), 1, SectorChoice::plus);
    EXPECT_TRUE(s.nondegenerate());
    EXPECT_EQ(s.phases.size(), 10001u);
    EXPECT_LT(s.precision_bound, 1e-12);
}

TEST(PerturbedRational, ValidatesEpsilon) {
    EXPECT_THROW(perturbed_rational_spectrum(100, 21, 37, 2e-4Q), ArgumentError);
    EXPECT_THROW(perturbed_rational_spectrum(100, 21, 37, -1e-6Q), ArgumentError);
    EXPECT_THROW(perturbed_rational_spectrum(100, 42, 74, 1e-6Q), ArgumentError);
    EXPECT_EQ(perturbed_rational_spectrum(1000, 21, 37, 0).phases.size(),
              eigenphases(1000, CouplingSpec::rational(21, 37), 1, SectorChoice::plus).phases.size());
}

TEST(ReferenceDensity, NormalizedAndMeanOne) {
    boost::math::quadrature::exp_sinh<double> integrator;
    for (int k = 1; k <= 8; ++k) {
        for (SampleKind kind : {SampleKind::spacing, SampleKind::ratio}) {
            const double total = integrator.integrate([&](double x) { return reference_pdf(kind, k, x); });
            EXPECT_NEAR(total, 1.0, 1e-10) << k;
            const double half = 0.7;
            const double upto = boost::math::quadrature::exp_sinh<double>().integrate(
                [&](double x) { return reference_pdf(kind, k, x); }, half, INFINITY);
            EXPECT_NEAR(reference_cdf(kind, k, half), 1.0 - upto, 1e-10);
        }
        const double mean =
            integrator.integrate([&](double x) { return x * reference_pdf(SampleKind::spacing, k, x); });
        EXPECT_NEAR(mean, 1.0, 1e-10);
    }
    EXPECT_EQ(reference_pdf(SampleKind::ratio, 1, 1.0), 0.25);
    EXPECT_THROW(reference_pdf(SampleKind::spacing, 9, 1.0), ArgumentError);
}

TEST(Unfold, UnitMeanSpacing) {
    const PhaseSpectrum s = eigenphases(30000, parse_coupling("sqrt(5)/3"), 1, SectorChoice::plus);
    for (Boundary b : {Boundary::periodic, Boundary::cut}) {
        for (UnfoldMethod m : {UnfoldMethod::rank(), UnfoldMethod::rank(0), UnfoldMethod::local_mean(51)}) {
            const UnfoldedLevels l = unfold(s, m, b);
            const SpacingSamples sp = kth_spacings(l, 1);
            double mean = 0.0;
            for (double v : sp.values) {
                EXPECT_GE(v, 0.0);
                mean += v;
            }
            mean /= sp.values.size();
            EXPECT_NEAR(mean, 1.0, 1e-3);
        }
    }
    EXPECT_THROW(unfold(eigenphases(50, parse_coupling("sqrt(5)/3"), 1, SectorChoice::plus)), StatisticsError);
}

TEST(PoissonSample, KsAndGapRatio) {
    const UnfoldedLevels l = unfold(uniform_random_spectrum(200000, 42), UnfoldMethod::rank());
    for (int k = 1; k <= 4; ++k) {
        EXPECT_LT(ks_distance(kth_spacings(l, k)), 0.01) << k;
        EXPECT_LT(ks_distance(kth_ratios(l, k)), 0.01) << k;
    }
    EXPECT_NEAR(mean_adjacent_ratio(l).mean, 2 * std::log(2.0) - 1, 0.005);
}

TEST(Samples, RatiosAndGuards) {
    const UnfoldedLevels l = unfold(uniform_random_spectrum(1000, 1), UnfoldMethod::rank());
    const SpacingSamples r = kth_ratios(l, 2, 3);
    EXPECT_EQ(r.values.size() + r.filtered, (l.size() + 2) / 3);
    EXPECT_THROW(ks_distance(r), StatisticsError);
    EXPECT_THROW(kth_ratios(l, 1, 0), ArgumentError);
    EXPECT_THROW(mean_adjacent_ratio(l, 5000), StatisticsError);
    const Histogram h = histogram(kth_spacings(l, 1), 40);
    double area = 0.0;
    for (double v : h.empirical) {
        area += v * 5.0 / 40;
    }
    EXPECT_NEAR(area, 1.0, 0.02);
}

}  // namespace
}  // namespace kising
