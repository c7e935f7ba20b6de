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

#ifndef KISING_SPECTRAL_STATS_H
#define KISING_SPECTRAL_STATS_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kising/coupling.h"
#include "kising/floquet_engine.h"

namespace kising {

enum class SectorChoice { plus, minus, pooled };

const char *sector_name(SectorChoice sector);

/// Quasi-energy phases on [0, 2 pi), strictly increasing after merging.
struct PhaseSpectrum {
    std::vector<double> phases;
    std::vector<std::int64_t> multiplicities;
    int n_qubits = 0;
    std::string coupling;
    SectorChoice sector = SectorChoice::plus;
    /// Largest absolute phase error of the generator, radians.
    double precision_bound = 0.0;
    double dedup_tolerance = 0.0;

    std::int64_t total_count() const;
    bool nondegenerate() const;
};

constexpr double kDedupTolerance = 1e-10;

/// Sorts raw phases (any real values, reduced mod 2 pi) and merges neighbours
/// closer than tol on the circle.
PhaseSpectrum merge_phases(std::vector<double> raw, double tol = kDedupTolerance);

PhaseSpectrum eigenphases(int n, const CouplingSpec &j, std::int64_t m, SectorChoice sector,
                          double tol = kDedupTolerance);

/// Spectrum at J = r/h + epsilon, 0 <= epsilon <= 1e-4.
PhaseSpectrum perturbed_rational_spectrum(int n, std::int64_t r, std::int64_t h, quad epsilon,
                                          SectorChoice sector = SectorChoice::plus, double tol = kDedupTolerance);

enum class Boundary { periodic, cut };

struct UnfoldMethod {
    enum class Kind { rank, local_mean };
    Kind kind = Kind::rank;
    /// Fourier order of the smoothed counting function (rank) or window width (local_mean).
    int parameter = 8;

    static UnfoldMethod rank(int order = 8) {
        return {Kind::rank, order};
    }
    static UnfoldMethod local_mean(int window) {
        return {Kind::local_mean, window};
    }
};

/// Unfolded levels with unit mean spacing. With periodic boundaries the
/// sequence continues as x[i + M] = x[i] + period.
struct UnfoldedLevels {
    std::vector<double> x;
    Boundary boundary = Boundary::periodic;
    double period = 0.0;

    std::size_t size() const {
        return x.size();
    }
    /// Number of spacings of order k that can be formed.
    std::size_t spacing_count(int k) const;
    double at(std::size_t i) const;
};

/// Throws StatisticsError with fewer than min_levels distinct phases.
UnfoldedLevels unfold(const PhaseSpectrum &spectrum, UnfoldMethod method = UnfoldMethod::rank(),
                      Boundary boundary = Boundary::periodic, std::size_t min_levels = 100);

enum class SampleKind { spacing, ratio };

struct SpacingSamples {
    int k = 1;
    SampleKind kind = SampleKind::spacing;
    std::vector<double> values;
    /// Ratios dropped because the denominator vanished.
    std::size_t filtered = 0;
};

SpacingSamples kth_spacings(const UnfoldedLevels &levels, int k);

/// r_i = s^(k)_{i+k} / s^(k)_i for i = 0, stride, 2 stride, ...; the two spacings never overlap.
SpacingSamples kth_ratios(const UnfoldedLevels &levels, int k, int stride = 1);

/// Poisson reference densities for k = 1..8. The spacing family has unit mean,
/// so it describes s^(k)/k.
double reference_pdf(SampleKind kind, int k, double x);
double reference_cdf(SampleKind kind, int k, double x);

struct GapRatio {
    double mean = 0.0;
    std::size_t count = 0;
    std::size_t filtered = 0;
};

/// Mean of min(s_j, s_{j+1}) / max(s_j, s_{j+1}) over nearest-neighbour spacings.
GapRatio mean_adjacent_ratio(const UnfoldedLevels &levels, std::size_t min_levels = 1000);

/// Kolmogorov-Smirnov distance to the Poisson reference of the same kind and
/// order. Spacings are divided by k first.
double ks_distance(const SpacingSamples &samples, std::size_t min_samples = 10000);

struct Histogram {
    std::vector<double> centers;
    std::vector<double> empirical;
    std::vector<double> reference;
};

/// Density-normalized histogram over [0, 5] (spacings, divided by k) or [0, 10]
/// (ratios) by default.
Histogram histogram(const SpacingSamples &samples, int bins = 50, double upper = -1.0);

}  // namespace kising

#endif
