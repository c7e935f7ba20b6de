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

#include "kising/spectral_stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kising/errors.h"
#include "kising/parallel.h"

namespace kising {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// k-th spacings have mean k; the reference densities have unit mean.
double reference_scale(const SpacingSamples &samples) {
    return samples.kind == SampleKind::spacing ? 1.0 / samples.k : 1.0;
}

void check_order(int k) {
    if (k < 1 || k > 8) {
        throw ArgumentError("reference densities are defined for 1 <= k <= 8");
    }
}

}  // namespace

const char *sector_name(SectorChoice sector) {
    switch (sector) {
        case SectorChoice::plus:
            return "plus";
        case SectorChoice::minus:
            return "minus";
        case SectorChoice::pooled:
            return "pooled";
    }
    return "?";
}

std::int64_t PhaseSpectrum::total_count() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), std::int64_t{0});
}

bool PhaseSpectrum::nondegenerate() const {
    return std::all_of(multiplicities.begin(), multiplicities.end(), [](std::int64_t m) { return m == 1; });
}

PhaseSpectrum merge_phases(std::vector<double> raw, double tol) {
    for (double &p : raw) {
        p = std::fmod(p, kTwoPi);
        if (p < 0) {
            p += kTwoPi;
        }
        if (p >= kTwoPi) {
            p = 0.0;
        }
    }
    std::sort(raw.begin(), raw.end());
    PhaseSpectrum out;
    out.dedup_tolerance = tol;
    double previous = 0.0;
    for (double p : raw) {
        if (!out.phases.empty() && p - previous <= tol) {
            ++out.multiplicities.back();
        } else {
            out.phases.push_back(p);
            out.multiplicities.push_back(1);
        }
        previous = p;
    }
    if (out.phases.size() > 1 && out.phases.front() + kTwoPi - previous <= tol) {
        out.multiplicities.front() += out.multiplicities.back();
        out.phases.pop_back();
        out.multiplicities.pop_back();
    }
    return out;
}

PhaseSpectrum eigenphases(int n, const CouplingSpec &j, std::int64_t m, SectorChoice sector, double tol) {
    if (n < 2) {
        throw ArgumentError("eigenphases needs N >= 2");
    }
    FloquetBlocks blocks = diagonal_blocks(n, j, m);
    std::vector<double> raw;
    if (sector != SectorChoice::minus) {
        const auto &p = blocks.phases(Parity::plus);
        raw.insert(raw.end(), p.begin(), p.end());
    }
    if (sector != SectorChoice::plus) {
        const auto &p = blocks.phases(Parity::minus);
        raw.insert(raw.end(), p.begin(), p.end());
    }
    PhaseSpectrum out = merge_phases(std::move(raw), tol);
    out.n_qubits = n;
    out.coupling = j.to_string();
    out.sector = sector;
    out.precision_bound = blocks.phase_error_bound();
    return out;
}

PhaseSpectrum perturbed_rational_spectrum(int n, std::int64_t r, std::int64_t h, quad epsilon, SectorChoice sector,
                                          double tol) {
    if (!(epsilon >= 0) || epsilon > 1e-4Q) {
        throw ArgumentError("perturbation must lie in [0, 1e-4]");
    }
    CouplingSpec base = CouplingSpec::rational(r, h);
    if (base.as_rational().num != r || base.as_rational().den != h) {
        throw ArgumentError("perturbed spectrum needs a reduced fraction r/h");
    }
    CouplingSpec j = epsilon == 0 ? base : base.offset_by(epsilon, format_quad(epsilon, 6));
    return eigenphases(n, j, 1, sector, tol);
}

std::size_t UnfoldedLevels::spacing_count(int k) const {
    const std::size_t m = x.size();
    if (boundary == Boundary::periodic) {
        return m;
    }
    return m > static_cast<std::size_t>(k) ? m - static_cast<std::size_t>(k) : 0;
}

double UnfoldedLevels::at(std::size_t i) const {
    const std::size_t m = x.size();
    if (i < m) {
        return x[i];
    }
    if (boundary != Boundary::periodic) {
        throw ArgumentError("level index beyond a cut spectrum");
    }
    return x[i % m] + static_cast<double>(i / m) * period;
}

namespace {

UnfoldedLevels unfold_rank(const std::vector<double> &e, int order, Boundary boundary) {
    const std::size_t m = e.size();
    const double md = static_cast<double>(m);
    // Fejer-weighted Fourier series of the empirical density; the weights keep
    // the smoothed density non-negative so the counting function is monotone.
    std::vector<double> a(order + 1, 0.0);
    std::vector<double> b(order + 1, 0.0);
    for (int k = 1; k <= order; ++k) {
        double sa = 0.0;
        double sb = 0.0;
        for (double v : e) {
            sa += std::cos(k * v);
            sb += std::sin(k * v);
        }
        const double fejer = 1.0 - static_cast<double>(k) / (order + 1);
        a[k] = fejer * sa / md;
        b[k] = fejer * sb / md;
    }
    UnfoldedLevels out;
    out.boundary = boundary;
    out.x.resize(m);
    parallel_for(static_cast<std::int64_t>(m), [&](std::int64_t i) {
        const double v = e[i];
        double f = v / kTwoPi;
        for (int k = 1; k <= order; ++k) {
            f += (a[k] * std::sin(k * v) + b[k] * (1.0 - std::cos(k * v))) / (M_PI * k);
        }
        out.x[i] = md * f;
    });
    out.period = md;
    if (boundary == Boundary::cut) {
        const double span = out.x.back() - out.x.front();
        const double scale = (md - 1.0) / span;
        const double x0 = out.x.front();
        for (double &v : out.x) {
            v = (v - x0) * scale;
        }
        out.period = 0.0;
    }
    return out;
}

UnfoldedLevels unfold_local(const std::vector<double> &e, int window, Boundary boundary) {
    if (window < 1) {
        throw ArgumentError("local-mean window must be positive");
    }
    const std::size_t m = e.size();
    const bool periodic = boundary == Boundary::periodic;
    const std::size_t ns = periodic ? m : m - 1;
    std::vector<double> s(ns);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        s[i] = e[i + 1] - e[i];
    }
    if (periodic) {
        s[m - 1] = e[0] + kTwoPi - e[m - 1];
    }
    const long half = window / 2;
    std::vector<double> u(ns);
    for (std::size_t i = 0; i < ns; ++i) {
        double sum = 0.0;
        long count = 0;
        for (long d = -half; d <= half; ++d) {
            long idx = static_cast<long>(i) + d;
            if (periodic) {
                idx = ((idx % static_cast<long>(ns)) + static_cast<long>(ns)) % static_cast<long>(ns);
            } else if (idx < 0 || idx >= static_cast<long>(ns)) {
                continue;
            }
            sum += s[static_cast<std::size_t>(idx)];
            ++count;
        }
        const double mean = sum / static_cast<double>(count);
        u[i] = mean > 0 ? s[i] / mean : 0.0;
    }
    const double total = std::accumulate(u.begin(), u.end(), 0.0);
    const double scale = static_cast<double>(ns) / total;
    UnfoldedLevels out;
    out.boundary = boundary;
    out.x.resize(m);
    out.x[0] = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        out.x[i + 1] = out.x[i] + u[i] * scale;
    }
    out.period = periodic ? static_cast<double>(ns) : 0.0;
    return out;
}

}  // namespace

UnfoldedLevels unfold(const PhaseSpectrum &spectrum, UnfoldMethod method, Boundary boundary, std::size_t min_levels) {
    const std::size_t m = spectrum.phases.size();
    if (m < std::max<std::size_t>(min_levels, 3)) {
        throw StatisticsError("unfolding needs at least " + std::to_string(std::max<std::size_t>(min_levels, 3)) +
                              " distinct levels, got " + std::to_string(m));
    }
    if (method.kind == UnfoldMethod::Kind::rank) {
        if (method.parameter < 0) {
            throw ArgumentError("Fourier order must be non-negative");
        }
        return unfold_rank(spectrum.phases, method.parameter, boundary);
    }
    return unfold_local(spectrum.phases, method.parameter, boundary);
}

SpacingSamples kth_spacings(const UnfoldedLevels &levels, int k) {
    if (k < 1 || static_cast<std::size_t>(k) >= levels.size()) {
        throw ArgumentError("spacing order must satisfy 1 <= k < number of levels");
    }
    SpacingSamples out;
    out.k = k;
    out.kind = SampleKind::spacing;
    const std::size_t count = levels.spacing_count(k);
    out.values.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.values[i] = levels.at(i + k) - levels.at(i);
    }
    return out;
}

SpacingSamples kth_ratios(const UnfoldedLevels &levels, int k, int stride) {
    if (k < 1 || 2 * static_cast<std::size_t>(k) >= levels.size()) {
        throw ArgumentError("ratio order must satisfy 1 <= 2k < number of levels");
    }
    if (stride < 1) {
        throw ArgumentError("ratio stride must be positive");
    }
    SpacingSamples out;
    out.k = k;
    out.kind = SampleKind::ratio;
    const std::size_t count = levels.boundary == Boundary::periodic ? levels.size() : levels.size() - 2 * k;
    for (std::size_t i = 0; i < count; i += static_cast<std::size_t>(stride)) {
        const double lo = levels.at(i + k) - levels.at(i);
        const double hi = levels.at(i + 2 * k) - levels.at(i + k);
        if (lo <= 0.0) {
            ++out.filtered;
            continue;
        }
        out.values.push_back(hi / lo);
    }
    return out;
}

double reference_pdf(SampleKind kind, int k, double x) {
    check_order(k);
    if (!(x >= 0.0)) {
        throw ArgumentError("reference densities are defined for x >= 0");
    }
    const double kd = k;
    if (kind == SampleKind::spacing) {
        if (x == 0.0) {
            return k == 1 ? 1.0 : 0.0;
        }
        return std::exp(kd * std::log(kd) - std::lgamma(kd) + (kd - 1.0) * std::log(x) - kd * x);
    }
    if (x == 0.0) {
        return k == 1 ? 1.0 : 0.0;
    }
    return std::exp(std::lgamma(2.0 * kd) - 2.0 * std::lgamma(kd) + (kd - 1.0) * std::log(x) -
                    2.0 * kd * std::log1p(x));
}

double reference_cdf(SampleKind kind, int k, double x) {
    check_order(k);
    if (x <= 0.0) {
        return 0.0;
    }
    if (kind == SampleKind::spacing) {
        // 1 - exp(-kx) sum_{i<k} (kx)^i / i!
        const double kx = k * x;
        double term = 1.0;
        double sum = 1.0;
        for (int i = 1; i < k; ++i) {
            term *= kx / i;
            sum += term;
        }
        return 1.0 - std::exp(-kx) * sum;
    }
    if (std::isinf(x)) {
        return 1.0;
    }
    // Regularized incomplete beta I_t(k, k) with t = x/(1+x), as a binomial tail.
    const double t = x / (1.0 + x);
    const int n = 2 * k - 1;
    double sum = 0.0;
    for (int i = k; i <= n; ++i) {
        const double lc = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
        sum += std::exp(lc + i * std::log(t) + (n - i) * std::log1p(-t));
    }
    return std::min(sum, 1.0);
}

GapRatio mean_adjacent_ratio(const UnfoldedLevels &levels, std::size_t min_levels) {
    if (levels.size() < std::max<std::size_t>(min_levels, 3)) {
        throw StatisticsError("mean gap ratio needs at least " + std::to_string(std::max<std::size_t>(min_levels, 3)) +
                              " levels");
    }
    const std::size_t ns = levels.spacing_count(1);
    const std::size_t count = levels.boundary == Boundary::periodic ? ns : ns - 1;
    GapRatio out;
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double a = levels.at(i + 1) - levels.at(i);
        const double b = levels.at(i + 2) - levels.at(i + 1);
        const double hi = std::max(a, b);
        if (hi <= 0.0) {
            ++out.filtered;
            continue;
        }
        sum += std::min(a, b) / hi;
        ++out.count;
    }
    out.mean = out.count > 0 ? sum / static_cast<double>(out.count) : 0.0;
    return out;
}

double ks_distance(const SpacingSamples &samples, std::size_t min_samples) {
    const std::size_t n = samples.values.size();
    if (n < std::max<std::size_t>(min_samples, 1)) {
        throw StatisticsError("KS distance needs at least " + std::to_string(std::max<std::size_t>(min_samples, 1)) +
                              " samples, got " + std::to_string(n));
    }
    std::vector<double> v = samples.values;
    const double scale = reference_scale(samples);
    for (double &x : v) {
        x *= scale;
    }
    std::sort(v.begin(), v.end());
    const double nd = static_cast<double>(n);
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = reference_cdf(samples.kind, samples.k, v[i]);
        d = std::max({d, (i + 1) / nd - f, f - i / nd});
    }
    return d;
}

Histogram histogram(const SpacingSamples &samples, int bins, double upper) {
    if (bins < 1) {
        throw ArgumentError("histogram needs at least one bin");
    }
    if (upper <= 0.0) {
        upper = samples.kind == SampleKind::spacing ? 5.0 : 10.0;
    }
    if (samples.values.empty()) {
        throw StatisticsError("histogram of an empty sample");
    }
    const double width = upper / bins;
    const double scale = reference_scale(samples);
    std::vector<double> counts(bins, 0.0);
    for (double raw : samples.values) {
        const double v = raw * scale;
        if (v < 0.0 || v >= upper) {
            continue;
        }
        counts[std::min(bins - 1, static_cast<int>(v / width))] += 1.0;
    }
    Histogram h;
    const double nd = static_cast<double>(samples.values.size());
    for (int b = 0; b < bins; ++b) {
        const double c = (b + 0.5) * width;
        h.centers.push_back(c);
        h.empirical.push_back(counts[b] / (nd * width));
        h.reference.push_back(reference_pdf(samples.kind, samples.k, c));
    }
    return h;
}

}  // namespace kising
