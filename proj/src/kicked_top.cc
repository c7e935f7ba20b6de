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

#include "kising/kicked_top.h"

#include <cmath>

#include "kising/errors.h"
#include "kising/parallel.h"

namespace kising {

namespace {

constexpr double kMultipleOfPiTolerance = 1e-12;

bool is_multiple_of_pi(double p) {
    return std::fabs(std::sin(p)) <= kMultipleOfPiTolerance;
}

BlochPoint normalized(double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    return {x / r, y / r, z / r};
}

}  // namespace

BlochPoint BlochPoint::from_angles(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double BlochPoint::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

TopParams map_params(int n, const CouplingSpec &j, std::int64_t m) {
    if (n < 1) {
        throw ArgumentError("map_params needs N >= 1");
    }
    const double md = static_cast<double>(m);
    return {md * M_PI, static_cast<double>(n) * j.to_double() * M_PI * md};
}

BlochPoint classical_step(const BlochPoint &point, const TopParams &params) {
    const double c = std::cos(params.p);
    const double s = std::sin(params.p);
    const double xr = point.x * c + point.z * s;
    const double zr = point.z * c - point.x * s;
    const double twist = params.k_prime * zr;
    const double ct = std::cos(twist);
    const double st = std::sin(twist);
    return normalized(xr * ct - point.y * st, xr * st + point.y * ct, zr);
}

std::vector<BlochPoint> classical_orbit(const BlochPoint &start, const TopParams &params, std::int64_t steps) {
    if (steps < 0) {
        throw ArgumentError("orbit length must be non-negative");
    }
    std::vector<BlochPoint> orbit;
    orbit.reserve(static_cast<std::size_t>(steps) + 1);
    orbit.push_back(normalized(start.x, start.y, start.z));
    for (std::int64_t i = 0; i < steps; ++i) {
        orbit.push_back(classical_step(orbit.back(), params));
    }
    return orbit;
}

double lle_from_point(const BlochPoint &start, const TopParams &params, std::int64_t steps, std::int64_t transient,
                      double separation) {
    if (steps < 1 || transient < 0 || !(separation > 0.0)) {
        throw ArgumentError("two-trajectory LLE needs steps >= 1, transient >= 0 and a positive separation");
    }
    BlochPoint a = normalized(start.x, start.y, start.z);
    for (std::int64_t i = 0; i < transient; ++i) {
        a = classical_step(a, params);
    }
    // Initial offset along a tangent direction of the sphere.
    double tx = -a.y;
    double ty = a.x;
    double tz = 0.0;
    double tn = std::sqrt(tx * tx + ty * ty);
    if (tn < 1e-6) {
        tx = 1.0;
        ty = 0.0;
        tn = 1.0;
    }
    BlochPoint b = normalized(a.x + separation * tx / tn, a.y + separation * ty / tn, a.z + separation * tz / tn);
    double sum = 0.0;
    for (std::int64_t i = 0; i < steps; ++i) {
        const BlochPoint d0{b.x - a.x, b.y - a.y, b.z - a.z};
        const double before = d0.norm();
        a = classical_step(a, params);
        b = classical_step(b, params);
        const double dx = b.x - a.x;
        const double dy = b.y - a.y;
        const double dz = b.z - a.z;
        const double after = std::sqrt(dx * dx + dy * dy + dz * dz);
        if (after == 0.0) {
            // The trajectories merged in floating point; restart the offset.
            b = normalized(a.x + separation, a.y, a.z);
            continue;
        }
        sum += std::log(after / before);
        const double scale = separation / after;
        b = normalized(a.x + dx * scale, a.y + dy * scale, a.z + dz * scale);
    }
    return sum / static_cast<double>(steps);
}

double lle_estimate(const TopParams &params, const LleMode &mode) {
    if (!std::isfinite(params.p) || !std::isfinite(params.k_prime)) {
        throw ArgumentError("kicked-top parameters must be finite");
    }
    if (mode.kind == LleMode::Kind::analytic) {
        if (is_multiple_of_pi(params.p)) {
            return 0.0;
        }
        const double arg = params.k_prime * std::sin(params.p);
        if (!(arg > 0.0)) {
            throw ArgumentError("analytic LLE needs k' sin p > 0");
        }
        return std::log(arg) - 1.0;
    }
    if (mode.points < 1) {
        throw ArgumentError("two-trajectory LLE needs at least one initial point");
    }
    std::vector<double> rates(static_cast<std::size_t>(mode.points));
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    parallel_for(mode.points, [&](std::int64_t i) {
        const double z = 1.0 - (2.0 * i + 1.0) / mode.points;
        const double r = std::sqrt(1.0 - z * z);
        const BlochPoint start{r * std::cos(golden * i), r * std::sin(golden * i), z};
        rates[static_cast<std::size_t>(i)] = lle_from_point(start, params, mode.steps, mode.transient, mode.separation);
    });
    double sum = 0.0;
    for (double v : rates) {
        sum += v;
    }
    return sum / static_cast<double>(rates.size());
}

}  // namespace kising
