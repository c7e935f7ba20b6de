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

#ifndef KISING_KICKED_TOP_H
#define KISING_KICKED_TOP_H

#include <cstdint>
#include <vector>

#include "kising/coupling.h"

namespace kising {

/// Rotation angle p about y and twist strength k' of the kicked top.
struct TopParams {
    double p = 0.0;
    double k_prime = 0.0;
};

/// Point on the unit sphere (X, Y, Z) = (J_x, J_y, J_z)/j.
struct BlochPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    static BlochPoint from_angles(double theta, double phi);
    double norm() const;
};

/// p = m pi and k' = N J pi m for the chain at tau = m pi/2.
TopParams map_params(int n, const CouplingSpec &j, std::int64_t m = 1);

/// Rotation by p about y followed by the twist exp(-i k' Z (.)) about z; the
/// result is renormalized to the unit sphere.
BlochPoint classical_step(const BlochPoint &point, const TopParams &params);

/// Points 0..steps of the orbit starting at `start`.
std::vector<BlochPoint> classical_orbit(const BlochPoint &start, const TopParams &params, std::int64_t steps);

struct LleMode {
    enum class Kind { analytic, two_trajectory };
    Kind kind = Kind::analytic;
    std::int64_t steps = 20000;
    std::int64_t transient = 1000;
    double separation = 1e-8;
    /// Initial points, spread over the sphere on a Fibonacci lattice.
    int points = 64;

    static LleMode analytic() {
        return {};
    }
    static LleMode two_trajectory(std::int64_t steps = 20000, double separation = 1e-8) {
        LleMode mode;
        mode.kind = Kind::two_trajectory;
        mode.steps = steps;
        mode.separation = separation;
        return mode;
    }
};

/// Analytic mode: 0 for p = m pi, otherwise ln(k' sin p) - 1, which needs
/// k' sin p > 0. Two-trajectory mode: mean Benettin divergence rate over the
/// initial-point ensemble.
double lle_estimate(const TopParams &params, const LleMode &mode = LleMode::analytic());

/// Divergence rate of a single initial point.
double lle_from_point(const BlochPoint &start, const TopParams &params, std::int64_t steps, std::int64_t transient,
                      double separation);

}  // namespace kising

#endif
