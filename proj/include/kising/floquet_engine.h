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

#ifndef KISING_FLOQUET_ENGINE_H
#define KISING_FLOQUET_ENGINE_H

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "kising/coupling.h"
#include "kising/quad.h"
#include "kising/symmetric_core.h"

namespace kising {

enum class Parity { plus, minus };

const char *parity_name(Parity sector);

int block_size(int n, Parity sector);

/// d_q = ((N-2q)^2 - N)/2 for q over the block range of `sector`.
std::vector<std::int64_t> dq_table(int n, Parity sector);

/// GCD of |d_q| over both blocks, zeros ignored unless every entry is zero.
std::int64_t gcd_dq(int n);

/// Quarter turns e_s in the sector prefactor i^(e_s) of one kick at tau = pi/2.
int sector_quarter_turns(int n, Parity sector);

enum class PeriodMode {
    exact,       ///< smallest n with U^n = I in both blocks
    projective,  ///< smallest n with U^n proportional to I
};

/// Operator period of U(m pi/2) for J = r/h, derived from the integer phase lattice.
std::int64_t predicted_period(int n, std::int64_t r, std::int64_t h, std::int64_t m = 1,
                              PeriodMode mode = PeriodMode::exact);

/// Period from the printed residue-class case table (N mod 4 / mod 8, h mod 4).
/// Kept for comparison; it disagrees with predicted_period for several residues.
std::int64_t case_rule_period(int n, std::int64_t r, std::int64_t h);

/// Floquet interval tau = m pi/2 + offset.
struct KickInterval {
    std::int64_t m = 1;
    quad offset = 0;

    quad radians() const {
        return static_cast<quad>(m) * quad_pi() / 2 + offset;
    }
};

/// Limits for the dense construction.
struct DenseGuard {
    int max_qubits = 20000;
};

class FloquetBlocks {
   public:
    enum class Representation { diagonal, dense };

    Representation representation() const {
        return rep_;
    }
    int n_qubits() const {
        return n_;
    }
    const CouplingSpec &coupling() const {
        return coupling_;
    }
    /// Power of U(pi/2) represented by a diagonal object (m times the kick count).
    std::int64_t multiplier() const {
        return multiplier_;
    }
    /// Floquet interval of a dense object.
    quad tau() const {
        return tau_;
    }
    /// Upper bound on the absolute error of every stored phase, radians.
    double phase_error_bound() const {
        return phase_error_;
    }

    /// Phases in [0, 2 pi), diagonal representation only.
    const std::vector<double> &phases(Parity sector) const;
    /// exp(i phase) for the diagonal representation.
    Eigen::VectorXcd diagonal(Parity sector) const;
    /// Dense block; diagonal objects are expanded.
    Eigen::MatrixXcd dense(Parity sector) const;

    static FloquetBlocks make_diagonal(int n, CouplingSpec coupling, std::int64_t multiplier,
                                       std::vector<double> plus, std::vector<double> minus, double error);
    static FloquetBlocks make_dense(int n, CouplingSpec coupling, quad tau, Eigen::MatrixXcd plus, Eigen::MatrixXcd minus);

   private:
    FloquetBlocks() = default;
    Representation rep_ = Representation::diagonal;
    int n_ = 0;
    CouplingSpec coupling_;
    std::int64_t multiplier_ = 1;
    quad tau_ = 0;
    double phase_error_ = 0.0;
    std::vector<double> plus_phases_;
    std::vector<double> minus_phases_;
    Eigen::MatrixXcd plus_dense_;
    Eigen::MatrixXcd minus_dense_;
};

/// Phase of block entry q of U(pi/2)^multiplier, radians in [0, 2 pi).
double floquet_phase(int n, Parity sector, int q, const CouplingSpec &j, std::int64_t multiplier);

/// Integer phase L with angle 2 pi L / (4h), rational coupling only.
std::int64_t lattice_phase(int n, Parity sector, int q, const Rational &j, std::int64_t multiplier);

FloquetBlocks diagonal_blocks(int n, const CouplingSpec &j, std::int64_t m);

/// U^n_kicks, recomputed from the exact multiplier m * n_kicks.
FloquetBlocks evolved_diagonal(const FloquetBlocks &blocks, std::int64_t n_kicks);

/// exp(-i beta S_y) in the Dicke basis (q = number of |1>), real orthogonal.
Eigen::MatrixXd collective_y_rotation(int n, double beta);

/// Visits the columns q and N-q of exp(-i beta S_y) together, for q = 0..floor(N/2).
/// Columns are produced one pair at a time so the full matrix is never stored.
void for_each_rotation_column_pair(int n, double beta,
                                   const std::function<void(int, const Eigen::VectorXd &, const Eigen::VectorXd &)> &visit);

/// Dense parity blocks of exp(-i J tau H_I) exp(-i tau sum sigma^y).
FloquetBlocks general_tau_blocks(int n, const CouplingSpec &j, quad tau, const DenseGuard &guard = {});

/// Full (N+1)x(N+1) Floquet matrix in the Dicke basis for general tau.
Eigen::MatrixXcd dicke_floquet(int n, const CouplingSpec &j, quad tau, const DenseGuard &guard = {});

/// sum |(U^n)_pq - U_pq| over both blocks.
double deviation(const FloquetBlocks &blocks, std::int64_t n_kicks);

/// sum |(U^n)_pq - I_pq| within one block. In projective mode the identity is
/// multiplied by the common phase of the (plus, 0) diagonal entry.
double deviation_from_identity(const FloquetBlocks &blocks, std::int64_t n_kicks, Parity sector,
                               PeriodMode mode = PeriodMode::exact);

/// Smallest n in [1, max_n] with both sector deviations below tol.
std::optional<std::int64_t> measured_period(const FloquetBlocks &blocks, std::int64_t max_n, double tol = 1e-9,
                                            PeriodMode mode = PeriodMode::exact);

/// Splits a Dicke-basis vector into (plus, minus) components without norm checks.
void split_parity(int n, const Eigen::Ref<const Eigen::VectorXcd> &x, Eigen::Ref<Eigen::VectorXcd> plus,
                  Eigen::Ref<Eigen::VectorXcd> minus);

}  // namespace kising

#endif
