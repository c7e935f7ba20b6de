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

#ifndef KISING_SYMMETRIC_CORE_H
#define KISING_SYMMETRIC_CORE_H

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace kising {

using cplx = std::complex<double>;

/// Angles of the single-qubit state cos(theta0/2)|0> + exp(-i phi0) sin(theta0/2)|1>.
/// theta0 is clamped to [0, pi] and phi0 wrapped to (-pi, pi].
struct CoherentParams {
    double theta0 = 0.0;
    double phi0 = 0.0;

    static CoherentParams make(double theta0, double phi0);
};

/// Amplitudes c_q over the Dicke states |w_q>, q = number of qubits in |1>.
class SymmetricState {
   public:
    /// Validates length n+1 and unit norm to 1e-12.
    SymmetricState(int n_qubits, Eigen::VectorXcd coeffs);
    /// Divides by the norm; throws if the vector is zero.
    static SymmetricState normalized(int n_qubits, Eigen::VectorXcd coeffs);

    int n_qubits() const {
        return n_;
    }
    const Eigen::VectorXcd &coeffs() const {
        return coeffs_;
    }
    cplx operator[](int q) const {
        return coeffs_[q];
    }

   private:
    SymmetricState() = default;
    int n_ = 0;
    Eigen::VectorXcd coeffs_;
};

/// Amplitudes over |phi_q^+> (q = 0..floor(N/2)) and |phi_q^-> (q = 0..ceil(N/2)-1).
class ParityState {
   public:
    ParityState(int n_qubits, Eigen::VectorXcd plus, Eigen::VectorXcd minus);

    int n_qubits() const {
        return n_;
    }
    const Eigen::VectorXcd &plus() const {
        return plus_;
    }
    const Eigen::VectorXcd &minus() const {
        return minus_;
    }

   private:
    int n_;
    Eigen::VectorXcd plus_;
    Eigen::VectorXcd minus_;
};

/// Squared Schmidt coefficients in descending order, padded with zeros to
/// min(N_A, N_B) + 1 entries.
struct SchmidtSpectrum {
    std::vector<double> values;
    /// Probability mass discarded by amplitude truncation before the eigensolve.
    double dropped = 0.0;
};

struct SchmidtOptions {
    /// Smallest matrix entries are discarded while their summed weight stays
    /// below this budget. Zero keeps every entry.
    double drop_budget = 0.0;
};

int plus_size(int n);
int minus_size(int n);

/// Phase c'_q relating the two halves of |phi_q^+-> = (|w_q> +- c'_q |w_{N-q}>)/sqrt 2:
/// (-1)^(N/2-q) for even N, i^(N-2q) for odd N.
cplx mirror_phase(int n, int q);

/// Natural log of C(n, k), accurate to ~1e-15 relative for n <= 1e6.
double log_binomial(long long n, long long k);

/// ln C(n, k) for k = 0..n, accumulated in binary128.
std::vector<double> log_binomial_row(int n);

/// Weights C(N_A,k) C(N-N_A,q-k) / C(N,q) over k = 0..N_A (zero outside the support).
std::vector<double> hypergeometric_weights(int n, int n_a, int q);

SymmetricState coherent_dicke(const CoherentParams &params, int n);

ParityState to_parity(const SymmetricState &state);
SymmetricState from_parity(const ParityState &state);

/// Reusable tables for splitting N symmetric qubits into N_A : N - N_A.
class BipartiteSplit {
   public:
    BipartiteSplit(int n, int n_a);

    int n() const {
        return n_;
    }
    int n_a() const {
        return n_a_;
    }
    SchmidtSpectrum schmidt(const Eigen::VectorXcd &coeffs, const SchmidtOptions &options = {}) const;

   private:
    int n_;
    int n_a_;
    int n_b_;
    std::vector<double> log_a_;
    std::vector<double> log_b_;
    std::vector<double> log_n_;
};

SchmidtSpectrum bipartite_schmidt(const SymmetricState &state, int n_a, const SchmidtOptions &options = {});

/// Reduced density matrix of the first n_a qubits in the Dicke basis of A.
Eigen::MatrixXcd reduced_block_matrix(const SymmetricState &state, int n_a);

/// Entropy of a Schmidt spectrum, log base `base` (2 or e).
double schmidt_entropy(const SchmidtSpectrum &spectrum, double base);

}  // namespace kising

#endif
