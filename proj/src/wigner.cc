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

#include <algorithm>
#include <cmath>
#include <vector>

#include "kising/errors.h"
#include "kising/floquet_engine.h"

namespace kising {

namespace {

// Column of exp(-i beta S_y) for the extremal states q = 0 (top) or q = N (bottom).
Eigen::VectorXd extremal_column(int n, double beta, bool top) {
    const double c = std::cos(beta / 2);
    const double s = std::sin(beta / 2);
    // top:    sqrt(C(N,p)) c^(N-p) s^p
    // bottom: sqrt(C(N,p)) (-s)^(N-p) c^p
    const double a = top ? c : -s;
    const double b = top ? s : c;
    std::vector<double> row = log_binomial_row(n);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n + 1);
    for (int p = 0; p <= n; ++p) {
        const int ea = n - p;
        const int eb = p;
        if ((ea > 0 && a == 0.0) || (eb > 0 && b == 0.0)) {
            continue;
        }
        double lm = 0.5 * row[p];
        if (ea > 0) {
            lm += ea * std::log(std::fabs(a));
        }
        if (eb > 0) {
            lm += eb * std::log(std::fabs(b));
        }
        double sign = 1.0;
        if (ea % 2 == 1 && a < 0) {
            sign = -sign;
        }
        if (eb % 2 == 1 && b < 0) {
            sign = -sign;
        }
        v[p] = sign * std::exp(lm);
    }
    return v;
}

// Gaussian elimination with partial pivoting for a tridiagonal system
// (the algorithm of LAPACK's gtsv). dl = sub, d = diag, du = super; rhs overwritten.
void solve_tridiagonal(std::vector<double> dl, std::vector<double> d, std::vector<double> du, Eigen::VectorXd &rhs,
                       double tiny) {
    const int n = static_cast<int>(d.size());
    std::vector<double> du2(std::max(n, 1), 0.0);
    for (int i = 0; i + 1 < n; ++i) {
        if (std::fabs(d[i]) >= std::fabs(dl[i])) {
            if (d[i] == 0.0) {
                d[i] = tiny;
            }
            double fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            rhs[i + 1] -= fact * rhs[i];
        } else {
            double fact = d[i] / dl[i];
            d[i] = dl[i];
            double temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            du[i] = temp;
            double tb = rhs[i];
            rhs[i] = rhs[i + 1];
            rhs[i + 1] = tb - fact * rhs[i + 1];
        }
    }
    if (d[n - 1] == 0.0) {
        d[n - 1] = tiny;
    }
    rhs[n - 1] /= d[n - 1];
    if (n > 1) {
        rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / d[n - 2];
    }
    for (int i = n - 3; i >= 0; --i) {
        rhs[i] = (rhs[i] - du[i] * rhs[i + 1] - du2[i] * rhs[i + 2]) / d[i];
    }
}

class RotationColumns {
   public:
    /// beta in (-pi, pi].
    RotationColumns(int n, double beta)
        : n_(n), j_(0.5 * n), beta_(beta), cb_(std::cos(beta)), sb_(std::sin(beta)), e_(n) {
        for (int p = 0; p < n; ++p) {
            e_[p] = std::sqrt(static_cast<double>(n - p) * static_cast<double>(p + 1));
        }
        diag_.resize(n + 1);
        off_.resize(n);
        for (int p = 0; p <= n; ++p) {
            diag_[p] = cb_ * (j_ - p);
        }
        for (int p = 0; p < n; ++p) {
            off_[p] = 0.5 * sb_ * e_[p];
        }
    }

    // Column q from column q-1 (down) or q+1 (up) by the rotated ladder operator.
    Eigen::VectorXd predict(const Eigen::VectorXd &v, int q, bool down) const {
        Eigen::VectorXd out(n_ + 1);
        const double cx = cb_ - 1.0;
        for (int p = 0; p <= n_; ++p) {
            double lower = p > 0 ? e_[p - 1] * v[p - 1] : 0.0;  // <p|S_-|p-1> v_{p-1}
            double upper = p < n_ ? e_[p] * v[p + 1] : 0.0;     // <p|S_+|p+1> v_{p+1}
            double sx = 0.5 * (lower + upper);
            double ladder = down ? lower : upper;
            out[p] = ladder + cx * sx - sb_ * (j_ - p) * v[p];
        }
        double norm = down ? e_[q - 1] : e_[q];
        return out / norm;
    }

    // Inverse iteration on cos(beta) S_z + sin(beta) S_x, whose eigenvalue for column q is j - q.
    Eigen::VectorXd refine(const Eigen::VectorXd &guess, int q) const {
        const double lambda = j_ - q;
        const double shift = lambda + 1e-10;
        const double tiny = 1e-300 + std::numeric_limits<double>::epsilon() * (j_ + 1);
        Eigen::VectorXd x = guess;
        std::vector<double> d(n_ + 1);
        for (int p = 0; p <= n_; ++p) {
            d[p] = diag_[p] - shift;
        }
        for (int it = 0; it < 2; ++it) {
            solve_tridiagonal(off_, d, off_, x, tiny);
            x /= x.norm();
        }
        if (x.dot(guess) < 0) {
            x = -x;
        }
        return x;
    }

    Eigen::VectorXd top() const {
        return extremal_column(n_, beta_, true);
    }
    Eigen::VectorXd bottom() const {
        return extremal_column(n_, beta_, false);
    }

   private:
    int n_;
    double j_;
    double beta_;
    double cb_;
    double sb_;
    std::vector<double> e_;
    std::vector<double> diag_;
    std::vector<double> off_;
};

}  // namespace

void for_each_rotation_column_pair(int n, double beta,
                                   const std::function<void(int, const Eigen::VectorXd &, const Eigen::VectorXd &)> &visit) {
    if (n < 1) {
        throw ArgumentError("number of qubits must be at least 1");
    }
    // exp(-i 2 pi S_y) = (-1)^N, so reduce beta to (-pi, pi] and keep the sign.
    const double turns = std::round(beta / (2 * M_PI));
    const double reduced = beta - 2 * M_PI * turns;
    const double sign = n % 2 == 1 && std::fmod(std::fabs(turns), 2.0) == 1.0 ? -1.0 : 1.0;
    RotationColumns cols(n, reduced);
    Eigen::VectorXd lo = cols.top();
    Eigen::VectorXd hi = cols.bottom();
    if (n > 1) {
        lo = cols.refine(lo, 0);
        hi = cols.refine(hi, n);
    }
    for (int q = 0; 2 * q <= n; ++q) {
        if (q > 0) {
            lo = cols.refine(cols.predict(lo, q, true), q);
            if (2 * q != n) {
                hi = cols.refine(cols.predict(hi, n - q, false), n - q);
            }
        }
        if (sign < 0) {
            visit(q, -lo, 2 * q == n ? -lo : -hi);
        } else {
            visit(q, lo, 2 * q == n ? lo : hi);
        }
    }
}

Eigen::MatrixXd collective_y_rotation(int n, double beta) {
    Eigen::MatrixXd r(n + 1, n + 1);
    for_each_rotation_column_pair(n, beta, [&](int q, const Eigen::VectorXd &lo, const Eigen::VectorXd &hi) {
        r.col(q) = lo;
        r.col(n - q) = hi;
    });
    return r;
}

}  // namespace kising
