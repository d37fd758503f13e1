// Copyright 2026 The opdiscord Authors
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

#pragma once

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

namespace opd {

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

inline double gaussian(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

/// Uniform sample from the probability simplex.
inline Eigen::VectorXd random_probability(int n, Rng& rng) {
    Eigen::VectorXd p(n);
    for (int i = 0; i < n; ++i) p[i] = -std::log(1.0 - uniform01(rng));
    return p / p.sum();
}

inline Eigen::VectorXcd random_ket(int d, Rng& rng) {
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) v[i] = std::complex<double>(gaussian(rng), gaussian(rng));
    return v.normalized();
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's diagonal removed.
inline Eigen::MatrixXcd haar_unitary(int d, Rng& rng) {
    Eigen::MatrixXcd g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gaussian(rng), gaussian(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        std::complex<double> ph = r(j, j) / std::abs(r(j, j));
        q.col(j) *= ph;
    }
    return q;
}

/// Density matrix G G^dagger / Tr for a d x rank Ginibre matrix G.
inline Eigen::MatrixXcd random_density(int d, Rng& rng, int rank = -1) {
    if (rank <= 0) rank = d;
    Eigen::MatrixXcd g(d, rank);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < rank; ++j) g(i, j) = std::complex<double>(gaussian(rng), gaussian(rng));
    Eigen::MatrixXcd rho = g * g.adjoint();
    return rho / rho.trace().real();
}

}  // namespace opd
