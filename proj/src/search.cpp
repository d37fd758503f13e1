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

#include "opd/search.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "opd/quantum.hpp"

namespace opd {

using cd = std::complex<double>;

std::vector<Eigen::Vector3d> fibonacci_sphere(int n) {
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(static_cast<std::size_t>(std::max(n, 0)));
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        double z = 1.0 - (2.0 * i + 1.0) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden * i;
        pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return pts;
}

Eigen::MatrixXcd qubit_basis(double theta, double phi) {
    Eigen::MatrixXcd u(2, 2);
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    u(0, 0) = c;
    u(1, 0) = std::polar(s, phi);
    u(0, 1) = -std::polar(s, -phi);
    u(1, 1) = c;
    return u;
}

Eigen::MatrixXcd qubit_basis(const Eigen::Vector3d& direction) {
    Eigen::Vector3d n = direction.normalized();
    return qubit_basis(std::acos(std::clamp(n.z(), -1.0, 1.0)), std::atan2(n.y(), n.x()));
}

Eigen::Vector2d bloch_angles(const Eigen::MatrixXcd& basis) {
    Eigen::Vector2cd k = basis.col(0);
    cd rho01 = k[0] * std::conj(k[1]);
    double x = 2 * rho01.real(), y = -2 * rho01.imag();
    double z = std::norm(k[0]) - std::norm(k[1]);
    return Eigen::Vector2d(std::acos(std::clamp(z, -1.0, 1.0)), std::atan2(y, x));
}

Eigen::MatrixXcd rotate_basis(const Eigen::MatrixXcd& base, const Eigen::VectorXd& params) {
    const int d = static_cast<int>(base.rows());
    const std::vector<Eigen::MatrixXcd> gm = gell_mann_basis(d);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
    for (int a = 0; a < params.size(); ++a) h += params[a] * gm[a + 1];
    HermitianEigen eig = hermitian_eigen(h);
    Eigen::VectorXcd phases(d);
    for (int i = 0; i < d; ++i) phases[i] = std::polar(1.0, eig.values[i]);
    Eigen::MatrixXcd u = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
    return u * base;
}

std::vector<Eigen::MatrixXcd> measurement_bases(int d, const SearchConfig& config) {
    std::vector<Eigen::MatrixXcd> out;
    if (d == 2) {
        for (const auto& p : fibonacci_sphere(config.grid_points)) out.push_back(qubit_basis(p));
        return out;
    }
    Rng rng(config.seed);
    out.reserve(static_cast<std::size_t>(config.unitary_samples));
    for (int i = 0; i < config.unitary_samples; ++i) out.push_back(haar_unitary(d, rng));
    return out;
}

StateVec random_state(const Theory& theory, Rng& rng) {
    if (theory->is_quantum()) return density_state(theory, random_density(theory->levels(), rng));
    Eigen::VectorXd w = random_probability(static_cast<int>(theory->pure_states.size()), rng);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(theory->dim);
    for (std::size_t i = 0; i < theory->pure_states.size(); ++i) x += w[i] * theory->pure_states[i];
    // Remove the rounding drift of the deterministic pairing.
    x /= theory->deterministic_effect.dot(x);
    return StateVec(theory, x);
}

BasisChart::BasisChart(Eigen::MatrixXcd base) : base_(std::move(base)) {
    if (base_.rows() == 2) angles_ = bloch_angles(base_);
}

int BasisChart::num_params() const {
    const int d = static_cast<int>(base_.rows());
    return d == 2 ? 2 : d * d - 1;
}

Eigen::MatrixXcd BasisChart::at(const Eigen::VectorXd& params) const {
    if (base_.rows() == 2) return qubit_basis(params[0], params[1]);
    return rotate_basis(base_, params);
}

Eigen::VectorXd BasisChart::origin() const {
    if (base_.rows() == 2) return angles_;
    return Eigen::VectorXd::Zero(num_params());
}

double BasisChart::step() const { return 0.05; }

}  // namespace opd
