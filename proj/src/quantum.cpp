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

#include "opd/quantum.hpp"

#include <cmath>
#include <complex>

#include "opd/errors.hpp"

namespace opd {

using cd = std::complex<double>;

std::vector<Eigen::MatrixXcd> gell_mann_basis(int d) {
    std::vector<Eigen::MatrixXcd> basis;
    basis.reserve(static_cast<std::size_t>(d) * d);
    basis.push_back(Eigen::MatrixXcd::Identity(d, d) / std::sqrt(static_cast<double>(d)));
    const double s = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
            m(j, k) = s;
            m(k, j) = s;
            basis.push_back(m);
        }
    }
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
            m(j, k) = cd(0, -s);
            m(k, j) = cd(0, s);
            basis.push_back(m);
        }
    }
    for (int l = 1; l < d; ++l) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
        double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int j = 0; j < l; ++j) m(j, j) = norm;
        m(l, l) = -l * norm;
        basis.push_back(m);
    }
    return basis;
}

Eigen::MatrixXcd to_operator(const TheoryModel& theory, const Eigen::VectorXd& coords) {
    if (!theory.is_quantum()) throw UnsupportedBackend("operator form requires the quantum backend");
    const int d = theory.levels();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int a = 0; a < theory.dim; ++a) {
        if (coords[a] != 0.0) m += coords[a] * theory.operator_basis[a];
    }
    return m;
}

Eigen::VectorXd to_coords(const TheoryModel& theory, const Eigen::MatrixXcd& op) {
    if (!theory.is_quantum()) throw UnsupportedBackend("operator form requires the quantum backend");
    Eigen::VectorXd c(theory.dim);
    for (int a = 0; a < theory.dim; ++a) {
        // Tr(B_a op) with B_a Hermitian.
        c[a] = (theory.operator_basis[a].transpose().cwiseProduct(op)).sum().real();
    }
    return c;
}

Eigen::MatrixXcd density_matrix(const StateVec& state) { return to_operator(*state.system, state.coords); }

StateVec density_state(const Theory& theory, const Eigen::MatrixXcd& rho) {
    return StateVec(theory, to_coords(*theory, rho));
}

StateVec ket_state(const Theory& theory, const Eigen::VectorXcd& ket) {
    Eigen::VectorXcd v = ket.normalized();
    return density_state(theory, v * v.adjoint());
}

EffectVec operator_effect(const Theory& theory, const Eigen::MatrixXcd& op) {
    return EffectVec(theory, to_coords(*theory, op));
}

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    return HermitianEigen{es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double trace_norm(const Eigen::MatrixXcd& m) { return hermitian_eigenvalues(m).cwiseAbs().sum(); }

Eigen::MatrixXcd trace_out_b(const Eigen::MatrixXcd& m, int da, int db) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(da, da);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < db; ++k) r(i, j) += m(i * db + k, j * db + k);
    return r;
}

Eigen::MatrixXcd trace_out_a(const Eigen::MatrixXcd& m, int da, int db) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(db, db);
    for (int k = 0; k < da; ++k) r += m.block(k * db, k * db, db, db);
    return r;
}

Eigen::MatrixXd superoperator(const Theory& input, const Theory& output,
                              const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& f) {
    if (!input->is_quantum() || !output->is_quantum()) {
        throw UnsupportedBackend("superoperator requires quantum systems");
    }
    Eigen::MatrixXd m(output->dim, input->dim);
    for (int b = 0; b < input->dim; ++b) m.col(b) = to_coords(*output, f(input->operator_basis[b]));
    return m;
}

TestModel luders_instrument(const Theory& theory, const Eigen::MatrixXcd& basis) {
    if (!is_orthonormal_basis(basis)) throw DomainError("measurement basis is not orthonormal");
    if (basis.rows() != theory->levels()) throw TypeError("basis size does not match the system");
    std::vector<Transformation> events;
    for (int k = 0; k < basis.cols(); ++k) {
        Eigen::MatrixXcd p = basis.col(k) * basis.col(k).adjoint();
        events.emplace_back(theory, theory, superoperator(theory, theory, [&](const Eigen::MatrixXcd& x) {
                                return Eigen::MatrixXcd(p * x * p);
                            }));
    }
    return TestModel(std::move(events));
}

Eigen::MatrixXcd choi_matrix(const Transformation& t) {
    const int din = t.input->levels();
    const int dout = t.output->levels();
    Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(din * dout, din * dout);
    auto apply = [&](const Eigen::MatrixXcd& herm) {
        return to_operator(*t.output, t.matrix * to_coords(*t.input, herm));
    };
    for (int i = 0; i < din; ++i) {
        for (int j = 0; j < din; ++j) {
            Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(din, din);
            x(i, j) = 1.0;
            // Split |i><j| into Hermitian parts; the map is complex-linear.
            Eigen::MatrixXcd h1 = (x + x.adjoint()) / 2.0;
            Eigen::MatrixXcd h2 = (x - x.adjoint()) / cd(0, 2);
            Eigen::MatrixXcd image = apply(h1) + cd(0, 1) * apply(h2);
            choi.block(i * dout, j * dout, dout, dout) = image;
        }
    }
    return choi;
}

bool is_orthonormal_basis(const Eigen::MatrixXcd& basis, double tol) {
    if (basis.rows() != basis.cols() || basis.rows() == 0) return false;
    Eigen::MatrixXcd g = basis.adjoint() * basis;
    return (g - Eigen::MatrixXcd::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace opd
