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

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace opd {

struct NelderMeadResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Downhill simplex minimization with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
///
/// The initial simplex is x0 plus `step` along each axis. Converged means the
/// spread of function values and the simplex diameter both fell below `tol`
/// before `max_iters` iterations.
inline NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x0,
                                    double step, int max_iters, double tol = 1e-10) {
    const int n = static_cast<int>(x0.size());
    NelderMeadResult out;
    std::vector<Eigen::VectorXd> pts(n + 1, x0);
    std::vector<double> val(n + 1);
    for (int i = 0; i < n; ++i) pts[i + 1][i] += step;
    for (int i = 0; i <= n; ++i) val[i] = f(pts[i]);
    out.evaluations = n + 1;

    std::vector<int> order(n + 1);
    for (int it = 0; it < max_iters; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return val[a] < val[b]; });
        const int best = order.front(), worst = order.back(), second = order[n - 1];

        double diameter = 0.0;
        for (int i = 0; i <= n; ++i) diameter = std::max(diameter, (pts[i] - pts[best]).lpNorm<Eigen::Infinity>());
        if (val[worst] - val[best] <= tol && diameter <= tol) {
            out.converged = true;
            break;
        }
        ++out.iterations;

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int i = 0; i <= n; ++i)
            if (i != worst) centroid += pts[i];
        centroid /= n;

        auto probe = [&](double t) {
            Eigen::VectorXd p = centroid + t * (pts[worst] - centroid);
            ++out.evaluations;
            return std::make_pair(p, f(p));
        };
        auto [xr, fr] = probe(-1.0);
        if (fr < val[best]) {
            auto [xe, fe] = probe(-2.0);
            if (fe < fr) {
                pts[worst] = xe;
                val[worst] = fe;
            } else {
                pts[worst] = xr;
                val[worst] = fr;
            }
        } else if (fr < val[second]) {
            pts[worst] = xr;
            val[worst] = fr;
        } else {
            auto [xc, fc] = fr < val[worst] ? probe(-0.5) : probe(0.5);
            if (fc < std::min(fr, val[worst])) {
                pts[worst] = xc;
                val[worst] = fc;
            } else {
                for (int i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
                    val[i] = f(pts[i]);
                    ++out.evaluations;
                }
            }
        }
    }
    int best = static_cast<int>(std::min_element(val.begin(), val.end()) - val.begin());
    out.x = pts[best];
    out.value = val[best];
    return out;
}

}  // namespace opd
