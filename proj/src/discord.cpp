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

#include "opd/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "opd/errors.hpp"
#include "opd/lp.hpp"
#include "opd/nelder_mead.hpp"
#include "opd/quantum.hpp"
#include "opd/random.hpp"
#include "opd/search.hpp"

namespace opd {

namespace {

using cd = std::complex<double>;

const TheoryModel& require_bipartite(const StateVec& s, const char* what) {
    if (!s.system->is_bipartite()) throw TypeError(std::string(what) + ": state is not bipartite");
    return *s.system;
}

void require_normalized(const StateVec& s, const char* what) {
    if (!s.normalized) throw DomainError(std::string(what) + ": state must be normalized");
}

Eigen::MatrixXcd kron_identity(const Eigen::MatrixXcd& u, int db) {
    const int da = static_cast<int>(u.rows());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(da * db, da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < db; ++k) out(i * db + k, j * db + k) = u(i, j);
    return out;
}

// rho expressed in the frame where the A basis is the computational one.
Eigen::MatrixXcd rotate_to_basis(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& basis, int db) {
    Eigen::MatrixXcd w = kron_identity(basis, db);
    return w.adjoint() * rho * w;
}

// Trace distance between a rotated rho and its pinching: half the trace norm of
// the off-diagonal blocks.
double pinching_distance(const Eigen::MatrixXcd& rotated, int da, int db) {
    Eigen::MatrixXcd off = rotated;
    for (int k = 0; k < da; ++k) off.block(k * db, k * db, db, db).setZero();
    return 0.5 * trace_norm(off);
}

double blocks_distance(const Eigen::MatrixXcd& rotated, const std::vector<Eigen::MatrixXcd>& blocks, int db) {
    Eigen::MatrixXcd diff = rotated;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const int o = static_cast<int>(k) * db;
        diff.block(o, o, db, db) -= blocks[k];
    }
    return 0.5 * trace_norm(diff);
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
    HermitianEigen eig = hermitian_eigen(m);
    Eigen::VectorXd s = eig.values.cwiseMax(0.0).cwiseSqrt();
    return eig.vectors * s.asDiagonal() * eig.vectors.adjoint();
}

Eigen::VectorXd pack(const Eigen::MatrixXcd& g) {
    const Eigen::Index n = g.size();
    Eigen::VectorXd x(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        x[i] = g.data()[i].real();
        x[n + i] = g.data()[i].imag();
    }
    return x;
}

Eigen::MatrixXcd unpack(const Eigen::VectorXd& x, int db) {
    Eigen::MatrixXcd g(db, db);
    const Eigen::Index n = g.size();
    for (Eigen::Index i = 0; i < n; ++i) g.data()[i] = cd(x[i], x[n + i]);
    return g;
}

// Conditional blocks S_k = G_k G_k^dagger / sum_j ||G_j||_F^2.
std::vector<Eigen::MatrixXcd> blocks_from_factors(const std::vector<Eigen::MatrixXcd>& g) {
    double z = 0.0;
    for (const auto& f : g) z += f.squaredNorm();
    std::vector<Eigen::MatrixXcd> s;
    for (const auto& f : g) s.push_back(f * f.adjoint() / z);
    return s;
}

struct InnerSolution {
    std::vector<Eigen::MatrixXcd> blocks;
    double value = 0.0;
    long evaluations = 0;
};

InnerSolution quantum_inner(const Eigen::MatrixXcd& rotated, int da, int db, const SearchConfig& cfg) {
    std::vector<Eigen::MatrixXcd> surrogate;
    for (int k = 0; k < da; ++k) surrogate.push_back(rotated.block(k * db, k * db, db, db));
    InnerSolution best{surrogate, blocks_distance(rotated, surrogate, db), 1};
    if (best.value <= cfg.tol_zero || cfg.inner_starts <= 0) return best;

    Rng rng(cfg.seed ^ 0x9E3779B97F4A7C15ULL);
    for (int start = 0; start < cfg.inner_starts; ++start) {
        std::vector<Eigen::MatrixXcd> s = surrogate;
        if (start > 0) {
            Eigen::VectorXd w = random_probability(da, rng);
            for (int k = 0; k < da; ++k) s[k] = 0.7 * surrogate[k] + 0.3 * w[k] * random_density(db, rng);
        }
        std::vector<Eigen::MatrixXcd> g;
        for (const auto& b : s) g.push_back(psd_sqrt(b));
        auto value_of = [&](const std::vector<Eigen::MatrixXcd>& factors) {
            ++best.evaluations;
            return blocks_distance(rotated, blocks_from_factors(factors), db);
        };
        double current = value_of(g);
        for (int sweep = 0; sweep < cfg.inner_sweeps; ++sweep) {
            for (int k = 0; k < da; ++k) {
                double scale = std::max(1e-3, g[k].norm() / db);
                auto f = [&](const Eigen::VectorXd& x) {
                    std::vector<Eigen::MatrixXcd> trial = g;
                    trial[k] = unpack(x, db);
                    return value_of(trial);
                };
                NelderMeadResult nm = nelder_mead(f, pack(g[k]), 0.1 * scale, 40 * db * db, 1e-13);
                if (nm.value < current) {
                    g[k] = unpack(nm.x, db);
                    current = nm.value;
                }
            }
        }
        if (current < best.value - 1e-15) {
            best.blocks = blocks_from_factors(g);
            best.value = current;
        }
    }
    return best;
}

FamilyFit quantum_family_fit(const StateVec& rho, const Eigen::MatrixXcd& basis, const SearchConfig& cfg) {
    const TheoryModel& ab = *rho.system;
    const Theory& a = ab.factor_a;
    const Theory& b = ab.factor_b;
    const int da = a->levels(), db = b->levels();
    Eigen::MatrixXcd rotated = rotate_to_basis(density_matrix(rho), basis, db);
    InnerSolution inner = quantum_inner(rotated, da, db, cfg);

    FamilyFit fit;
    fit.exact = false;
    fit.decomposition.weights.resize(da);
    for (int k = 0; k < da; ++k) {
        Eigen::MatrixXcd p = basis.col(k) * basis.col(k).adjoint();
        fit.decomposition.family.push_back(density_state(a, p));
        double q = std::max(0.0, inner.blocks[k].trace().real());
        fit.decomposition.weights[k] = q;
        Eigen::MatrixXcd cond = q > 1e-15 ? Eigen::MatrixXcd(inner.blocks[k] / q)
                                          : Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(db, db) / db);
        fit.decomposition.conditionals.push_back(density_state(b, cond));
    }
    fit.decomposition.weights /= fit.decomposition.weights.sum();
    DiscriminationResult dr = min_error_discrimination(rho, make_null_discord_state(fit.decomposition));
    fit.distance = dr.distance;
    fit.certificate = dr.optimal_effect;
    return fit;
}

FamilyFit polytope_family_fit(const StateVec& rho, const PureFamily& family) {
    const TheoryModel& ab = *rho.system;
    const TheoryModel& b = *ab.factor_b;
    const int dim = ab.dim;
    const int k_count = static_cast<int>(family.states.size());
    const int j_count = static_cast<int>(b.pure_states.size());
    const int v_count = static_cast<int>(ab.pure_states.size());

    std::vector<Eigen::VectorXd> products;
    for (int k = 0; k < k_count; ++k) {
        for (int j = 0; j < j_count; ++j) {
            products.push_back(compose(family.states[k], StateVec(ab.factor_b, b.pure_states[j])).coords);
        }
    }

    lp::LinearProgram prog;
    const int w0 = prog.add_variables(k_count * j_count, 0.0);
    const int y0 = prog.add_variables(v_count, 1.0);
    const int z0 = prog.add_variables(v_count, 0.0);
    for (int r = 0; r < dim; ++r) {
        std::vector<lp::LinearProgram::Term> terms;
        for (int c = 0; c < k_count * j_count; ++c)
            if (products[c][r] != 0.0) terms.emplace_back(w0 + c, products[c][r]);
        for (int v = 0; v < v_count; ++v) {
            double x = ab.pure_states[v][r];
            if (x == 0.0) continue;
            terms.emplace_back(y0 + v, x);
            terms.emplace_back(z0 + v, -x);
        }
        prog.add_constraint(std::move(terms), lp::Relation::Equal, rho.coords[r]);
    }
    {
        std::vector<lp::LinearProgram::Term> terms;
        for (int c = 0; c < k_count * j_count; ++c) terms.emplace_back(w0 + c, 1.0);
        prog.add_constraint(std::move(terms), lp::Relation::Equal, 1.0);
    }
    lp::Solution sol = prog.minimize();
    if (!sol.optimal()) throw ConsistencyError("family-distance LP did not reach an optimum");

    FamilyFit fit;
    fit.exact = true;
    fit.distance = std::max(0.0, sol.objective);
    fit.certificate = EffectVec(rho.system, sol.duals.head(dim));
    NullDiscordDecomposition& d = fit.decomposition;
    d.family = family.states;
    d.weights.resize(k_count);
    for (int k = 0; k < k_count; ++k) {
        Eigen::VectorXd w = sol.x.segment(w0 + k * j_count, j_count).cwiseMax(0.0);
        double q = w.sum();
        d.weights[k] = q;
        Eigen::VectorXd sigma = Eigen::VectorXd::Zero(b.dim);
        if (q > 1e-14) {
            for (int j = 0; j < j_count; ++j) sigma += (w[j] / q) * b.pure_states[j];
            sigma /= b.deterministic_effect.dot(sigma);
        } else {
            d.weights[k] = 0.0;
            sigma = b.pure_states.front();
        }
        d.conditionals.emplace_back(ab.factor_b, sigma);
    }
    d.weights /= d.weights.sum();
    return fit;
}

Eigen::MatrixXcd weighted_reduced_operator(const Eigen::MatrixXcd& rho, int da, int db, const Eigen::MatrixXcd& x) {
    Eigen::MatrixXcd out(da, da);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) out(i, j) = (x.transpose().cwiseProduct(rho.block(i * db, j * db, db, db))).sum();
    return out;
}

// Eigenbases of the A marginal and of a generic combination of B-weighted
// reduced operators. For a classical-quantum state all of these operators are
// diagonal in the classical basis.
std::vector<HermitianEigen> structural_eigensystems(const Eigen::MatrixXcd& rho, int da, int db, std::uint64_t seed) {
    std::vector<HermitianEigen> out;
    Eigen::MatrixXcd marginal = trace_out_b(rho, da, db);
    out.push_back(hermitian_eigen(marginal));
    Rng rng(seed);
    Eigen::MatrixXcd h = marginal;
    std::vector<Eigen::MatrixXcd> obs = gell_mann_basis(db);
    for (std::size_t b = 1; b < obs.size(); ++b) h += gaussian(rng) * weighted_reduced_operator(rho, da, db, obs[b]);
    h = (h + h.adjoint()) / 2.0;
    out.push_back(hermitian_eigen(h));
    return out;
}

// Rotations of pairs of columns inside each cluster of (numerically) equal eigenvalues.
void degenerate_rotations(const HermitianEigen& eig, int resolution, std::size_t budget,
                          std::vector<Eigen::MatrixXcd>& out) {
    const int d = static_cast<int>(eig.values.size());
    const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
    int start = 0;
    while (start < d) {
        int end = start + 1;
        while (end < d && eig.values[end] - eig.values[end - 1] <= 1e-9 * scale) ++end;
        for (int i = start; i < end; ++i) {
            for (int j = i + 1; j < end; ++j) {
                for (int t = 0; t < resolution; ++t) {
                    for (int p = 0; p < resolution; ++p) {
                        if (out.size() >= budget) return;
                        Eigen::MatrixXcd r = qubit_basis(std::numbers::pi * t / resolution,
                                                         2 * std::numbers::pi * p / resolution);
                        Eigen::MatrixXcd u = eig.vectors;
                        u.col(i) = r(0, 0) * eig.vectors.col(i) + r(1, 0) * eig.vectors.col(j);
                        u.col(j) = r(0, 1) * eig.vectors.col(i) + r(1, 1) * eig.vectors.col(j);
                        out.push_back(std::move(u));
                    }
                }
            }
        }
        start = end;
    }
}

DiscordResult polytope_discord(const StateVec& rho, const SearchConfig& cfg) {
    const TheoryModel& ab = *rho.system;
    std::vector<PureFamily> families = maximal_distinguishable_pure_families(ab.factor_a, cfg);
    DiscordResult best;
    bool have = false;
    for (std::size_t i = 0; i < families.size(); ++i) {
        FamilyFit fit = polytope_family_fit(rho, families[i]);
        ++best.outer_evaluations;
        if (!have || fit.distance < best.value - 1e-12) {
            have = true;
            best.value = fit.distance;
            best.optimizer = std::move(fit.decomposition);
            best.certificate_effect = std::move(fit.certificate);
            best.family_index = i;
        }
    }
    best.exact = true;
    best.converged = true;
    return best;
}

DiscordResult quantum_discord(const StateVec& rho, const SearchConfig& cfg) {
    const TheoryModel& ab = *rho.system;
    const int da = ab.factor_a->levels(), db = ab.factor_b->levels();
    const Eigen::MatrixXcd m = density_matrix(rho);

    std::vector<Eigen::MatrixXcd> candidates;
    for (const auto& eig : structural_eigensystems(m, da, db, cfg.seed)) candidates.push_back(eig.vectors);
    for (auto& u : measurement_bases(da, cfg)) candidates.push_back(std::move(u));

    DiscordResult result;
    std::vector<double> score(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        score[i] = pinching_distance(rotate_to_basis(m, candidates[i], db), da, db);
    }
    result.outer_evaluations += static_cast<long>(candidates.size());

    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return score[x] < score[y]; });
    const std::size_t refine_count = std::min<std::size_t>(std::max(cfg.restarts, 1), order.size());

    bool have = false;
    for (std::size_t r = 0; r < refine_count; ++r) {
        if (have && result.value <= cfg.tol_zero) break;
        const std::size_t idx = order[r];
        Eigen::MatrixXcd basis = candidates[idx];
        bool converged = score[idx] <= cfg.tol_zero;
        if (!converged && cfg.refine_iters > 0) {
            BasisChart chart(basis);
            auto f = [&](const Eigen::VectorXd& x) {
                return pinching_distance(rotate_to_basis(m, chart.at(x), db), da, db);
            };
            NelderMeadResult nm = nelder_mead(f, chart.origin(), chart.step(), cfg.refine_iters, 1e-12);
            result.outer_evaluations += nm.evaluations;
            if (nm.value <= score[idx]) basis = chart.at(nm.x);
            converged = nm.converged || nm.value <= cfg.tol_zero;
        }
        FamilyFit fit = quantum_family_fit(rho, basis, cfg);
        if (!have || fit.distance < result.value - 1e-12) {
            have = true;
            result.value = fit.distance;
            result.optimizer = std::move(fit.decomposition);
            result.certificate_effect = std::move(fit.certificate);
            result.family_index = idx;
            result.basis = basis;
            result.converged = converged;
        }
    }
    result.exact = false;
    return result;
}

}  // namespace

void validate_decomposition(const NullDiscordDecomposition& d) {
    const std::size_t n = d.family.size();
    if (n == 0) throw DomainError("null-discord decomposition: empty family");
    if (static_cast<std::size_t>(d.weights.size()) != n || d.conditionals.size() != n) {
        throw DomainError("null-discord decomposition: family, weights and conditionals differ in length");
    }
    if (d.weights.minCoeff() < -1e-12 || std::abs(d.weights.sum() - 1.0) > 1e-12) {
        throw DomainError("null-discord decomposition: weights are not a probability vector");
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (!same_system(*d.family[k].system, *d.family[0].system)) {
            throw TypeError("null-discord decomposition: family members on different systems");
        }
        if (!same_system(*d.conditionals[k].system, *d.conditionals[0].system)) {
            throw TypeError("null-discord decomposition: conditionals on different systems");
        }
        if (!d.conditionals[k].normalized || !is_valid_state(d.conditionals[k])) {
            throw DomainError("null-discord decomposition: conditional " + std::to_string(k) +
                              " is not a normalized state");
        }
        if (!d.family[k].normalized || !is_valid_state(d.family[k]) || !is_pure(d.family[k])) {
            throw DomainError("null-discord decomposition: family member " + std::to_string(k) + " is not pure");
        }
    }
    if (n > 1 && !are_perfectly_distinguishable(d.family).distinguishable) {
        throw DomainError("null-discord decomposition: family is not perfectly distinguishable");
    }
}

StateVec make_null_discord_state(const NullDiscordDecomposition& d) {
    validate_decomposition(d);
    StateVec out = compose(d.family[0], d.conditionals[0]);
    out.coords *= d.weights[0];
    for (std::size_t k = 1; k < d.family.size(); ++k) {
        out.coords += d.weights[k] * compose(d.family[k], d.conditionals[k]).coords;
    }
    out = StateVec(out.system, out.coords);
    if (!is_valid_state(out)) throw DomainError("null-discord decomposition: reconstruction is not a valid state");
    return out;
}

FamilyFit distance_to_family(const StateVec& rho_ab, const PureFamily& family, const SearchConfig& config) {
    const TheoryModel& ab = require_bipartite(rho_ab, "distance_to_family");
    require_normalized(rho_ab, "distance_to_family");
    if (family.states.empty()) throw DomainError("distance_to_family: empty family");
    for (const auto& s : family.states) {
        if (!same_system(*s.system, *ab.factor_a)) throw DomainError("distance_to_family: family is not on system A");
    }
    if (ab.is_quantum()) {
        if (!family.basis) throw DomainError("distance_to_family: quantum family needs its basis");
        return quantum_family_fit(rho_ab, *family.basis, config);
    }
    return polytope_family_fit(rho_ab, family);
}

FamilyFit distance_to_family(const StateVec& rho_ab, const std::vector<StateVec>& states, const SearchConfig& config) {
    const TheoryModel& ab = require_bipartite(rho_ab, "distance_to_family");
    if (states.empty()) throw DomainError("distance_to_family: empty family");
    for (const auto& s : states) {
        if (!same_system(*s.system, *ab.factor_a)) throw DomainError("distance_to_family: family is not on system A");
        if (!is_pure(s)) throw DomainError("distance_to_family: family member is not pure");
    }
    DistinguishabilityCertificate cert = are_perfectly_distinguishable(states);
    if (!cert.distinguishable) throw DomainError("distance_to_family: family is not perfectly distinguishable");

    PureFamily fam;
    fam.states = states;
    fam.effects = cert.discriminating_effects;
    if (ab.is_quantum()) {
        // Complete the family's kets to an orthonormal basis of A.
        const int d = ab.factor_a->levels();
        Eigen::MatrixXcd kets(d, static_cast<Eigen::Index>(states.size()));
        for (std::size_t k = 0; k < states.size(); ++k) {
            HermitianEigen eig = hermitian_eigen(density_matrix(states[k]));
            kets.col(static_cast<Eigen::Index>(k)) = eig.vectors.col(d - 1);
        }
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(kets);
        Eigen::MatrixXcd q = qr.householderQ();
        q.leftCols(kets.cols()) = kets;
        fam.basis = q;
    }
    return distance_to_family(rho_ab, fam, config);
}

DiscordResult discord(const StateVec& rho_ab, const SearchConfig& config) {
    const TheoryModel& ab = require_bipartite(rho_ab, "discord");
    require_normalized(rho_ab, "discord");
    return ab.is_quantum() ? quantum_discord(rho_ab, config) : polytope_discord(rho_ab, config);
}

NullDiscordCheck is_null_discord(const StateVec& rho_ab, double tol, const SearchConfig& config) {
    const TheoryModel& ab = require_bipartite(rho_ab, "is_null_discord");
    require_normalized(rho_ab, "is_null_discord");
    NullDiscordCheck out;
    if (ab.is_polytope()) {
        DiscordResult r = polytope_discord(rho_ab, config);
        out.discord_value = r.value;
        out.null_discord = r.value <= tol;
        if (out.null_discord) out.decomposition = std::move(r.optimizer);
        return out;
    }
    out.fixed_point_basis = find_fixed_point_basis(rho_ab, config);
    if (out.fixed_point_basis) {
        // The fixed-point basis is itself a family; its distance bounds the discord.
        FamilyFit fit = quantum_family_fit(rho_ab, *out.fixed_point_basis, config);
        out.discord_value = fit.distance;
        out.decomposition = std::move(fit.decomposition);
    } else {
        DiscordResult r = quantum_discord(rho_ab, config);
        out.discord_value = r.value;
        if (r.value <= tol) out.decomposition = std::move(r.optimizer);
    }
    const bool by_distance = out.discord_value <= tol;
    out.criteria_agree = by_distance == out.fixed_point_basis.has_value();
    out.null_discord = by_distance && out.fixed_point_basis.has_value();
    if (!out.null_discord) out.decomposition.reset();
    return out;
}

StateVec pinch(const StateVec& rho_ab, const Eigen::MatrixXcd& basis) {
    const TheoryModel& ab = require_bipartite(rho_ab, "pinch");
    if (!ab.is_quantum()) throw UnsupportedBackend("pinching needs the quantum backend");
    const int da = ab.factor_a->levels(), db = ab.factor_b->levels();
    if (basis.rows() != da || !is_orthonormal_basis(basis)) {
        throw DomainError("pinch: basis is not an orthonormal basis of system A");
    }
    Eigen::MatrixXcd rotated = rotate_to_basis(density_matrix(rho_ab), basis, db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            if (i != j) rotated.block(i * db, j * db, db, db).setZero();
    Eigen::MatrixXcd w = kron_identity(basis, db);
    return density_state(rho_ab.system, w * rotated * w.adjoint());
}

bool check_vonneumann_fixed_point(const StateVec& rho_ab, const Eigen::MatrixXcd& basis, double tol) {
    StateVec p = pinch(rho_ab, basis);
    return (p.coords - rho_ab.coords).lpNorm<Eigen::Infinity>() <= tol;
}

std::optional<Eigen::MatrixXcd> find_fixed_point_basis(const StateVec& rho_ab, const SearchConfig& config) {
    const TheoryModel& ab = require_bipartite(rho_ab, "find_fixed_point_basis");
    if (!ab.is_quantum()) throw UnsupportedBackend("find_fixed_point_basis needs the quantum backend");
    const int da = ab.factor_a->levels(), db = ab.factor_b->levels();
    const Eigen::MatrixXcd m = density_matrix(rho_ab);

    auto passes = [&](const Eigen::MatrixXcd& u) { return check_vonneumann_fixed_point(rho_ab, u, 1e-9); };

    std::vector<HermitianEigen> eigs = structural_eigensystems(m, da, db, config.seed);
    for (const auto& e : eigs)
        if (passes(e.vectors)) return e.vectors;

    constexpr std::size_t kRotationBudget = 100000;
    for (const auto& e : eigs) {
        std::vector<Eigen::MatrixXcd> rotations;
        degenerate_rotations(e, config.rotation_resolution, kRotationBudget, rotations);
        for (const auto& u : rotations)
            if (passes(u)) return u;
    }
    for (const auto& u : measurement_bases(da, config))
        if (passes(u)) return u;
    return std::nullopt;
}

StateVec swap_parties(const StateVec& rho_ab) {
    const TheoryModel& ab = require_bipartite(rho_ab, "swap_parties");
    const int da = ab.factor_a->dim, db = ab.factor_b->dim;
    Eigen::VectorXd y(rho_ab.coords.size());
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) y[j * da + i] = rho_ab.coords[i * db + j];
    return StateVec(compose_theories(ab.factor_b, ab.factor_a), y);
}

}  // namespace opd
