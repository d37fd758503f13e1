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

#include "opd/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "opd/errors.hpp"

namespace opd::io {

namespace {

void dump_into(const json& v, int indent, int depth, std::string& out) {
    auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    // Arrays of scalars stay on one line.
    auto flat = [](const json& a) {
        for (const auto& x : a)
            if (x.is_structured()) return false;
        return true;
    };
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                dump_into(it.value(), indent, depth + 1, out);
            }
            newline(depth);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (v.empty() || flat(v)) {
                out += '[';
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) out += indent < 0 ? "," : ", ";
                    dump_into(v[i], indent, depth + 1, out);
                }
                out += ']';
                return;
            }
            out += '[';
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ',';
                newline(depth + 1);
                dump_into(v[i], indent, depth + 1, out);
            }
            newline(depth);
            out += ']';
            return;
        }
        case json::value_t::number_float: {
            double x = v.get<double>();
            if (!std::isfinite(x)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.16e", x);
            out += buf;
            return;
        }
        default:
            out += v.dump();
    }
}

json vec_json(const Eigen::VectorXd& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

Eigen::VectorXd vec_from(const json& a, const char* what) {
    if (!a.is_array()) throw DomainError(std::string(what) + " must be an array of numbers");
    Eigen::VectorXd v(static_cast<Eigen::Index>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_number()) throw DomainError(std::string(what) + " must be an array of numbers");
        v[static_cast<Eigen::Index>(i)] = a[i].get<double>();
    }
    return v;
}

json mat_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r).transpose()));
    return rows;
}

Eigen::MatrixXd mat_from(const json& rows, const char* what) {
    if (!rows.is_array() || rows.empty()) throw DomainError(std::string(what) + " must be a non-empty matrix");
    const std::size_t cols = rows[0].size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Eigen::VectorXd row = vec_from(rows[r], what);
        if (static_cast<std::size_t>(row.size()) != cols) throw DomainError(std::string(what) + " is ragged");
        m.row(static_cast<Eigen::Index>(r)) = row.transpose();
    }
    return m;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) throw DomainError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

json systems_json(const TheoryModel& m) {
    if (m.is_bipartite()) return json::array({m.factor_a->name, m.factor_b->name});
    return json::array({m.name});
}

Theory resolve_system(const json& j, const TheoryRegistry& registry) {
    std::string name = string_field(j, "theory");
    std::vector<std::string> parts;
    if (j.contains("systems")) {
        const json& s = j.at("systems");
        if (!s.is_array()) throw DomainError("field \"systems\" must be an array of names");
        for (const auto& x : s) {
            if (!x.is_string()) throw DomainError("field \"systems\" must be an array of names");
            parts.push_back(x.get<std::string>());
        }
    } else {
        std::size_t start = 0, star;
        while ((star = name.find('*', start)) != std::string::npos) {
            parts.push_back(name.substr(start, star - start));
            start = star + 1;
        }
        parts.push_back(name.substr(start));
    }
    if (parts.empty() || parts.size() > 2) throw DomainError("a state lives on one or two systems");
    Theory t = registry.resolve(parts[0]);
    if (parts.size() == 2) t = compose_theories(t, registry.resolve(parts[1]));
    if (t->name != name) throw DomainError("theory \"" + name + "\" does not match its systems (" + t->name + ")");
    return t;
}

}  // namespace

std::string dump(const json& value, int indent) {
    std::string out;
    dump_into(value, indent, 0, out);
    return out;
}

json to_json(const TheoryModel& t) {
    json j;
    j["name"] = t.name;
    j["backend"] = to_string(t.backend);
    j["dim"] = t.dim;
    json pure = json::array(), eff = json::array();
    if (t.is_polytope()) {
        for (const auto& v : t.pure_states) pure.push_back(vec_json(v));
        for (const auto& v : t.effect_vertices) eff.push_back(vec_json(v));
    }
    j["pure_states"] = pure;
    j["effect_vertices"] = eff;
    j["deterministic_effect"] = vec_json(t.deterministic_effect);
    if (t.quantum_levels) j["quantum_levels"] = *t.quantum_levels;
    return j;
}

Theory theory_from_json(const json& j) {
    std::string name = string_field(j, "name");
    std::string backend = string_field(j, "backend");
    const json& dim = field(j, "dim");
    if (!dim.is_number_integer()) throw DomainError("field \"dim\" must be an integer");
    if (backend == "quantum") {
        const json& levels = field(j, "quantum_levels");
        if (!levels.is_number_integer()) throw DomainError("field \"quantum_levels\" must be an integer");
        Theory t = make_quantum(levels.get<int>());
        if (t->dim != dim.get<int>()) throw DomainError("quantum dim must equal quantum_levels^2");
        return t;
    }
    if (backend != "polytope") throw DomainError("backend must be \"polytope\" or \"quantum\"");
    std::vector<Eigen::VectorXd> pure, eff;
    for (const auto& v : field(j, "pure_states")) pure.push_back(vec_from(v, "pure_states"));
    const json& ev = field(j, "effect_vertices");
    if (!ev.is_array()) throw DomainError("effect_vertices must be an array");
    for (const auto& v : ev) eff.push_back(vec_from(v, "effect_vertices"));
    Eigen::VectorXd e = vec_from(field(j, "deterministic_effect"), "deterministic_effect");
    if (e.size() != dim.get<int>()) throw DomainError("deterministic effect has wrong length");
    return make_polytope_theory(name, std::move(pure), std::move(eff), std::move(e));
}

void TheoryRegistry::add(Theory theory) { custom_[theory->name] = std::move(theory); }

Theory TheoryRegistry::resolve(const std::string& name) const {
    auto it = custom_.find(name);
    if (it != custom_.end()) return it->second;
    return builtin_theory(name);
}

json to_json(const StateVec& s) {
    return json{{"theory", s.system->name}, {"systems", systems_json(*s.system)}, {"coords", vec_json(s.coords)}};
}

StateVec state_from_json(const json& j, const TheoryRegistry& registry) {
    Theory t = resolve_system(j, registry);
    Eigen::VectorXd c = vec_from(field(j, "coords"), "coords");
    if (c.size() != t->dim) throw DomainError("state coordinates do not match the dimension of " + t->name);
    return StateVec(t, c);
}

json to_json(const EffectVec& e) {
    return json{{"theory", e.system->name}, {"systems", systems_json(*e.system)}, {"coords", vec_json(e.coords)}};
}

EffectVec effect_from_json(const json& j, const TheoryRegistry& registry) {
    Theory t = resolve_system(j, registry);
    Eigen::VectorXd c = vec_from(field(j, "coords"), "coords");
    if (c.size() != t->dim) throw DomainError("effect coordinates do not match the dimension of " + t->name);
    return EffectVec(t, c);
}

json to_json(const TestModel& test) {
    json events = json::array();
    for (const auto& ev : test.events) events.push_back(mat_json(ev.matrix));
    const TheoryModel& t = *test.input();
    return json{{"theory", t.name}, {"systems", systems_json(t)}, {"events", events}};
}

TestModel test_from_json(const json& j, const TheoryRegistry& registry) {
    Theory t = resolve_system(j, registry);
    const json& events = field(j, "events");
    if (!events.is_array() || events.empty()) throw DomainError("events must be a non-empty list of matrices");
    std::vector<Transformation> out;
    for (const auto& m : events) {
        Eigen::MatrixXd mat = mat_from(m, "events");
        if (mat.rows() != t->dim || mat.cols() != t->dim) {
            throw DomainError("event matrix shape does not match the dimension of " + t->name);
        }
        out.emplace_back(t, t, mat);
    }
    return TestModel(std::move(out));
}

json to_json(const SearchConfig& c) {
    return json{{"grid_points", c.grid_points},
                {"refine_iters", c.refine_iters},
                {"restarts", c.restarts},
                {"seed", c.seed},
                {"tol_zero", c.tol_zero},
                {"unitary_samples", c.unitary_samples},
                {"inner_starts", c.inner_starts},
                {"inner_sweeps", c.inner_sweeps},
                {"max_family_checks", c.max_family_checks},
                {"rotation_resolution", c.rotation_resolution}};
}

SearchConfig config_from_json(const json& j) {
    if (!j.is_object()) throw DomainError("config must be a JSON object");
    SearchConfig c;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        const json& v = it.value();
        auto as_int = [&]() -> long long {
            if (!v.is_number_integer()) throw DomainError("config field \"" + k + "\" must be an integer");
            return v.get<long long>();
        };
        auto positive = [&](long long x) {
            if (x < 0) throw DomainError("config field \"" + k + "\" must be non-negative");
            return x;
        };
        if (k == "grid_points") c.grid_points = static_cast<int>(positive(as_int()));
        else if (k == "refine_iters") c.refine_iters = static_cast<int>(positive(as_int()));
        else if (k == "restarts") c.restarts = static_cast<int>(positive(as_int()));
        else if (k == "seed") {
            if (v.is_number_unsigned()) c.seed = v.get<std::uint64_t>();
            else c.seed = static_cast<std::uint64_t>(positive(as_int()));
        } else if (k == "tol_zero") {
            if (!v.is_number() || v.get<double>() < 0) throw DomainError("config field \"tol_zero\" must be >= 0");
            c.tol_zero = v.get<double>();
        } else if (k == "unitary_samples") c.unitary_samples = static_cast<int>(positive(as_int()));
        else if (k == "inner_starts") c.inner_starts = static_cast<int>(positive(as_int()));
        else if (k == "inner_sweeps") c.inner_sweeps = static_cast<int>(positive(as_int()));
        else if (k == "max_family_checks") c.max_family_checks = static_cast<long>(positive(as_int()));
        else if (k == "rotation_resolution") c.rotation_resolution = static_cast<int>(positive(as_int()));
        else throw DomainError("unknown config field \"" + k + "\"");
    }
    return c;
}

json basis_to_json(const Eigen::MatrixXcd& b) {
    return json{{"re", mat_json(b.real())}, {"im", mat_json(b.imag())}};
}

Eigen::MatrixXcd basis_from_json(const json& j) {
    Eigen::MatrixXd re = mat_from(field(j, "re"), "basis.re");
    Eigen::MatrixXd im = mat_from(field(j, "im"), "basis.im");
    if (re.rows() != im.rows() || re.cols() != im.cols()) throw DomainError("basis re/im shapes differ");
    Eigen::MatrixXcd b(re.rows(), re.cols());
    b.real() = re;
    b.imag() = im;
    return b;
}

json to_json(const NullDiscordDecomposition& d) {
    json fam = json::array(), cond = json::array();
    for (const auto& s : d.family) fam.push_back(to_json(s));
    for (const auto& s : d.conditionals) cond.push_back(to_json(s));
    return json{{"family", fam}, {"weights", vec_json(d.weights)}, {"conditionals", cond}};
}

NullDiscordDecomposition decomposition_from_json(const json& j, const TheoryRegistry& registry) {
    NullDiscordDecomposition d;
    for (const auto& s : field(j, "family")) d.family.push_back(state_from_json(s, registry));
    d.weights = vec_from(field(j, "weights"), "weights");
    for (const auto& s : field(j, "conditionals")) d.conditionals.push_back(state_from_json(s, registry));
    return d;
}

json to_json(const DiscriminationResult& r) {
    return json{{"distance", r.distance}, {"p_err", r.p_err}, {"optimal_effect", to_json(r.optimal_effect)}};
}

json to_json(const DiscordResult& r) {
    json j{{"value", r.value},
           {"bound", r.exact ? "exact" : "upper"},
           {"converged", r.converged},
           {"outer_evaluations", r.outer_evaluations},
           {"family_index", r.family_index},
           {"certificate_effect", to_json(r.certificate_effect)},
           {"optimizer", to_json(r.optimizer)}};
    if (r.basis) j["basis"] = basis_to_json(*r.basis);
    return j;
}

json to_json(const NullDiscordCheck& r) {
    json j{{"null_discord", r.null_discord}, {"discord_value", r.discord_value}, {"criteria_agree", r.criteria_agree}};
    if (r.decomposition) j["decomposition"] = to_json(*r.decomposition);
    if (r.fixed_point_basis) j["eq4_basis"] = basis_to_json(*r.fixed_point_basis);
    return j;
}

json to_json(const EntropyReport& r) {
    return json{{"S_A", r.S_A},
                {"S_B", r.S_B},
                {"S_AB", r.S_AB},
                {"mutual_information", r.mutual_information},
                {"J_value", r.J_value},
                {"discord_value", r.discord_value},
                {"optimal_measurement", basis_to_json(r.optimal_measurement)},
                {"evaluations", r.evaluations},
                {"converged", r.converged}};
}

json to_json(const RunManifest& m) {
    return json{{"command", m.command},   {"inputs", m.inputs},
                {"config", to_json(m.config)}, {"seed", m.seed},
                {"tool_version", m.tool_version}, {"started", m.started},
                {"finished", m.finished}};
}

RunManifest manifest_from_json(const json& j) {
    RunManifest m;
    m.command = string_field(j, "command");
    for (const auto& x : field(j, "inputs")) m.inputs.push_back(x.get<std::string>());
    m.config = config_from_json(field(j, "config"));
    m.seed = field(j, "seed").get<std::uint64_t>();
    m.tool_version = string_field(j, "tool_version");
    m.started = string_field(j, "started");
    m.finished = string_field(j, "finished");
    return m;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("cannot parse " + path + ": " + e.what());
    }
}

}  // namespace opd::io
