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

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opd/discord.hpp"
#include "opd/discrimination.hpp"
#include "opd/entropy.hpp"
#include "opd/errors.hpp"
#include "opd/io.hpp"
#include "opd/simplex_analysis.hpp"

namespace {

using opd::io::json;

constexpr const char* kVersion = "0.1.0";

struct Options {
    std::vector<std::string> theory_files;
    std::string state_path;
    std::vector<std::string> positional;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format = "json";
    bool reproducible = false;
};

std::string utc_now(bool reproducible) {
    if (reproducible) return "1970-01-01T00:00:00Z";
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Context {
    Options opt;
    opd::io::TheoryRegistry registry;
    opd::SearchConfig config;
    opd::io::RunManifest manifest;
};

Context make_context(const Options& opt, const std::string& command) {
    Context ctx;
    ctx.opt = opt;
    for (const auto& path : opt.theory_files) {
        ctx.registry.add(opd::io::theory_from_json(opd::io::read_json_file(path)));
        ctx.manifest.inputs.push_back(path);
    }
    if (!opt.config_path.empty()) {
        ctx.config = opd::io::config_from_json(opd::io::read_json_file(opt.config_path));
        ctx.manifest.inputs.push_back(opt.config_path);
    }
    if (opt.seed) ctx.config.seed = *opt.seed;
    ctx.manifest.command = command;
    ctx.manifest.config = ctx.config;
    ctx.manifest.seed = ctx.config.seed;
    ctx.manifest.tool_version = kVersion;
    ctx.manifest.started = utc_now(opt.reproducible);
    return ctx;
}

opd::StateVec load_state(Context& ctx, const std::string& path) {
    ctx.manifest.inputs.push_back(path);
    return opd::io::state_from_json(opd::io::read_json_file(path), ctx.registry);
}

void emit(const std::string& text, const Options& opt) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path);
    if (!out) throw opd::DomainError("cannot write " + opt.out_path);
    out << text;
}

void emit_json(Context& ctx, json result) {
    ctx.manifest.finished = utc_now(ctx.opt.reproducible);
    json doc{{"manifest", opd::io::to_json(ctx.manifest)}, {"result", std::move(result)}};
    emit(opd::io::dump(doc) + "\n", ctx.opt);
}

const std::string& require_state(const Options& opt) {
    if (opt.state_path.empty()) throw opd::DomainError("--state is required");
    return opt.state_path;
}

void cmd_distance(const Options& opt) {
    Context ctx = make_context(opt, "distance");
    std::vector<std::string> paths = opt.positional;
    if (!opt.state_path.empty()) paths.insert(paths.begin(), opt.state_path);
    if (paths.size() != 2) throw opd::DomainError("distance needs exactly two state files");
    opd::StateVec a = load_state(ctx, paths[0]);
    opd::StateVec b = load_state(ctx, paths[1]);
    emit_json(ctx, opd::io::to_json(opd::min_error_discrimination(a, b)));
}

void cmd_discord(const Options& opt) {
    Context ctx = make_context(opt, "discord");
    opd::StateVec rho = load_state(ctx, require_state(opt));
    emit_json(ctx, opd::io::to_json(opd::discord(rho, ctx.config)));
}

void cmd_null_check(const Options& opt) {
    Context ctx = make_context(opt, "null-check");
    opd::StateVec rho = load_state(ctx, require_state(opt));
    emit_json(ctx, opd::io::to_json(opd::is_null_discord(rho, ctx.config.tol_zero, ctx.config)));
}

void cmd_entropy(const Options& opt) {
    Context ctx = make_context(opt, "entropy");
    opd::StateVec rho = load_state(ctx, require_state(opt));
    emit_json(ctx, opd::io::to_json(opd::quantum_discord_entropy(rho, ctx.config)));
}

void cmd_theorem3(const Options& opt) {
    Context ctx = make_context(opt, "theorem3");
    std::vector<opd::Theory> theories;
    for (const auto& name : opt.positional) theories.push_back(ctx.registry.resolve(name));
    std::vector<opd::Theorem3Row> rows = opd::theorem3_report(theories, ctx.config);
    ctx.manifest.finished = utc_now(opt.reproducible);
    if (opt.format == "csv") {
        std::string text = "# manifest " + opd::io::dump(opd::io::to_json(ctx.manifest), -1) + "\n";
        emit(text + opd::theorem3_csv(rows, opt.reproducible), opt);
        return;
    }
    json arr = json::array();
    for (const auto& r : rows) {
        json j{{"theory", r.theory},
               {"dim", r.dim},
               {"is_simplex", r.is_simplex},
               {"witness_found", r.witness_found},
               {"discord_lower_bound", r.discord_lower_bound},
               {"runtime_ms", opt.reproducible ? 0.0 : r.runtime_ms},
               {"consistent", r.consistent}};
        j["pure_count"] = r.pure_count ? json(*r.pure_count) : json("inf");
        arr.push_back(j);
    }
    emit_json(ctx, arr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operational discord toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--theory", opt.theory_files, "custom theory JSON file (repeatable)");
    app.add_option("--config", opt.config_path, "search configuration JSON file");
    app.add_option("--seed", opt.seed, "override the configuration seed");
    app.add_option("--out", opt.out_path, "write the report here instead of stdout");
    app.add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--reproducible", opt.reproducible, "fixed timestamps and zero runtimes");
    app.set_version_flag("--version", kVersion);

    auto add = [&](const char* name, const char* help, void (*fn)(const Options&), bool positional) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("--state", opt.state_path, "state JSON file");
        if (positional) sub->add_option("args", opt.positional, "state files or theory names");
        sub->callback([&opt, fn]() { fn(opt); });
    };
    add("distance", "operational distance of two states", cmd_distance, true);
    add("discord", "operational discord of a bipartite state", cmd_discord, false);
    add("null-check", "null-discord membership", cmd_null_check, false);
    add("entropy", "entropic quantum discord", cmd_entropy, false);
    add("theorem3", "simpliciality and witness report for theories", cmd_theorem3, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const opd::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const opd::ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
