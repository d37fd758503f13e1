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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "opd/io.hpp"
#include "test_util.hpp"

using namespace opd;
using namespace opd::testing;
using opd::io::json;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
};

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("opd_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const json& j) {
        fs::path p = dir_ / name;
        std::ofstream(p) << io::dump(j);
        return p.string();
    }

    CliRun run(const std::string& args) {
        fs::path out = dir_ / "stdout.txt";
        std::string cmd = std::string(OPD_BINARY) + " " + args + " > " + out.string() + " 2>/dev/null";
        int status = std::system(cmd.c_str());
        std::stringstream ss;
        ss << std::ifstream(out).rdbuf();
        return {WEXITSTATUS(status), ss.str()};
    }

    fs::path dir_;
};

std::string fast_config_json() { return io::dump(io::to_json(fast_config())); }

}  // namespace

TEST_F(Cli, DistanceQubits) {
    std::string a = write("a.json", io::to_json(ket_state(qubit(), ket({1, 0}))));
    std::string b = write("b.json", io::to_json(ket_state(qubit(), ket({0, 1}))));
    CliRun r = run("distance " + a + " " + b);
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_NEAR(j["result"]["distance"].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(j["manifest"]["command"], "distance");
    CliRun same = run("distance " + a + " " + a);
    EXPECT_NEAR(json::parse(same.out)["result"]["distance"].get<double>(), 0.0, 1e-12);
}

TEST_F(Cli, DistanceClassical) {
    Theory bit = make_classical(2);
    std::string a = write("a.json", io::to_json(StateVec(bit, Eigen::Vector2d(1, 0))));
    std::string b = write("b.json", io::to_json(StateVec(bit, Eigen::Vector2d(0.5, 0.5))));
    CliRun r = run("distance " + a + " " + b);
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out)["result"];
    EXPECT_NEAR(j["distance"].get<double>(), 0.5, 1e-12);
    EXPECT_NEAR(j["p_err"].get<double>(), 0.25, 1e-12);
    EXPECT_TRUE(j.contains("optimal_effect"));
}

TEST_F(Cli, ValidationFailureExitsTwo) {
    std::string bad = write("bad.json", json{{"theory", "bit"}, {"coords", {1.0}}});
    std::string ok = write("ok.json", io::to_json(StateVec(make_classical(2), Eigen::Vector2d(1, 0))));
    EXPECT_EQ(run("distance " + bad + " " + ok).code, 2);
    std::string other = write("q.json", io::to_json(ket_state(qubit(), ket({1, 0}))));
    EXPECT_EQ(run("distance " + ok + " " + other).code, 2);
    EXPECT_EQ(run("discord --state " + (dir_ / "missing.json").string()).code, 2);
    EXPECT_EQ(run("no-such-command").code, 2);
}

TEST_F(Cli, ResourceErrorExitsThree) {
    Theory p = make_polygon(9);
    std::string s = write("s.json", io::to_json(compose(pure_state(p, 0), pure_state(p, 0))));
    std::string c = write("c.json", json{{"max_family_checks", 5}});
    EXPECT_EQ(run("discord --state " + s + " --config " + c).code, 3);
}

TEST_F(Cli, DiscordFiles) {
    std::string cfg = write("cfg.json", json::parse(fast_config_json()));
    std::string prod = write("prod.json", io::to_json(compose(ket_state(qubit(), ket({1, 2})), ket_state(qubit(), ket({3, 1})))));
    CliRun r = run("discord --state " + prod + " --config " + cfg);
    ASSERT_EQ(r.code, 0);
    EXPECT_LE(json::parse(r.out)["result"]["value"].get<double>(), 1e-6);

    std::string bell = write("bell.json", io::to_json(bell_state()));
    r = run("discord --state " + bell);
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(json::parse(r.out)["result"]["value"].get<double>(), 0.5, 1e-6);

    Theory bit = make_classical(2), bb = compose_theories(bit, bit);
    std::string cc = write("cc.json", io::to_json(StateVec(bb, Eigen::Vector4d(0.5, 0, 0, 0.5))));
    r = run("discord --state " + cc);
    ASSERT_EQ(r.code, 0);
    EXPECT_LE(json::parse(r.out)["result"]["value"].get<double>(), 1e-7);
}

TEST_F(Cli, NullCheck) {
    Rng rng(3);
    std::string cq = write("cq.json", io::to_json(make_null_discord_state(random_cq_decomposition(2, 2, rng))));
    CliRun r = run("null-check --state " + cq);
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out)["result"];
    EXPECT_TRUE(j["null_discord"].get<bool>());
    EXPECT_TRUE(j.contains("eq4_basis"));
    EXPECT_TRUE(j.contains("decomposition"));

    std::string bell = write("bell.json", io::to_json(bell_state()));
    r = run("null-check --state " + bell);
    ASSERT_EQ(r.code, 0);
    EXPECT_FALSE(json::parse(r.out)["result"]["null_discord"].get<bool>());

    std::string prod = write("prod.json", io::to_json(compose(ket_state(qubit(), ket({1, 2})), ket_state(qubit(), ket({3, 1})))));
    r = run("null-check --state " + prod);
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(json::parse(r.out)["result"]["null_discord"].get<bool>());
}

TEST_F(Cli, Theorem3Csv) {
    CliRun r = run("theorem3 --format csv --reproducible");
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string first, second, rest;
    std::getline(lines, first);
    std::getline(lines, second);
    EXPECT_EQ(first.rfind("# manifest ", 0), 0u);
    EXPECT_EQ(second, "theory,dim,pure_count,is_simplex,witness_found,discord_lower_bound,runtime_ms");
    EXPECT_FALSE(std::getline(lines, rest));

    r = run("theorem3 bit trit classical4 gbit polygon5 --format csv --reproducible");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("classical2,2,2,true,false,"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("gbit,3,4,false,true,"), std::string::npos);
    EXPECT_NE(r.out.find("polygon5,3,5,false,true,"), std::string::npos);
}

TEST_F(Cli, CustomTheoryFile) {
    Theory g = make_polygon(4);
    Theory sq = make_polytope_theory("square", g->pure_states, g->effect_vertices, g->deterministic_effect);
    std::string th = write("square.json", io::to_json(*sq));
    Theory sqsq = compose_theories(sq, sq);
    Eigen::VectorXd x = (compose(pure_state(sq, 0), pure_state(sq, 0)).coords + compose(pure_state(sq, 2), pure_state(sq, 2)).coords) / 2;
    std::string s = write("s.json", io::to_json(StateVec(sqsq, x)));
    CliRun r = run("discord --theory " + th + " --state " + s);
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(json::parse(r.out)["result"]["value"].get<double>(), 0.0, 1e-9);
}

TEST_F(Cli, DeterministicAndRoundTrip) {
    std::string w = write("w.json", io::to_json(separable_witness()));
    std::string cfg = write("cfg.json", json::parse(fast_config_json()));
    std::string args = "discord --state " + w + " --config " + cfg + " --seed 99 --reproducible";
    CliRun a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    json j = json::parse(a.out);
    EXPECT_EQ(j["manifest"]["seed"].get<std::uint64_t>(), 99u);
    EXPECT_EQ(io::manifest_from_json(j["manifest"]).config.seed, 99u);
    // Re-parsing and re-dumping reproduces the bytes.
    EXPECT_EQ(io::dump(j) + "\n", a.out);
    NullDiscordDecomposition d = io::decomposition_from_json(j["result"]["optimizer"]);
    EXPECT_NEAR(operational_distance(separable_witness(), make_null_discord_state(d)), j["result"]["value"].get<double>(), 1e-9);
}

TEST_F(Cli, OutFile) {
    std::string a = write("a.json", io::to_json(ket_state(qubit(), ket({1, 0}))));
    fs::path out = dir_ / "report.json";
    ASSERT_EQ(run("distance " + a + " " + a + " --out " + out.string()).code, 0);
    EXPECT_TRUE(fs::exists(out));
    EXPECT_NO_THROW(io::read_json_file(out.string()));
}

TEST_F(Cli, Entropy) {
    std::string bell = write("bell.json", io::to_json(bell_state()));
    CliRun r = run("entropy --state " + bell);
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(json::parse(r.out)["result"]["discord_value"].get<double>(), 1.0, 5e-3);
}
