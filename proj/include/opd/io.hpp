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

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "opd/config.hpp"
#include "opd/discord.hpp"
#include "opd/discrimination.hpp"
#include "opd/entropy.hpp"
#include "opd/theory.hpp"

namespace opd::io {

using json = nlohmann::json;

// Floats are written with 17 significant digits so that parsing returns the same doubles.
std::string dump(const json& value, int indent = 2);

json to_json(const TheoryModel& theory);
Theory theory_from_json(const json& j);

// Resolves system names: registered custom theories first, then built-in names.
class TheoryRegistry {
   public:
    void add(Theory theory);
    Theory resolve(const std::string& name) const;

   private:
    std::map<std::string, Theory> custom_;
};

json to_json(const StateVec& state);
StateVec state_from_json(const json& j, const TheoryRegistry& registry = {});

json to_json(const EffectVec& effect);
EffectVec effect_from_json(const json& j, const TheoryRegistry& registry = {});

json to_json(const TestModel& test);
TestModel test_from_json(const json& j, const TheoryRegistry& registry = {});

json to_json(const SearchConfig& config);
SearchConfig config_from_json(const json& j);

json basis_to_json(const Eigen::MatrixXcd& basis);
Eigen::MatrixXcd basis_from_json(const json& j);

json to_json(const NullDiscordDecomposition& d);
NullDiscordDecomposition decomposition_from_json(const json& j, const TheoryRegistry& registry = {});

json to_json(const DiscriminationResult& r);
json to_json(const DiscordResult& r);
json to_json(const NullDiscordCheck& r);
json to_json(const EntropyReport& r);

struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    SearchConfig config;
    std::uint64_t seed = 0;
    std::string tool_version;
    std::string started;
    std::string finished;
};

json to_json(const RunManifest& m);
RunManifest manifest_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace opd::io
