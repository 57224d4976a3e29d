#pragma once

#include "homtoric/toric.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace homtoric::app {

using Json = nlohmann::ordered_json;

struct RunConfig {
    unsigned threads = 1;
    std::uint64_t seed = 1;
    std::size_t max_monomials = 10'000'000;
    bool json = false;

    FiberOptions fibers() const { return {max_monomials, threads}; }
};

/// What a reproduction run found. `lines` is the text report; `data` the JSON body.
struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;
    Json data = Json::object();

    void check(bool ok, const std::string& what);
    void note(std::string line) { lines.push_back(std::move(line)); }
};

struct Scenario {
    std::string name;
    int criterion = 0;  ///< 0 for extra examples outside the numbered list
    std::string title;
    std::function<Outcome(const RunConfig&)> run;
};

const std::vector<Scenario>& scenarios();
const Scenario* find_scenario(const std::string& name);

/// Report as the CLI prints it: text lines, or one JSON document with schema and seed.
std::string render(const Scenario& s, const Outcome& o, const RunConfig& cfg);

/// Binomial as r-words: independent sets for spoon targets, 1-based map words otherwise.
std::string show(const Binomial& b, const ToricSystem& sys);
std::string show(const ExponentVector& m, const ToricSystem& sys);

}  // namespace homtoric::app
