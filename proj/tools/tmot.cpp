/*
   Copyright 2026 The tmot Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmot/cli.hpp"
#include "tmot/error.hpp"

namespace {

nlohmann::json point_json(const std::string& text) {
    nlohmann::json p = nlohmann::json::array();
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) p.push_back(part);
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tmot: L-values, exponentials and logarithms of t-motives"};
    app.set_version_flag("--version", "tmot 0.1.0");

    std::string command, config_path, mode, checkpoint, motive, module;
    int q = 0, n = 0, precision = 0, max_degree = -1, window = 0, confirm = -1, shards = 0, order = 0;
    std::vector<std::string> exclude, points;
    bool machine = false, show_basis = false;

    app.add_option("command", command, "zeta | lvalue | exp | log | bridge | verify")
        ->check(CLI::IsMember({"zeta", "lvalue", "exp", "log", "bridge", "verify"}));
    app.add_option("-c,--config", config_path, "JSON config file");
    app.add_option("--q", q, "field size (prime)");
    app.add_option("--n", n, "zeta argument");
    app.add_option("--precision", precision, "target precision X: results modulo t^-X");
    app.add_option("--mode", mode, "rigorous | empirical");
    app.add_option("--max-degree", max_degree, "largest place degree in the Euler product");
    app.add_option("--window", window, "empirical stabilization window");
    app.add_option("--confirm", confirm, "extra degrees after stabilization");
    app.add_option("--exclude", exclude, "place to drop from the Euler product, in x");
    app.add_option("--checkpoint", checkpoint, "checkpoint file for the Euler product");
    app.add_option("--shards", shards, "worker threads (default $TMOT_SHARDS or 1)");
    app.add_option("--order", order, "fixed series order for exp/log");
    app.add_option("--motive", motive, "motive as JSON, e.g. {\"kind\":\"carlitz\"}");
    app.add_option("--module", module, "t-module as JSON");
    app.add_option("--point", points, "point coordinates, comma separated");
    app.add_flag("--machine", machine, "emit key=value lines");
    app.add_flag("--show-basis", show_basis, "bridge: print the K[tau]-basis");
    CLI11_PARSE(app, argc, argv);

    tmot::RunConfig config;
    try {
        nlohmann::json j = nlohmann::json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) tmot::fail(tmot::ErrorCode::ConfigParse, "cannot read " + config_path);
            try {
                j = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                tmot::fail(tmot::ErrorCode::ConfigParse, std::string("invalid JSON: ") + e.what());
            }
        }
        auto parse_json = [](const std::string& text) {
            try {
                return nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                tmot::fail(tmot::ErrorCode::ConfigParse, std::string("invalid JSON: ") + e.what());
            }
        };
        if (!command.empty()) j["command"] = command;
        if (q) j["q"] = q;
        if (n) j["n"] = n;
        if (precision) j["precision"] = precision;
        if (!mode.empty()) j["mode"] = mode;
        if (max_degree >= 0) j["max_degree"] = max_degree;
        if (window) j["window"] = window;
        if (confirm >= 0) j["confirm"] = confirm;
        if (shards) j["shards"] = shards;
        if (order) j["order"] = order;
        if (!checkpoint.empty()) j["checkpoint"] = checkpoint;
        if (!exclude.empty()) j["exclude"] = exclude;
        if (!motive.empty()) j["motive"] = parse_json(motive);
        if (!module.empty()) j["module"] = parse_json(module);
        if (!points.empty()) {
            j.erase("point");
            j["points"] = nlohmann::json::array();
            for (const auto& p : points) j["points"].push_back(point_json(p));
        }
        config = tmot::parse_config(j.dump());
    } catch (const tmot::Error& e) {
        std::cout << (machine ? "error=" : "error: ") << e.what() << '\n';
        return 2;
    }
    config.machine = machine;
    config.show_basis = show_basis;
    return tmot::run(config, std::cout);
}
