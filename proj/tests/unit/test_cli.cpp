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

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "tmot/cli.hpp"
#include "tmot/error.hpp"
#include "tmot/laurent.hpp"

using namespace tmot;

namespace {

std::string run_text(const std::string& config, int* status = nullptr) {
    std::ostringstream out;
    int rc = run(parse_config(config), out);
    if (status) *status = rc;
    return out.str();
}

std::string value_of(const std::string& report, const std::string& key) {
    std::istringstream in(report);
    for (std::string line; std::getline(in, line);)
        if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
    return {};
}

ErrorCode config_error(const std::string& config) {
    try {
        parse_config(config);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Mismatch;
}

}  // namespace

TEST_CASE("zeta command prints a reparsable series") {
    std::string out = run_text(R"({"q": 2, "command": "zeta", "n": 1, "precision": 6})");
    std::string series = value_of(out, "zeta(1)");
    CHECK(series == "1 + t^-2 + t^-3 + t^-4 + t^-5 + O(t^-6)");
    CHECK(parse_laurent(series, 2).to_string() == series);
}

TEST_CASE("config validation") {
    CHECK(config_error(R"({"q": 4, "command": "zeta"})") == ErrorCode::ConfigParse);
    try {
        parse_config(R"({"q": 4, "command": "zeta"})");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("q must be prime") != std::string::npos);
    }
    CHECK(config_error(R"({"q": 2, "command": "zeta", "precision": 0})") == ErrorCode::ConfigParse);
    CHECK(config_error(R"({"q": 2, "command": "plot"})") == ErrorCode::ConfigParse);
    CHECK(config_error(R"({"q": 2, "command": "zeta", "colour": 1})") == ErrorCode::ConfigParse);
    CHECK(config_error(R"({"q": 2, "command": "lvalue"})") == ErrorCode::ConfigParse);
    CHECK(config_error(R"({"q": 2, "command": "zeta", "mode": "fast"})") == ErrorCode::ConfigParse);
    CHECK(config_error(R"({"q": 2, "command": "log", "module": {"kind": "carlitz"}})") == ErrorCode::ConfigParse);
    CHECK(config_error(R"({"q": 2, "command": "lvalue", "motive": {"kind": "drinfeld", "coeffs": ["1", "x"]}})") ==
          ErrorCode::BadLeadingCoeff);
    CHECK(config_error(R"({"q": 2, "command": "lvalue", "motive": {"kind": "matrix", "sigma": [["t"]]}})") ==
          ErrorCode::NotEffective);
    CHECK(config_error("{not json") == ErrorCode::ConfigParse);
}

TEST_CASE("domain errors give a nonzero status and the error name") {
    int rc = 0;
    std::string out = run_text(R"({"q": 2, "command": "lvalue", "precision": 5,
        "motive": {"kind": "drinfeld", "coeffs": ["1/x", "1"]}})",
                               &rc);
    CHECK(rc != 0);
    CHECK(value_of(out, "error").rfind("BadReduction", 0) == 0);
}

TEST_CASE("verify on the rank two Drinfeld module") {
    std::string out = run_text(R"({"q": 2, "command": "verify", "precision": 10,
        "motive": {"kind": "drinfeld", "coeffs": ["1", "1"]}, "max_degree": 22})");
    CHECK(value_of(out, "method") == "logalg");
    CHECK(std::stoi(value_of(out, "deviation")) >= 10);
}

TEST_CASE("output does not depend on the shard count") {
    const std::string base = R"({"q": 3, "command": "lvalue", "precision": 6, "mode": "rigorous",
        "max_degree": 12, "motive": {"kind": "drinfeld", "coeffs": ["x", "-1"]}, "shards": )";
    std::string one = run_text(base + "1}");
    CHECK(run_text(base + "3}") == one);
    CHECK(!value_of(one, "L").empty());
}

TEST_CASE("checkpointed run matches an uninterrupted one") {
    const std::string path = (std::filesystem::temp_directory_path() / "tmot_cli_checkpoint.txt").string();
    std::remove(path.c_str());
    const std::string head = R"({"q": 2, "command": "zeta", "n": 1, "mode": "rigorous", "precision": 11, "max_degree": )";
    std::string plain = run_text(head + "30}");
    std::string partial = run_text(head + "4, \"checkpoint\": \"" + path + "\"}");
    CHECK(value_of(partial, "degrees") == "4");
    CHECK(run_text(head + "30, \"checkpoint\": \"" + path + "\"}") == plain);
    std::remove(path.c_str());
}

TEST_CASE("machine output") {
    RunConfig c = parse_config(R"({"q": 2, "command": "bridge", "motive": {"kind": "carlitz"}})");
    c.machine = true;
    std::ostringstream out;
    CHECK(run(c, out) == 0);
    CHECK(out.str().find("w_dim=1\n") != std::string::npos);
    CHECK(out.str().find("phi(t)_1=x*x1 + x1^q\n") != std::string::npos);
}
