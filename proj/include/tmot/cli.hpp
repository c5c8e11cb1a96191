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

#ifndef TMOT_CLI_HPP
#define TMOT_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tmot/lseries.hpp"
#include "tmot/sigma.hpp"
#include "tmot/tmodule.hpp"

namespace tmot {

struct RunConfig {
    int q = 2;
    std::string command;
    int n = 1;
    std::optional<int> order;
    PrecisionPolicy policy;
    std::optional<SigmaModule> motive;
    /// True when the motive is a bare Drinfeld module; verify then uses the
    /// exp_E(L(E,0) e) integrality check.
    bool drinfeld = false;
    std::optional<TModule> module;
    std::vector<Poly> excluded;
    std::vector<std::vector<RationalFn>> points;
    bool machine = false;
    bool show_basis = false;
};

/// Parses a JSON config document. Throws Error(ConfigParse). The shard
/// count defaults to $TMOT_SHARDS when set.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Runs the command and writes the report; returns the exit status.
int run(const RunConfig& config, std::ostream& out);

}  // namespace tmot

#endif
