/*
 * Copyright 2026 The zdg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Run configuration shared by the CLI commands; round-trips through a
// canonical key=value string so runs can be reproduced exactly.

#include <cstdint>
#include <string>

#include "zdg/errors.hpp"

namespace zdg {

struct RunConfig {
    std::string command;   // classify | spectrum | verify | export
    std::string field = "2";
    std::string graph;     // gamma | H | H1..H4 (spectrum/export)
    std::string scope = "all";
    std::string format = "text"; // export: dot | edgelist | matrixmarket
    std::string out;       // output path, empty = stdout
    bool json = false;
    std::uint64_t seed = 20250809;
    std::size_t exact_cap = 256;

    std::string canonical_string() const {
        std::string s;
        s += "command=" + command;
        s += ";field=" + field;
        s += ";graph=" + graph;
        s += ";scope=" + scope;
        s += ";format=" + format;
        s += ";out=" + out;
        s += ";json=" + std::string(json ? "1" : "0");
        s += ";seed=" + std::to_string(seed);
        s += ";exact-cap=" + std::to_string(exact_cap);
        return s;
    }

    static RunConfig from_canonical_string(const std::string& s) {
        RunConfig c;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t end = s.find(';', pos);
            if (end == std::string::npos) end = s.size();
            const std::string kv = s.substr(pos, end - pos);
            const size_t eq = kv.find('=');
            if (eq == std::string::npos) throw Error("malformed config entry '" + kv + "'");
            const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
            if (key == "command") c.command = val;
            else if (key == "field") c.field = val;
            else if (key == "graph") c.graph = val;
            else if (key == "scope") c.scope = val;
            else if (key == "format") c.format = val;
            else if (key == "out") c.out = val;
            else if (key == "json") c.json = val == "1";
            else if (key == "seed") c.seed = std::stoull(val);
            else if (key == "exact-cap") c.exact_cap = std::stoull(val);
            else throw Error("unknown config key '" + key + "'");
            pos = end + 1;
        }
        return c;
    }
};

} // namespace zdg
