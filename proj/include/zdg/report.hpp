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

// Verification report: an ordered list of machine-checked claims with a
// stable JSON rendering (schema_version 1).

#include <string>
#include <vector>

#include <json.hpp>

#include "zdg/finite_field.hpp"

namespace zdg {

struct Claim {
    std::string id;        // stable claim identifier, e.g. "counting.class_size"
    std::string statement; // human-readable description
    std::string expected;
    std::string computed;
    std::string method; // exact | modular | numeric | informational
    bool pass = true;
    std::string note; // discrepancy commentary, empty when unremarkable
};

struct Report {
    int schema_version = 1;
    std::string field;
    unsigned q = 0, n = 0;
    std::string command;
    std::string scope;
    std::uint64_t seed = 0;
    std::vector<Claim> claims;

    bool all_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }

    void add(Claim c) { claims.push_back(std::move(c)); }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema_version"] = schema_version;
        j["field"] = field;
        j["q"] = q;
        j["n"] = n;
        j["command"] = command;
        j["scope"] = scope;
        j["seed"] = seed;
        j["pass"] = all_pass();
        j["claims"] = nlohmann::ordered_json::array();
        for (const auto& c : claims) {
            nlohmann::ordered_json cj;
            cj["id"] = c.id;
            cj["statement"] = c.statement;
            cj["expected"] = c.expected;
            cj["computed"] = c.computed;
            cj["method"] = c.method;
            cj["pass"] = c.pass;
            if (!c.note.empty()) cj["note"] = c.note;
            j["claims"].push_back(cj);
        }
        return j;
    }

    std::string to_text() const {
        std::string out;
        for (const auto& c : claims) {
            out += (c.pass ? "[pass] " : "[FAIL] ");
            out += c.id + ": " + c.statement;
            if (!c.expected.empty() || !c.computed.empty())
                out += " (expected " + c.expected + ", computed " + c.computed + ")";
            if (!c.note.empty()) out += " -- " + c.note;
            out += "\n";
        }
        out += all_pass() ? "all claims pass\n" : "SOME CLAIMS FAILED\n";
        return out;
    }
};

} // namespace zdg
