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

// zdg: zero-divisor graphs of M2(GF(q)) -- classification, exact spectra,
// verification reports, and graph export.
//
// Exit codes: 0 success, 1 failed verification claims, 2 invalid field,
// 3 request out of domain, 4 unwritable output path.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zdg/classification.hpp"
#include "zdg/config.hpp"
#include "zdg/graph_io.hpp"
#include "zdg/report.hpp"
#include "zdg/spectra.hpp"
#include "zdg/verify.hpp"

using namespace zdg;

namespace {

int write_output(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output path: " << cfg.out << "\n";
        return 4;
    }
    os << payload;
    return os ? 0 : 4;
}

int cmd_classify(const RunConfig& cfg) {
    FieldSpec f = parse_field(cfg.field);
    auto classes = all_classes(f);
    const unsigned long n = f.n();
    std::string payload;
    if (cfg.json) {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["field"] = field_to_string(f);
        j["q"] = f.q();
        j["n"] = f.n();
        j["class_count"] = classes.size();
        j["classes"] = nlohmann::ordered_json::array();
        for (const auto& cls : classes) {
            nlohmann::ordered_json cj;
            cj["representative"] = cls.rep.label(f);
            cj["matrix"] = mat_label(cls.rep.materialize(f), f);
            cj["kind"] = cls.rep.nilpotent() ? "nilpotent" : "idempotent";
            cj["size"] = cls.members.size();
            cj["members"] = nlohmann::ordered_json::array();
            for (const auto& m : cls.members) cj["members"].push_back(mat_label(m, f));
            j["classes"].push_back(cj);
        }
        payload = j.dump(2) + "\n";
    } else {
        for (const auto& cls : classes) {
            payload += cls.rep.label(f);
            payload += "\t" + std::string(cls.rep.nilpotent() ? "nilpotent" : "idempotent");
            payload += "\t" + mat_label(cls.rep.materialize(f), f);
            payload += "\tsize=" + std::to_string(cls.members.size()) + "\n";
        }
    }
    const int rc = write_output(cfg, payload);
    if (rc != 0) return rc;
    const bool counts_ok = classes.size() == (n + 2) * (n + 2) &&
                           std::all_of(classes.begin(), classes.end(),
                                       [&](const ZClass& c) { return c.members.size() == n; });
    return counts_ok ? 0 : 1;
}

Graph build_named_graph(const FieldSpec& f, const std::string& name) {
    if (name == "gamma") return build_gamma(f);
    if (name == "H") return build_H(f, LoopPolicy::LoopsAllowed);
    if (name == "H1") return build_subgraph(f, SubgraphId::H1, LoopPolicy::LoopsAllowed);
    if (name == "H2") return build_subgraph(f, SubgraphId::H2, LoopPolicy::LoopsAllowed);
    if (name == "H3") return build_subgraph(f, SubgraphId::H3, LoopPolicy::LoopsAllowed);
    if (name == "H4") return build_subgraph(f, SubgraphId::H4, LoopPolicy::LoopsAllowed);
    throw OutOfDomain("unknown graph '" + name + "'");
}

int cmd_spectrum(const RunConfig& cfg) {
    FieldSpec f = parse_field(cfg.field);
    const unsigned n = f.n();
    SpectrumMultiset exact;
    bool have_exact = true;
    std::string method = "exact";
    Graph g = build_named_graph(f, cfg.graph);
    IntMatrix a = IntMatrix::from_graph(g);
    std::vector<std::pair<mpz_class, mpz_class>> hints;
    if (cfg.graph == "H" && n >= 2) hints = quad_hints_of(closed_form_spectrum(HGraphId::H, n));
    if (cfg.graph == "H4" && n < 3) throw OutOfDomain("H4 spectrum needs n >= 3");
    std::vector<double> numeric;
    try {
        if (cfg.graph == "gamma")
            exact = gamma_spectrum_via_join(f, GammaVariant::CardosoQuotient, cfg.exact_cap);
        else
            exact = spectrum_exact(a, hints, cfg.exact_cap);
    } catch (const UnresolvedFactor&) {
        have_exact = false;
        method = "numeric";
    } catch (const DimensionTooLarge&) {
        have_exact = false;
        method = "numeric";
    }

    // numeric route: the quotient completes Gamma without a dense solve on
    // the full n(n+2)^2 matrix
    if (!have_exact && cfg.graph == "gamma") {
        auto dec = gamma_join_decomposition(f, GammaVariant::CardosoQuotient);
        numeric.assign(dec.zero_mult, 0.0);
        numeric.insert(numeric.end(), dec.minus_one_mult, -1.0);
        for (double v : numeric_spectrum(dec.quotient)) numeric.push_back(v);
        std::sort(numeric.rbegin(), numeric.rend());
    } else if (!have_exact || g.order() <= 400) {
        numeric = numeric_spectrum(a);
    }

    double residual = 0;
    if (have_exact && !numeric.empty()) {
        auto ev = exact.to_doubles();
        for (size_t i = 0; i < numeric.size(); ++i)
            residual = std::max(residual, std::abs(numeric[i] - ev[i]));
    }

    std::string payload;
    if (cfg.json) {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["field"] = field_to_string(f);
        j["graph"] = cfg.graph;
        j["order"] = g.order();
        j["method"] = method;
        if (have_exact) {
            j["spectrum"] = nlohmann::ordered_json::array();
            for (const auto& [ev, m] : exact.items()) {
                nlohmann::ordered_json e;
                e["value"] = ev.str();
                e["approx"] = ev.approx();
                e["multiplicity"] = m;
                j["spectrum"].push_back(e);
            }
            if (!numeric.empty()) j["numeric_residual"] = residual;
        } else {
            j["numeric_spectrum"] = numeric;
        }
        payload = j.dump(2) + "\n";
    } else {
        payload += "graph " + cfg.graph + " over GF(" + std::to_string(f.q()) + "), order " +
                   std::to_string(g.order()) + "\n";
        if (have_exact) {
            payload += "spectrum " + exact.str() + "\n";
            if (!numeric.empty()) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "numeric cross-check residual %.3e\n", residual);
                payload += buf;
            }
        } else {
            payload += "exact factorization unresolved; numeric spectrum:\n";
            for (double v : numeric) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "  %.10f\n", v);
                payload += buf;
            }
        }
    }
    return write_output(cfg, payload);
}

int cmd_verify(const RunConfig& cfg) {
    FieldSpec f = parse_field(cfg.field);
    Report rep = run_verification(f, cfg.scope, cfg.exact_cap, cfg.seed);
    const std::string payload = cfg.json ? rep.to_json().dump(2) + "\n" : rep.to_text();
    const int rc = write_output(cfg, payload);
    if (rc != 0) return rc;
    return rep.all_pass() ? 0 : 1;
}

int cmd_export(const RunConfig& cfg) {
    FieldSpec f = parse_field(cfg.field);
    Graph g = build_named_graph(f, cfg.graph);
    std::string payload;
    if (cfg.format == "dot") payload = to_dot(g, cfg.graph);
    else if (cfg.format == "edgelist") payload = to_edge_list(g);
    else if (cfg.format == "matrixmarket") payload = to_matrix_market(g);
    else throw OutOfDomain("unknown export format '" + cfg.format + "'");
    return write_output(cfg, payload);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-divisor graphs of M2(GF(q)): classification, exact spectra, verification"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--field", cfg.field, "field as q or p^k[:modulus-hex]")->capture_default_str();
    app.add_flag("--json", cfg.json, "emit JSON");
    app.add_option("--out", cfg.out, "write output to a file instead of stdout");
    app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
    app.add_option("--exact-cap", cfg.exact_cap, "dimension cap for exact char-poly work")
        ->capture_default_str();

    auto* classify = app.add_subcommand("classify", "equivalence classes of Z(M2(F))");
    auto* spectrum = app.add_subcommand("spectrum", "exact spectrum of a named graph");
    spectrum->add_option("--graph", cfg.graph, "gamma | H | H1 | H2 | H3 | H4")->required();
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--scope", cfg.scope,
                       "all | counting | regularity | relations | templates | spectra | join | bounds")
        ->capture_default_str();
    auto* exportc = app.add_subcommand("export", "write a graph to a file format");
    exportc->add_option("--graph", cfg.graph, "gamma | H | H1 | H2 | H3 | H4")->required();
    exportc->add_option("--format", cfg.format, "dot | edgelist | matrixmarket")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) { cfg.command = "classify"; return cmd_classify(cfg); }
        if (spectrum->parsed()) { cfg.command = "spectrum"; return cmd_spectrum(cfg); }
        if (verify->parsed()) { cfg.command = "verify"; return cmd_verify(cfg); }
        if (exportc->parsed()) { cfg.command = "export"; return cmd_export(cfg); }
    } catch (const NonPrimeCharacteristic& e) {
        std::cerr << "invalid field: " << e.what() << "\n";
        return 2;
    } catch (const ReducibleModulus& e) {
        std::cerr << "invalid field: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedOrder& e) {
        std::cerr << "invalid field: " << e.what() << "\n";
        return 2;
    } catch (const OutOfDomain& e) {
        std::cerr << "out of domain: " << e.what() << "\n";
        return 3;
    } catch (const EmptySubgraph& e) {
        std::cerr << "out of domain: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
