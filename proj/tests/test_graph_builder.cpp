#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "zdg/graph.hpp"
#include "zdg/graph_io.hpp"
#include "zdg/quotient_blocks.hpp"

using namespace zdg;

TEST_CASE("gamma basics") {
    auto f2 = FieldSpec::make(2, 1);
    Graph g2 = build_gamma(f2);
    CHECK(g2.order() == 9);
    CHECK(g2.loop_count() == 0);

    auto f3 = FieldSpec::make(3, 1);
    Graph g3 = build_gamma(f3);
    CHECK(g3.order() == 32);
    for (size_t i = 0; i < g3.order(); ++i) CHECK(g3.degree(i) >= 1);
    for (size_t i = 0; i < g3.order(); ++i) CHECK(g3.at(i, i) == 0);
}

TEST_CASE("H regularity under both loop policies") {
    auto f2 = FieldSpec::make(2, 1);
    Graph h2 = build_H(f2, LoopPolicy::LoopsAllowed);
    CHECK(h2.order() == 9);
    for (size_t i = 0; i < h2.order(); ++i) CHECK(h2.degree(i) == 5); // 2n+3 at n=1

    auto f3 = FieldSpec::make(3, 1);
    Graph h3 = build_H(f3, LoopPolicy::LoopsAllowed);
    CHECK(h3.order() == 16);
    for (size_t i = 0; i < h3.order(); ++i) CHECK(h3.degree(i) == 7);

    Graph h3s = build_H(f3, LoopPolicy::Simple);
    auto order = class_order(f3);
    for (size_t i = 0; i < h3s.order(); ++i)
        CHECK(h3s.degree(i) == (order[i].nilpotent() ? 6u : 7u));
}

TEST_CASE("H equals Gamma at q = 2 up to labels") {
    // at n = 1 every zero-divisor is idempotent or nilpotent
    auto f2 = FieldSpec::make(2, 1);
    Graph h = build_H(f2, LoopPolicy::Simple);
    Graph g = build_gamma(f2);
    REQUIRE(h.order() == g.order());
    // match vertices through their matrix labels
    std::map<std::string, size_t> gidx;
    for (size_t i = 0; i < g.order(); ++i) gidx[g.labels[i]] = i;
    auto order = class_order(f2);
    std::vector<size_t> perm;
    for (const auto& cf : order) perm.push_back(gidx.at(mat_label(cf.materialize(f2), f2)));
    for (size_t i = 0; i < h.order(); ++i)
        for (size_t j = 0; j < h.order(); ++j)
            CHECK(h.at(i, j) == g.at(perm[i], perm[j]));
}

TEST_CASE("subgraph orders") {
    auto f3 = FieldSpec::make(3, 1); // n = 2
    CHECK(build_subgraph(f3, SubgraphId::H1, LoopPolicy::LoopsAllowed).order() == 8);
    CHECK(build_subgraph(f3, SubgraphId::H2, LoopPolicy::LoopsAllowed).order() == 12);
    CHECK(build_subgraph(f3, SubgraphId::H3, LoopPolicy::LoopsAllowed).order() == 14);
    CHECK(build_subgraph(f3, SubgraphId::H4, LoopPolicy::LoopsAllowed).order() == 2);

    auto f2 = FieldSpec::make(2, 1); // n = 1: no pair classes
    CHECK_THROWS_AS(build_subgraph(f2, SubgraphId::H4, LoopPolicy::Simple), EmptySubgraph);
}

TEST_CASE("H4 is (2n-3)-regular and loop-free; H1 bipartite structure") {
    auto f5 = FieldSpec::make(5, 1); // n = 4
    Graph h4 = build_subgraph(f5, SubgraphId::H4, LoopPolicy::LoopsAllowed);
    CHECK(h4.order() == 12);
    CHECK(h4.loop_count() == 0);
    for (size_t i = 0; i < h4.order(); ++i) CHECK(h4.degree(i) == 5);

    auto f4 = FieldSpec::make(2, 2); // n = 3
    Graph h1 = build_subgraph(f4, SubgraphId::H1, LoopPolicy::LoopsAllowed);
    CHECK(h1.loop_count() == 0);
    // bipartition: within each S_j block, E-type vertices {0,1}, F-type {2,3}
    for (size_t i = 0; i < h1.order(); ++i)
        for (size_t j = 0; j < h1.order(); ++j)
            if (h1.at(i, j)) CHECK((i % 4 < 2) != (j % 4 < 2));
}

TEST_CASE("H2 keeps the loops at M and N") {
    auto f3 = FieldSpec::make(3, 1);
    Graph h2 = build_subgraph(f3, SubgraphId::H2, LoopPolicy::LoopsAllowed);
    CHECK(h2.loop_count() == 2);
    CHECK(h2.at(0, 0) == 1);
    CHECK(h2.at(1, 1) == 1);
    Graph h3 = build_subgraph(f3, SubgraphId::H3, LoopPolicy::LoopsAllowed);
    CHECK(h3.loop_count() == 4); // M, N, and the two block nilpotents
}

TEST_CASE("block patterns match the constructed graphs") {
    for (unsigned q : {3u, 4u}) { // n = 2, 3
        auto f = parse_field(std::to_string(q));
        const unsigned n = f.n();
        IntMatrix full = blocks::h_pattern(n);
        CHECK(IntMatrix::from_graph(build_H(f, LoopPolicy::LoopsAllowed)) == full);
        for (auto id : {SubgraphId::H1, SubgraphId::H2, SubgraphId::H3}) {
            Graph sub = build_subgraph(f, id, LoopPolicy::LoopsAllowed);
            IntMatrix pat = blocks::pattern_on(full, subgraph_positions(f, id));
            CHECK(IntMatrix::from_graph(sub) == pat);
        }
    }
    for (unsigned q : {4u, 5u}) { // n = 3, 4 for H4
        auto f = parse_field(std::to_string(q));
        IntMatrix full = blocks::h_pattern(f.n());
        Graph h4 = build_subgraph(f, SubgraphId::H4, LoopPolicy::LoopsAllowed);
        CHECK(IntMatrix::from_graph(h4) ==
              blocks::pattern_on(full, subgraph_positions(f, SubgraphId::H4)));
    }
}

TEST_CASE("generalized join identities") {
    Graph single = Graph::complete({"a", "b", "c"}); // K3
    Graph k1 = Graph::empty({"k"});
    Graph joined = generalized_join(k1, {single});
    CHECK(IntMatrix::from_graph(joined) == IntMatrix::from_graph(single));

    // K2 join of two empty pairs = K_{2,2}
    Graph k2 = Graph::complete({"1", "2"});
    Graph j = generalized_join(k2, {Graph::null_graph({"a", "b"}), Graph::null_graph({"c", "d"})});
    CHECK(j.order() == 4);
    CHECK(j.edge_count() == 4);
    for (size_t i = 0; i < 4; ++i) CHECK(j.degree(i) == 2);

    CHECK_THROWS_AS(generalized_join(k2, {single}), SizeMismatch);
}

TEST_CASE("class induced graphs") {
    auto f5 = FieldSpec::make(5, 1);
    auto classes = all_classes(f5);
    // classes[0] is [M] (nilpotent), classes[2] is [E_0] (idempotent)
    REQUIRE(classes[0].rep.tag == FormTag::M);
    Graph km = class_induced_graph(classes[0], f5);
    CHECK(km.order() == 4);
    CHECK(km.edge_count() == 6); // K4
    REQUIRE(classes[2].rep.tag == FormTag::E0);
    Graph ke = class_induced_graph(classes[2], f5);
    CHECK(ke.edge_count() == 0); // K4 complement

    auto f2 = FieldSpec::make(2, 1);
    auto c2 = all_classes(f2);
    CHECK(class_induced_graph(c2[0], f2).order() == 1); // K1
}

TEST_CASE("join of class graphs over H reconstructs Gamma") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        auto f = parse_field(std::to_string(q));
        Graph k = build_H(f, LoopPolicy::Simple);
        auto classes = all_classes(f);
        std::vector<Graph> family;
        for (const auto& cls : classes) family.push_back(class_induced_graph(cls, f));
        Graph joined = generalized_join(k, family);
        Graph gamma = build_gamma(f);
        REQUIRE(joined.order() == gamma.order());
        std::map<std::string, size_t> gidx;
        for (size_t i = 0; i < gamma.order(); ++i) gidx[gamma.labels[i]] = i;
        std::vector<size_t> perm;
        for (const auto& l : joined.labels) perm.push_back(gidx.at(l));
        for (size_t i = 0; i < joined.order(); ++i)
            for (size_t j = 0; j < joined.order(); ++j)
                REQUIRE(joined.at(i, j) == gamma.at(perm[i], perm[j]));
    }
}

TEST_CASE("export formats") {
    auto f2 = FieldSpec::make(2, 1);
    Graph g = build_gamma(f2);
    CHECK(g.edge_count() == 21);

    std::string el = to_edge_list(g);
    size_t lines = 0;
    for (char ch : el)
        if (ch == '\n') ++lines;
    CHECK(lines == 21);

    std::string dot = to_dot(g, "gamma");
    CHECK(dot.find("graph gamma {") == 0);
    CHECK(dot.find("v0 [label=") != std::string::npos);

    Graph h = build_H(FieldSpec::make(3, 1), LoopPolicy::LoopsAllowed);
    std::string mm = to_matrix_market(h);
    std::istringstream is(mm);
    std::string header;
    std::getline(is, header);
    CHECK(header == "%%MatrixMarket matrix coordinate pattern symmetric");
    size_t rows, cols, nnz;
    is >> rows >> cols >> nnz;
    CHECK(rows == 16);
    CHECK(cols == 16);
    CHECK(nnz == h.edge_count());

    // determinism
    CHECK(to_edge_list(g) == to_edge_list(build_gamma(f2)));
    CHECK(to_dot(g, "gamma") == to_dot(build_gamma(f2), "gamma"));
}
