#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "graphlines/constructions.hpp"
#include "graphlines/enumeration.hpp"
#include "graphlines/graph.hpp"
#include "graphlines/metric.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace graphlines;

TEST_CASE("graph6 round-trips the documented strings") {
    CHECK(to_graph6(parse_graph6("E?~o")) == "E?~o");
    const Graph k1 = parse_graph6("@");
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);
    CHECK(to_graph6(k1) == "@");
    CHECK(to_graph6(helpers::complete(2)) == "A_");
    CHECK(parse_graph6("A_").adjacent(0, 1));
}

TEST_CASE("wheel W6 encodes and decodes to the same graph") {
    const Graph w6 = wheel(5);
    CHECK(w6.edge_count() == 10);
    int count5 = 0;
    for (int v = 0; v < 6; ++v)
        if (w6.degree(v) == 5) ++count5;
    CHECK(count5 == 1);
    const Graph back = parse_graph6(to_graph6(w6));
    CHECK(back == w6);
}

TEST_CASE("graph6 round-trip on random labeled graphs up to n = 20") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 20);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        const std::string s = to_graph6(g);
        CHECK(parse_graph6(s) == g);
        CHECK(to_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("graph6 rejects malformed input with byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("?"), ParseError);          // n = 0
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);        // extended header
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);          // missing body
    CHECK_THROWS_AS(parse_graph6("A__"), ParseError);        // too long
    CHECK_THROWS_AS(parse_graph6("A\x20"), ParseError);      // byte below 63
    CHECK_THROWS_AS(parse_graph6("Ao"), ParseError);         // nonzero trailing bits
    CHECK_THROWS_AS(parse_graph6(std::string("A\x7f")), ParseError);  // byte above 126
    try {
        parse_graph6("Ao");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("offset 1") != std::string::npos);
    }
    // n > 62 encode refused
    CHECK_THROWS_AS(to_graph6(Graph(63)), UsageError);
}

TEST_CASE("edge list parsing") {
    const Graph w6 = wheel(5);
    std::ifstream in(helpers::fixture("w6.edges"));
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(parse_edge_list(ss.str()) == w6);

    CHECK(parse_edge_list("0 1\n\n# comment\n1 2\n") == helpers::path(3));
    CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
    CHECK(parse_graph_auto("0 1\n1 2\n") == helpers::path(3));
    CHECK(parse_graph_auto("A_") == helpers::complete(2));
}

TEST_CASE("distance matrix on the documented graphs") {
    const auto p4 = distance_matrix(helpers::path(4));
    CHECK(p4(0, 3) == 3);
    CHECK(p4.diameter() == 3);

    const auto w6 = distance_matrix(wheel(5));
    CHECK(w6(1, 3) == 2);
    for (int r = 1; r <= 5; ++r) CHECK(w6(0, r) == 1);
    CHECK(w6.diameter() == 2);

    const auto k5 = distance_matrix(helpers::complete(5));
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) CHECK(k5(u, v) == (u == v ? 0 : 1));
    CHECK(diameter(helpers::complete(7)) == 1);
}

TEST_CASE("disconnected graphs are rejected wherever distances are needed") {
    Graph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    CHECK_FALSE(two_k2.connected());
    CHECK(to_graph6(two_k2) == "C`");
    CHECK_THROWS_AS(distance_matrix(two_k2), ConnectivityError);
    CHECK_THROWS_AS(diameter(two_k2), ConnectivityError);
}

TEST_CASE("distance matrix invariants hold exhaustively for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        long checked = 0;
        for (const auto& sg : enumerate_connected(n, 2)) {
            const Graph g = sg.to_graph();
            const auto d = distance_matrix(g);
            const auto oracle = oracles::floyd_warshall(g);
            for (int u = 0; u < n; ++u) {
                CHECK(d(u, u) == 0);
                for (int v = 0; v < n; ++v) {
                    CHECK(d(u, v) == d(v, u));
                    CHECK(static_cast<int>(d(u, v)) == oracle[u][v]);
                    CHECK((d(u, v) == 1) == g.adjacent(u, v));
                    for (int w = 0; w < n; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
                }
            }
            ++checked;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("twin partition") {
    const Graph w6 = wheel(5);
    for (const auto& cls : twin_partition(w6).classes) CHECK(cls.size() == 1);

    const Graph k7 = known_example(7);  // vertex 6 duplicates rim vertex 2
    const auto part = twin_partition(k7);
    bool found = false;
    for (const auto& cls : part.classes)
        if (cls.size() == 2) {
            CHECK(cls == std::vector<int>{2, 6});
            found = true;
        }
    CHECK(found);

    const auto k33 = twin_partition(helpers::complete_bipartite(3, 3));
    REQUIRE(k33.classes.size() == 2);
    CHECK(k33.classes[0].size() == 3);
    CHECK(k33.classes[1].size() == 3);
}

TEST_CASE("twins in one class of size >= 2 are pairwise non-adjacent and share distances") {
    const Graph k7 = known_example(7);
    const auto d = distance_matrix(k7);
    for (const auto& cls : twin_partition(k7).classes) {
        for (size_t i = 0; i < cls.size(); ++i)
            for (size_t j = i + 1; j < cls.size(); ++j) {
                CHECK_FALSE(k7.adjacent(cls[i], cls[j]));
                for (int z = 0; z < 7; ++z)
                    if (z != cls[i] && z != cls[j]) CHECK(d(z, cls[i]) == d(z, cls[j]));
            }
    }
}

TEST_CASE("complement edge count") {
    CHECK(complement_edge_count(helpers::complete(5)) == 0);
    CHECK(complement_edge_count(helpers::cycle(5)) == 5);
    CHECK(complement_edge_count(wheel(5)) == 5);
}
