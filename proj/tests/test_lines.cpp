#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "graphlines/constructions.hpp"
#include "graphlines/dominance.hpp"
#include "graphlines/enumeration.hpp"
#include "graphlines/lines.hpp"
#include "graphlines/metric.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace graphlines;

namespace {

std::set<int> as_set(const Bitset& b) {
    std::set<int> s;
    for (int i = b.first(); i >= 0; i = b.next(i)) s.insert(i);
    return s;
}

}  // namespace

TEST_CASE("collinearity on the documented triples") {
    const auto p3 = distance_matrix(helpers::path(3));
    CHECK(is_collinear(p3, 0, 2, 1));

    const auto k3 = distance_matrix(helpers::complete(3));
    CHECK_FALSE(is_collinear(k3, 0, 1, 2));
    CHECK_FALSE(is_collinear(k3, 1, 2, 0));

    const auto w6 = distance_matrix(wheel(5));
    CHECK_FALSE(is_collinear(w6, 1, 2, 0));
    CHECK(is_collinear(w6, 1, 3, 0));

    CHECK_THROWS_AS(is_collinear(w6, 1, 1, 0), UsageError);
    CHECK_THROWS_AS(line_members(w6, 2, 2), UsageError);
}

TEST_CASE("betweenness bracket basics") {
    const auto p4 = distance_matrix(helpers::path(4));
    CHECK(between(p4, 0, 1, 3));
    CHECK(between(p4, 3, 1, 0));       // [abc] <=> [cba]
    CHECK_FALSE(between(p4, 0, 3, 1));  // [abc] and [acb] exclude each other
}

TEST_CASE("lines of the wheel match the hand-derived sets") {
    const auto d = distance_matrix(wheel(5));
    CHECK(as_set(line_members(d, 1, 2)) == std::set<int>{1, 2, 3, 5});
    CHECK(as_set(line_members(d, 0, 1)) == std::set<int>{0, 1, 3, 4});
    CHECK(as_set(line_members(d, 1, 3)) == std::set<int>{0, 1, 2, 3});
    const auto fam = line_family(d);
    CHECK(fam.distinct_count() == 15);
    for (const auto& ln : fam.lines) {
        CHECK(ln.member_count == 4);
        CHECK(ln.generators.size() == 1);
    }
}

TEST_CASE("every pair of a path generates the universal line") {
    const Graph p5 = helpers::path(5);
    const auto d = distance_matrix(p5);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) CHECK(line_members(d, a, b).count() == 5);
    const auto fam = line_family(d);
    CHECK(fam.distinct_count() == 1);
    CHECK(fam.lines[0].generators.size() == 10);
    CHECK(has_universal_line(fam));
}

TEST_CASE("lines of C5 match the brute-force oracle") {
    const Graph c5 = helpers::cycle(5);
    const auto d = distance_matrix(c5);
    CHECK(as_set(line_members(d, 0, 2)) == std::set<int>{0, 1, 2});
    CHECK(as_set(line_members(d, 0, 1)) == std::set<int>{4, 0, 1, 2});
    const auto oracle_d = oracles::floyd_warshall(c5);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            CHECK(as_set(line_members(d, a, b)) == oracles::line_of(oracle_d, a, b));
    CHECK(line_family(d).distinct_count() == 10);
}

TEST_CASE("line members match the oracle on every connected graph up to n = 7") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& sg : enumerate_connected(n, 2)) {
            const Graph g = sg.to_graph();
            const auto d = distance_matrix(g);
            const auto od = oracles::floyd_warshall(g);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    REQUIRE(as_set(line_members(d, a, b)) == oracles::line_of(od, a, b));
        }
}

TEST_CASE("closure lines") {
    const auto w6 = distance_matrix(wheel(5));
    CHECK(closure_line(w6, 1, 2).count() == 6);  // expands to everything

    const auto k5 = distance_matrix(helpers::complete(5));
    CHECK(as_set(closure_line(k5, 1, 3)) == std::set<int>{1, 3});

    // Strongly geometric dominant graphs: closure equals line for all pairs.
    for (const Graph& g : {helpers::path(4), helpers::cycle(4), helpers::complete(5)}) {
        const auto d = distance_matrix(g);
        for (int a = 0; a < g.vertex_count(); ++a)
            for (int b = a + 1; b < g.vertex_count(); ++b)
                CHECK(closure_line(d, a, b) == line_members(d, a, b));
    }
}

TEST_CASE("line_family bookkeeping") {
    const auto k4 = line_family(distance_matrix(helpers::complete(4)));
    CHECK(k4.distinct_count() == 6);
    for (const auto& ln : k4.lines) {
        CHECK(ln.member_count == 2);
        CHECK(ln.generators.size() == 1);
    }

    // Generator multiplicities over distinct lines always sum to C(n,2).
    for (int n = 2; n <= 6; ++n)
        for (const auto& sg : enumerate_connected(n, 2)) {
            const auto fam = line_family(distance_matrix(sg.to_graph()));
            long total = 0;
            for (const auto& ln : fam.lines) total += static_cast<long>(ln.generators.size());
            CHECK(total == fam.pair_count());
            CHECK(static_cast<long>(fam.pair_to_line.size()) == fam.pair_count());
        }
}

TEST_CASE("line_family is independent of the worker count") {
    const Graph g = wheel_blown({3, 3, 3, 3, 4});
    const auto d = distance_matrix(g);
    const auto f1 = line_family(d, 1);
    const auto f4 = line_family(d, 4);
    REQUIRE(f1.distinct_count() == f4.distinct_count());
    for (int i = 0; i < f1.distinct_count(); ++i) {
        CHECK(f1.lines[i].members == f4.lines[i].members);
        CHECK(f1.lines[i].generators == f4.lines[i].generators);
    }
    CHECK(f1.pair_to_line == f4.pair_to_line);
}

TEST_CASE("universal lines") {
    CHECK(has_universal_line(line_family(distance_matrix(helpers::path(4)))));
    const auto c4 = distance_matrix(helpers::cycle(4));
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) CHECK(line_members(c4, a, b).count() == 4);
    CHECK(has_universal_line(line_family(c4)));
    CHECK_FALSE(has_universal_line(line_family(distance_matrix(wheel(5)))));
}

TEST_CASE("general metric validation") {
    // Any graph metric is accepted.
    const Graph w6 = wheel(5);
    const auto d = distance_matrix(w6);
    std::vector<uint32_t> entries;
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v) entries.push_back(d(u, v));
    const GeneralMetric m = validate_metric(6, entries);
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            CHECK(line_members(m, a, b) == line_members(d, a, b));
    CHECK(line_family(m).distinct_count() == 15);

    // Triangle violation with the witness triple named.
    std::vector<uint32_t> bad{0, 3, 1, 3, 0, 1, 1, 1, 0};
    const auto violations = metric_violations(3, bad);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations[0].find("triangle") != std::string::npos);
    CHECK(violations[0].find("(") != std::string::npos);
    CHECK_THROWS_AS(validate_metric(3, bad), ParseError);

    // {1,2}-valued metric on 4 points: all distances 2 except one 1.
    std::vector<uint32_t> m4{0, 2, 2, 2, 2, 0, 2, 2, 2, 2, 0, 1, 2, 2, 1, 0};
    CHECK(metric_violations(4, m4).empty());
    const GeneralMetric gm4 = validate_metric(4, m4);
    CHECK(is_collinear(gm4, 2, 3, 0) == false);
    CHECK(line_members(gm4, 2, 3).count() == 2);

    CHECK_FALSE(metric_violations(2, {0, 0, 0, 0}).empty());  // zero off-diagonal
    CHECK_FALSE(metric_violations(2, {0, 1, 2, 0}).empty());  // asymmetric
    CHECK_FALSE(metric_violations(2, {1, 1, 1, 0}).empty());  // nonzero diagonal
}

TEST_CASE("triangle-slack points are never collinear") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 300; ++iter) {
        const uint32_t x = 1 + rng() % 10, y = 1 + rng() % 10, z = 1 + rng() % 10;
        const std::vector<uint32_t> entries{0,     x + y, z + x,
                                            x + y, 0,     y + z,
                                            z + x, y + z, 0};
        const GeneralMetric m = validate_metric(3, entries);
        CHECK_FALSE(is_collinear(m, 0, 1, 2));
    }
}

TEST_CASE("chained betweenness composes for n <= 7") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& sg : enumerate_connected(n, 2)) {
            const auto d = distance_matrix(sg.to_graph());
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        for (int e = 0; e < n; ++e) {
                            if (a == b || a == c || a == e || b == c || b == e || c == e) continue;
                            if (between(d, a, b, c) && between(d, a, c, e))
                                CHECK(d(a, e) == d(a, b) + d(b, c) + d(c, e));
                        }
        }
}

TEST_CASE("parity rule for adjacent generators, n <= 7") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& sg : enumerate_connected(n, 2)) {
            const Graph g = sg.to_graph();
            const auto d = distance_matrix(g);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    if (!g.adjacent(a, b)) continue;
                    const Bitset ln = line_members(d, a, b);
                    for (int c = 0; c < n; ++c)
                        CHECK(ln.test(c) == (((d(a, c) ^ d(b, c)) & 1) == 1));
                }
        }
}

TEST_CASE("line is contained in closure; equality for all pairs iff strongly dominant, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& sg : enumerate_connected(n, 2)) {
            const Graph g = sg.to_graph();
            const auto d = distance_matrix(g);
            const auto fam = line_family(d);
            bool all_equal = true;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    const Bitset ln = line_members(d, a, b);
                    const Bitset cl = closure_line(d, a, b);
                    CHECK(ln.is_subset_of(cl));
                    if (!(ln == cl)) all_equal = false;
                }
            CHECK(all_equal == is_strongly_geometric_dominant(fam));
        }
}
