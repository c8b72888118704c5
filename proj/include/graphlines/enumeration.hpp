#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphlines/dominance.hpp"
#include "graphlines/graph.hpp"

namespace graphlines {

/// At most 10 vertices, adjacency rows as 16-bit masks; the allocation-free
/// representation the enumeration pipeline runs on.
struct SmallGraph {
    int n = 0;
    std::array<uint16_t, 10> rows{};

    bool adjacent(int u, int v) const { return (rows[static_cast<size_t>(u)] >> v) & 1; }
    void add_edge(int u, int v) {
        rows[static_cast<size_t>(u)] |= static_cast<uint16_t>(1u << v);
        rows[static_cast<size_t>(v)] |= static_cast<uint16_t>(1u << u);
    }
    int degree(int u) const;
    bool connected() const;

    static SmallGraph from_graph(const Graph& g);
    Graph to_graph() const;
};

/// Isomorphism-invariant encoding: the least upper-triangle bit string
/// (column-major pair order, first pair most significant) over the leaves
/// of the refinement-guided relabeling search. Equal code and order <=>
/// isomorphic.
struct CanonicalForm {
    int n = 0;
    uint64_t code = 0;
    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const {
        return n != o.n ? n < o.n : code < o.code;
    }
};

CanonicalForm canonical_form(const SmallGraph& g);
CanonicalForm canonical_form(const Graph& g);  // n <= 10
SmallGraph decode_canonical(const CanonicalForm& c);
/// The canonically relabeled copy.
Graph canonical_graph(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= 9 built-in), canonically labeled and sorted by code.
/// Generated by vertex augmentation with canonical-form deduplication.
std::vector<SmallGraph> enumerate_connected(int n, int workers = 1);

struct Witness {
    std::string g6;  // canonical labeling
    Classification cls;
};

struct SearchResult {
    int order = 0;  // -1 for mixed-order external streams
    long graphs_scanned = 0;
    std::vector<Witness> witnesses;
    std::optional<long> g_min;  // absent when there are no witnesses
};

/// All non-trivial geometric dominant graphs on n vertices.
SearchResult find_nontrivial_gd(int n, int workers = 1);

/// Same filter over an external graph6 stream, one graph per line; parse or
/// connectivity failures name the line. Deduplication (optional, off by
/// default) requires n <= 10.
SearchResult find_nontrivial_gd_stream(std::istream& in, bool dedup, int workers = 1);

std::optional<long> g_min(int n, int workers = 1);

struct SweepOrderReport {
    int order = 0;
    long classes = 0;
    long nontrivial_gd_count = 0;
    std::vector<std::string> witness_g6;
    std::vector<int> witness_diameters;
    std::optional<long> g_min;
    bool all_witnesses_diameter2 = true;
    long super_count = 0;              // super geometric dominant classes found
    std::vector<std::string> super_g6;
    long chen_chvatal_violations = 0;  // over all connected classes, n >= 2
};

struct SweepResult {
    std::vector<SweepOrderReport> orders;  // n = 2..max_n
};

/// Empirical sweeps behind the open questions: witness diameters, existence
/// of small super geometric dominant graphs, and the Chen-Chvátal count
/// check over every connected class.
SweepResult sweep_open_questions(int max_n, int workers = 1);

}  // namespace graphlines
