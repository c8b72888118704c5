#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graphlines/bitset.hpp"

namespace graphlines {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Malformed graph6 / edge-list / metric input.
struct ParseError : Error {
    using Error::Error;
};
/// Operation requires a connected graph.
struct ConnectivityError : Error {
    using Error::Error;
};
/// Violated precondition (bad argument).
struct UsageError : Error {
    using Error::Error;
};

/// Simple undirected graph on vertices 0..n-1, adjacency kept as bit rows.
/// Immutable once built (add_edge is for construction only); symmetry and
/// loop-freeness are maintained by construction.
class Graph {
public:
    explicit Graph(int n) : n_(n) {
        if (n < 1) throw UsageError("graph must have at least one vertex");
        rows_.assign(static_cast<size_t>(n), Bitset(n));
    }

    int vertex_count() const { return n_; }

    bool adjacent(int u, int v) const { return rows_[static_cast<size_t>(u)].test(v); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw UsageError("loops are not allowed");
        rows_[static_cast<size_t>(u)].set(v);
        rows_[static_cast<size_t>(v)].set(u);
    }

    const Bitset& neighbors(int u) const { return rows_[static_cast<size_t>(u)]; }

    int degree(int u) const { return rows_[static_cast<size_t>(u)].count(); }

    long edge_count() const {
        long twice = 0;
        for (const auto& r : rows_) twice += r.count();
        return twice / 2;
    }

    bool connected() const;

    /// N*(u) = N(u) ∪ {u}
    Bitset closed_neighborhood(int u) const {
        Bitset b = rows_[static_cast<size_t>(u)];
        b.set(u);
        return b;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw UsageError("vertex index out of range");
    }

    int n_;
    std::vector<Bitset> rows_;
};

/// Vertex classes with identical open neighborhoods. Classes are ordered by
/// smallest member; members ascend.
struct TwinPartition {
    std::vector<std::vector<int>> classes;
};

// graph6 interchange (bit-exact): byte = 63 + 6-bit value; size header is a
// single byte 63+n for n <= 62; adjacency bits are the upper triangle read
// column by column, padded with zeros to a multiple of 6.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge-list text: one "u v" pair per line, 0-based; blank lines ignored,
/// '#' starts a comment. Vertex count is max index + 1.
Graph parse_edge_list(std::string_view text);

/// Dispatch on content: a line containing whitespace or '#' is edge-list.
Graph parse_graph_auto(std::string_view text);

TwinPartition twin_partition(const Graph& g);

/// Edges of the complement: C(n,2) - |E|.
long complement_edge_count(const Graph& g);

}  // namespace graphlines
