#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "graphlines/graph.hpp"

namespace graphlines {

/// Exact BFS distances of a connected graph, one byte per entry. Rows are
/// zero-padded to a stride that is a multiple of 64 so the line kernels can
/// run full-width. Entries are capped at 254, which keeps the saturating
/// byte adds in the AVX2 kernel exact.
class DistanceMatrix {
public:
    static DistanceMatrix from_graph(const Graph& g);

    /// Unvalidated construction from raw row-major entries (values <= 254).
    /// This is the audit fault-injection hook: it lets tests pair a graph
    /// with a deliberately corrupted distance oracle.
    static DistanceMatrix from_entries(int n, const std::vector<uint8_t>& entries);

    int size() const { return n_; }
    size_t stride() const { return stride_; }

    uint8_t operator()(int u, int v) const {
        return d_[static_cast<size_t>(u) * stride_ + static_cast<size_t>(v)];
    }
    const uint8_t* row(int u) const { return d_.data() + static_cast<size_t>(u) * stride_; }

    int diameter() const { return diameter_; }

private:
    DistanceMatrix() = default;

    int n_ = 0;
    size_t stride_ = 0;
    int diameter_ = 0;
    std::vector<uint8_t> d_;
};

/// A validated finite integer metric that is not necessarily graphical.
/// Collinearity is an exact equality test, so entries are integers; rational
/// metrics must be pre-scaled by the caller.
class GeneralMetric {
public:
    GeneralMetric(int n, std::vector<uint32_t> entries) : n_(n), d_(std::move(entries)) {}

    int size() const { return n_; }
    uint32_t operator()(int u, int v) const {
        return d_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)];
    }

private:
    int n_;
    std::vector<uint32_t> d_;
};

template <typename M>
concept IntegerMetric = requires(const M& m, int u, int v) {
    { m.size() } -> std::convertible_to<int>;
    { m(u, v) } -> std::convertible_to<uint64_t>;
};

/// [abc]: a-b-c in metric order, i.e. d(a,b) + d(b,c) == d(a,c).
template <IntegerMetric M>
bool between(const M& m, int a, int b, int c) {
    return static_cast<uint64_t>(m(a, b)) + static_cast<uint64_t>(m(b, c)) ==
           static_cast<uint64_t>(m(a, c));
}

/// One of [acb], [cab], [abc] holds. Vertices must be pairwise distinct.
template <IntegerMetric M>
bool is_collinear(const M& m, int a, int b, int c) {
    if (a == b || a == c || b == c)
        throw UsageError("is_collinear requires three distinct vertices");
    return between(m, a, c, b) || between(m, c, a, b) || between(m, a, b, c);
}

DistanceMatrix distance_matrix(const Graph& g);
int diameter(const Graph& g);

/// One human-readable entry per violated metric axiom, each with a witness
/// tuple; empty means the matrix is a metric.
std::vector<std::string> metric_violations(int n, const std::vector<uint32_t>& entries);

/// Throws ParseError listing every violated axiom.
GeneralMetric validate_metric(int n, const std::vector<uint32_t>& entries);

}  // namespace graphlines
