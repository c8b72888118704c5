#include "graphlines/metric.hpp"

#include <algorithm>

#include "graphlines/kernels.hpp"

namespace graphlines {

DistanceMatrix DistanceMatrix::from_graph(const Graph& g) {
    const auto& ops = kernels::active_ops();
    const int n = g.vertex_count();

    DistanceMatrix m;
    m.n_ = n;
    m.stride_ = (static_cast<size_t>(n) + 63) / 64 * 64;
    m.d_.assign(static_cast<size_t>(n) * m.stride_, 0);

    // One bit-parallel BFS per source: the next frontier is the OR of the
    // adjacency rows of the current frontier, minus everything reached.
    Bitset reached(n), frontier(n), next(n);
    for (int s = 0; s < n; ++s) {
        uint8_t* out = m.d_.data() + static_cast<size_t>(s) * m.stride_;
        reached.clear();
        reached.set(s);
        frontier.clear();
        frontier.set(s);
        int level = 0;
        int seen = 1;
        while (frontier.any()) {
            ++level;
            next.clear();
            for (int v = frontier.first(); v >= 0; v = frontier.next(v))
                ops.or_into(next.words(), g.neighbors(v).words(), next.word_count());
            for (size_t w = 0; w < next.word_count(); ++w)
                next.words()[w] &= ~reached.words()[w];
            if (!next.any()) break;
            if (level > 254)
                throw Error("distance matrix limited to diameter <= 254");
            for (int v = next.first(); v >= 0; v = next.next(v)) {
                out[v] = static_cast<uint8_t>(level);
                ++seen;
            }
            reached |= next;
            std::swap(frontier, next);
            m.diameter_ = std::max(m.diameter_, level);
        }
        if (seen != n)
            throw ConnectivityError("graph is disconnected; distances are undefined");
    }
    return m;
}

DistanceMatrix DistanceMatrix::from_entries(int n, const std::vector<uint8_t>& entries) {
    if (n < 1 || entries.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw UsageError("from_entries needs an n x n matrix");
    DistanceMatrix m;
    m.n_ = n;
    m.stride_ = (static_cast<size_t>(n) + 63) / 64 * 64;
    m.d_.assign(static_cast<size_t>(n) * m.stride_, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            const uint8_t val = entries[static_cast<size_t>(u) * n + v];
            if (val > 254) throw UsageError("entries must stay below 255");
            m.d_[static_cast<size_t>(u) * m.stride_ + v] = val;
            m.diameter_ = std::max(m.diameter_, static_cast<int>(val));
        }
    return m;
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix::from_graph(g); }

int diameter(const Graph& g) { return DistanceMatrix::from_graph(g).diameter(); }

std::vector<std::string> metric_violations(int n, const std::vector<uint32_t>& entries) {
    std::vector<std::string> out;
    if (n < 1) {
        out.push_back("metric needs at least one point");
        return out;
    }
    if (entries.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
        out.push_back("matrix is not n x n");
        return out;
    }
    auto at = [&](int u, int v) { return entries[static_cast<size_t>(u) * n + v]; };

    for (int u = 0; u < n; ++u)
        if (at(u, u) != 0) {
            out.push_back("nonzero diagonal at (" + std::to_string(u) + "," + std::to_string(u) + ")");
            break;
        }
    for (int u = 0; u < n && out.size() < 16; ++u)
        for (int v = u + 1; v < n; ++v)
            if (at(u, v) != at(v, u)) {
                out.push_back("asymmetric pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
                u = n;
                break;
            }
    for (int u = 0; u < n; ++u) {
        bool done = false;
        for (int v = u + 1; v < n; ++v)
            if (at(u, v) == 0) {
                out.push_back("zero distance for distinct pair (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
                done = true;
                break;
            }
        if (done) break;
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (static_cast<uint64_t>(at(u, v)) + at(v, w) < at(u, w)) {
                    out.push_back("triangle inequality fails at witness (" + std::to_string(u) +
                                  "," + std::to_string(v) + "," + std::to_string(w) + ")");
                    return out;
                }
    return out;
}

GeneralMetric validate_metric(int n, const std::vector<uint32_t>& entries) {
    auto bad = metric_violations(n, entries);
    if (!bad.empty()) {
        std::string msg = "not a metric:";
        for (const auto& b : bad) msg += " " + b + ";";
        throw ParseError(msg);
    }
    return GeneralMetric(n, entries);
}

}  // namespace graphlines
