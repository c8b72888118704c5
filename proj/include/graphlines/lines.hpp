#pragma once

#include <utility>
#include <vector>

#include "graphlines/bitset.hpp"
#include "graphlines/metric.hpp"

namespace graphlines {

/// A line keyed by its member set; the generating pairs are bookkeeping.
struct Line {
    Bitset members;
    std::vector<std::pair<int, int>> generators;  // u < v
    int member_count = 0;
};

/// All distinct lines of a metric, plus the pair -> line index.
struct LineFamily {
    int n = 0;
    std::vector<Line> lines;        // ordered by first generating pair
    std::vector<int> pair_to_line;  // one entry per unordered pair, pair_id order

    /// Lexicographic pair id: (0,1), (0,2), ..., (0,n-1), (1,2), ...
    static long pair_id(int u, int v, int n) {
        if (u > v) std::swap(u, v);
        return static_cast<long>(u) * n - static_cast<long>(u) * (u + 1) / 2 + (v - u - 1);
    }
    long pair_count() const { return static_cast<long>(n) * (n - 1) / 2; }
    const Line& line_of(int u, int v) const {
        return lines[static_cast<size_t>(pair_to_line[static_cast<size_t>(pair_id(u, v, n))])];
    }
    int line_index_of(int u, int v) const {
        return pair_to_line[static_cast<size_t>(pair_id(u, v, n))];
    }
    int distinct_count() const { return static_cast<int>(lines.size()); }
};

/// Members of the line through a and b: {a,b} plus every collinear vertex.
Bitset line_members(const DistanceMatrix& d, int a, int b);
Bitset line_members(const GeneralMetric& m, int a, int b);

/// Least superset of {a,b} closed under line expansion.
Bitset closure_line(const DistanceMatrix& d, int a, int b);
Bitset closure_line(const GeneralMetric& m, int a, int b);

LineFamily line_family(const DistanceMatrix& d, int workers = 1);
LineFamily line_family(const GeneralMetric& m, int workers = 1);

bool has_universal_line(const LineFamily& f);

}  // namespace graphlines
