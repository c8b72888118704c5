#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphlines/graph.hpp"

namespace graphlines {

/// k-cycle rim plus a center adjacent to everything; center is vertex 0,
/// rim is 1..k. n = k+1.
Graph wheel(int k);

/// 5-wheel with each rim vertex replaced by an independent set; the center
/// stays a single vertex. Every size must be >= 3.
Graph wheel_blown(const std::array<int, 5>& sizes);

/// The known small non-trivial geometric dominant graphs: order 6 is the
/// wheel W6; order 7 adds a twin of a rim vertex; order 8 adds one more rim
/// twin (the concrete choice is pinned by fixture and verified in tests).
Graph known_example(int order);

/// Each base vertex expanded into an independent t-set V_v; adjacency lifted
/// blockwise. Result vertex v*t+i belongs to part V_v.
struct ExplodedGraph {
    Graph base;
    int t;
    Graph result;
    std::vector<int> part_of;  // result vertex -> base vertex
};

ExplodedGraph explode(const Graph& g, int t);

/// C(t,2)·n + (C(n,2) − m)·t² + m — the line count of the t-exploded graph
/// of a super geometric dominant base with n vertices and m edges, t >= 3.
long explode_line_count(int n, long m, int t);

struct ExplodeStructureReport {
    bool ok = true;
    long pairs_checked = 0;
    std::string witness;
};

/// Verifies the three closed-form line shapes of an exploded graph (same
/// part; cross non-adjacent; cross adjacent) against brute-force line
/// computation. Requires base diameter <= 2 and t >= 3.
ExplodeStructureReport explode_line_structure_check(const ExplodedGraph& e, int workers = 1);

/// Splittable counter-based generator: each value is a hash of
/// (seed, stream, counter), so parallel draws are reproducible regardless
/// of scheduling.
struct CounterRng {
    uint64_t seed = 0;

    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t at(uint64_t stream, uint64_t counter) const {
        return mix(mix(mix(seed) ^ stream) ^ counter);
    }

    bool bernoulli(uint64_t stream, uint64_t counter, double p) const {
        const uint64_t thr = static_cast<uint64_t>(ldexpl(static_cast<long double>(p), 64));
        return at(stream, counter) < thr;
    }
};

/// G(n,p): every pair an independent coin; identical seed, identical graph.
Graph sample_gnp(int n, double p, uint64_t seed);

struct LeftCliqueConfig {
    int n = 0;
    int t = 0;  // left side size, 1 <= t < n
    uint64_t seed = 0;
};

struct SamplerOutcome {
    Graph graph;
    bool accepted = false;
    std::optional<int> failed_condition;  // first violated condition of the last draw
    int attempts_used = 0;
};

/// Per-attempt first failed condition (0 = accepted) under the literal and
/// the strict-distinct readings of containment condition 4.
struct SamplerProfile {
    std::vector<int> failed_condition_literal;
    std::vector<int> failed_condition_strict;
    int accepted_count = 0;  // under the literal reading
};

/// One draw of the left-clique construction: vertices split into L (size t)
/// and R; R is a clique; every other edge is an independent 1/2 coin.
Graph left_clique_draw(const LeftCliqueConfig& cfg, int attempt);

/// Draws up to max_attempts graphs, verifying each; returns the first
/// accepted graph (re-verified, never assumed) or the last rejected one.
SamplerOutcome sample_left_clique(const LeftCliqueConfig& cfg, int max_attempts, int workers = 1,
                                  SamplerProfile* profile = nullptr);

}  // namespace graphlines
