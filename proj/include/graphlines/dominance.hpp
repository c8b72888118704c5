#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphlines/graph.hpp"
#include "graphlines/lines.hpp"
#include "graphlines/metric.hpp"

namespace graphlines {

enum class TrivialKind { none, path, complete, c4 };
const char* to_string(TrivialKind k);

struct Classification {
    TrivialKind trivial_kind = TrivialKind::none;
    bool geometric_dominant = false;
    bool strongly_geometric_dominant = false;
    bool super_geometric_dominant = false;
    bool has_universal = false;
    int diameter = 0;
    int distinct_line_count = 0;
};

/// sets[i] ⊆ sets[j] with i != j (equality counts).
struct SubsetWitness {
    int i = -1, j = -1;
};

/// Popcount-grouped subset scan: a set can only be contained in a set of
/// equal or larger size, so only size-ordered pairs are tested.
std::optional<SubsetWitness> find_subset_pair(const std::vector<const Bitset*>& sets);
/// Reference double loop over all ordered pairs; the oracle the optimized
/// scan is equivalence-tested against.
std::optional<SubsetWitness> find_subset_pair_naive(const std::vector<const Bitset*>& sets);

/// No line is a proper subset of another.
bool is_geometric_dominant(const LineFamily& f);
/// Any two distinct lines meet in at most one vertex.
bool is_strongly_geometric_dominant(const LineFamily& f);

/// Containment condition 4 quantifies over a, b, c with b != c; `literal`
/// admits a ∈ {b,c}, `strict_distinct` requires all three distinct.
enum class Cond4Mode { literal, strict_distinct };

struct SuperCheck {
    bool ok = false;
    int failed_condition = 0;  // 1..4; 0 when ok
    std::string witness;
};

/// The four conditions in order: diameter 2; the C(n,2) pair lines are
/// pairwise incomparable under ⊆ (equal lines from distinct pairs violate);
/// closed neighborhoods incomparable; no containment between any line and
/// any closed neighborhood. Reports the first violated condition.
SuperCheck check_super_geometric_dominant(const Graph& g, const DistanceMatrix& d,
                                          const LineFamily& f,
                                          Cond4Mode mode = Cond4Mode::literal);
SuperCheck check_super_geometric_dominant(const Graph& g, Cond4Mode mode = Cond4Mode::literal,
                                          int workers = 1);
bool is_super_geometric_dominant(const Graph& g);

/// Structural detection (degrees + edge count), no line computation.
TrivialKind trivial_kind(const Graph& g);

Classification classify(const Graph& g, int workers = 1);

/// Universal line exists, or at least n distinct lines.
bool check_chen_chvatal(const Graph& g);

struct GeneratorComponent {
    std::vector<int> vertices;
    bool complete_bipartite = false;
    std::vector<int> side_a, side_b;  // 2-coloring when bipartite; side_a holds the smallest vertex
};

/// H(L): the graph on V whose edges are the pairs generating L.
struct GeneratorGraph {
    int line_index = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<GeneratorComponent> components;  // non-isolated vertices only
    bool is_star = false;                        // all edges share one vertex
    std::optional<int> common_distance;          // d(L): set when all generator distances agree
};

GeneratorGraph generator_graph(const DistanceMatrix& d, const LineFamily& f, int line_index);

enum class AuditStatus { pass, fail, vacuous, not_applicable };
const char* to_string(AuditStatus s);

struct AuditCheck {
    std::string name;
    AuditStatus status = AuditStatus::not_applicable;
    long instances = 0;   // premise instances actually tested
    std::string witness;  // populated on failure; replays to the same failure
};

struct AuditReport {
    bool nontrivial_geometric_dominant = false;
    std::vector<AuditCheck> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (c.status == AuditStatus::fail) return false;
        return true;
    }
};

/// Property-tests the lemma suite against one host graph. Checks whose
/// hypotheses need a non-trivial geometric dominant host are labeled
/// not_applicable on other hosts; an applicable check that finds no premise
/// instance is labeled vacuous, never silently passed. `metric_override`
/// substitutes a (possibly corrupted) metric for the BFS distances - a fault
/// injection hook used by tests.
AuditReport audit(const Graph& g, const DistanceMatrix* metric_override = nullptr,
                  int workers = 1);

/// Individual lemma checks, exposed so tests can drive each mechanism on
/// hosts where audit() would gate them out. Each returns an AuditCheck with
/// instances counted and a witness on failure.
namespace checks {
AuditCheck lemma_abc(const DistanceMatrix& d, const LineFamily& f);
AuditCheck lemma_abcd(const DistanceMatrix& d, const LineFamily& f);
AuditCheck lemma_bridge(const Graph& g);
AuditCheck lemma_parallel(const DistanceMatrix& d, const LineFamily& f);
AuditCheck lemma_unit_square(const DistanceMatrix& d, const LineFamily& f);
AuditCheck lemma_bip_blocks(const DistanceMatrix& d, const LineFamily& f);
AuditCheck lemma_star_generator(const LineFamily& f);
AuditCheck lemma_twins(const Graph& g, const DistanceMatrix& d, const LineFamily& f);
AuditCheck lemma_twin_non_edge(const Graph& g, const LineFamily& f);
AuditCheck edge_partition(const DistanceMatrix& d, const LineFamily& f);
AuditCheck parallel_non_edge_count(const Graph& g, const LineFamily& f);
}  // namespace checks

}  // namespace graphlines
