#include "graphlines/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <istream>
#include <unordered_set>

#include "graphlines/lines.hpp"
#include "graphlines/metric.hpp"
#include "graphlines/parallel.hpp"

namespace graphlines {

int SmallGraph::degree(int u) const { return std::popcount(rows[static_cast<size_t>(u)]); }

bool SmallGraph::connected() const {
    if (n < 1) return false;
    uint16_t reached = 1, frontier = 1;
    while (frontier) {
        uint16_t next = 0;
        for (uint16_t f = frontier; f;) {
            const int v = std::countr_zero(f);
            f &= static_cast<uint16_t>(f - 1);
            next |= rows[static_cast<size_t>(v)];
        }
        next &= static_cast<uint16_t>(~reached);
        reached |= next;
        frontier = next;
    }
    return reached == static_cast<uint16_t>((1u << n) - 1);
}

SmallGraph SmallGraph::from_graph(const Graph& g) {
    if (g.vertex_count() > 10)
        throw UsageError("canonical labeling supports at most 10 vertices");
    SmallGraph s;
    s.n = g.vertex_count();
    for (int u = 0; u < s.n; ++u)
        for (int v = u + 1; v < s.n; ++v)
            if (g.adjacent(u, v)) s.add_edge(u, v);
    return s;
}

Graph SmallGraph::to_graph() const {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adjacent(u, v)) g.add_edge(u, v);
    return g;
}

namespace {

// ---------------------------------------------------------------------------
// Canonical labeling: individualization-refinement searching for the
// lexicographically least adjacency encoding, with discovered automorphisms
// pruning branches that revisit an orbit.

struct Partition {
    int8_t order[10];
    bool starts[10];  // starts[p]: a cell begins at position p
};

class Canonicalizer {
public:
    explicit Canonicalizer(const SmallGraph& g) : g_(g), n_(g.n) {}

    uint64_t run() {
        Partition p;
        for (int i = 0; i < n_; ++i) {
            p.order[i] = static_cast<int8_t>(i);
            p.starts[i] = false;
        }
        p.starts[0] = true;
        search(p);
        return best_;
    }

private:
    static constexpr int kMaxAutos = 64;

    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            uint16_t mask[10];
            int ncells = 0;
            for (int pos = 0; pos < n_; ++pos) {
                if (p.starts[pos]) mask[ncells++] = 0;
                mask[ncells - 1] |= static_cast<uint16_t>(1u << p.order[pos]);
            }
            Partition np;
            int npos = 0;
            for (int s = 0; s < n_;) {
                int e = s + 1;
                while (e < n_ && !p.starts[e]) ++e;
                if (e - s == 1) {
                    np.order[npos] = p.order[s];
                    np.starts[npos] = true;
                    ++npos;
                    s = e;
                    continue;
                }
                struct Entry {
                    uint8_t sig[10];
                    int8_t v;
                };
                Entry ent[10];
                const int m = e - s;
                for (int i = 0; i < m; ++i) {
                    const int v = p.order[s + i];
                    ent[i].v = static_cast<int8_t>(v);
                    for (int c = 0; c < ncells; ++c)
                        ent[i].sig[c] = static_cast<uint8_t>(
                            std::popcount(static_cast<uint16_t>(g_.rows[static_cast<size_t>(v)] & mask[c])));
                    for (int c = ncells; c < 10; ++c) ent[i].sig[c] = 0;
                }
                std::sort(ent, ent + m, [](const Entry& a, const Entry& b) {
                    const int r = std::memcmp(a.sig, b.sig, sizeof a.sig);
                    return r != 0 ? r < 0 : a.v < b.v;
                });
                for (int i = 0; i < m; ++i) {
                    const bool fresh = i == 0 || std::memcmp(ent[i].sig, ent[i - 1].sig, sizeof ent[i].sig) != 0;
                    if (fresh && i > 0) changed = true;
                    np.order[npos] = ent[i].v;
                    np.starts[npos] = fresh;
                    ++npos;
                }
                s = e;
            }
            p = np;
        }
    }

    void search(Partition p) {
        refine(p);
        int s = -1, e = -1;
        for (int pos = 0; pos < n_ && s < 0; ++pos) {
            if (!p.starts[pos]) continue;
            int end = pos + 1;
            while (end < n_ && !p.starts[end]) ++end;
            if (end - pos > 1) {
                s = pos;
                e = end;
            }
        }
        if (s < 0) {
            leaf(p);
            return;
        }
        int8_t done[10];
        int done_n = 0;
        for (int i = s; i < e; ++i) {
            const int8_t v = p.order[i];
            if (pruned(v, done, done_n)) continue;
            Partition child = p;
            child.order[s] = v;
            int t = s + 1;
            for (int j = s; j < e; ++j)
                if (p.order[j] != v) child.order[t++] = p.order[j];
            child.starts[s] = true;
            child.starts[s + 1] = true;
            for (int j = s + 2; j < e; ++j) child.starts[j] = false;
            base_[base_len_++] = v;
            search(child);
            --base_len_;
            done[done_n++] = v;
        }
    }

    bool pruned(int8_t v, const int8_t* done, int done_n) const {
        for (int a = 0; a < auto_count_; ++a) {
            const int8_t* phi = autos_[a];
            bool fixes_base = true;
            for (int i = 0; i < base_len_; ++i)
                if (phi[base_[i]] != base_[i]) {
                    fixes_base = false;
                    break;
                }
            if (!fixes_base) continue;
            const int8_t img = phi[v];
            for (int i = 0; i < done_n; ++i)
                if (done[i] == img) return true;
        }
        return false;
    }

    void leaf(const Partition& p) {
        const uint64_t enc = encode(p.order);
        if (!have_best_ || enc < best_) {
            best_ = enc;
            have_best_ = true;
            std::memcpy(best_leaf_, p.order, sizeof best_leaf_);
        } else if (enc == best_ && auto_count_ < kMaxAutos) {
            int8_t phi[10];
            bool identity = true;
            for (int pos = 0; pos < n_; ++pos) {
                phi[best_leaf_[pos]] = p.order[pos];
                if (best_leaf_[pos] != p.order[pos]) identity = false;
            }
            if (!identity) std::memcpy(autos_[auto_count_++], phi, sizeof phi);
        }
    }

    uint64_t encode(const int8_t* order) const {
        uint64_t enc = 0;
        for (int v = 1; v < n_; ++v)
            for (int u = 0; u < v; ++u)
                enc = (enc << 1) |
                      ((g_.rows[static_cast<size_t>(order[u])] >> order[v]) & 1u);
        return enc;
    }

    const SmallGraph& g_;
    const int n_;
    uint64_t best_ = 0;
    bool have_best_ = false;
    int8_t best_leaf_[10] = {};
    int8_t base_[10] = {};
    int base_len_ = 0;
    int8_t autos_[kMaxAutos][10] = {};
    int auto_count_ = 0;
};

void small_distances(const SmallGraph& g, uint8_t d[10][10]) {
    for (int s = 0; s < g.n; ++s) {
        uint16_t reached = static_cast<uint16_t>(1u << s);
        uint16_t frontier = reached;
        d[s][s] = 0;
        uint8_t level = 0;
        while (frontier) {
            uint16_t next = 0;
            for (uint16_t f = frontier; f;) {
                const int v = std::countr_zero(f);
                f &= static_cast<uint16_t>(f - 1);
                next |= g.rows[static_cast<size_t>(v)];
            }
            next &= static_cast<uint16_t>(~reached);
            ++level;
            for (uint16_t f = next; f;) {
                const int v = std::countr_zero(f);
                f &= static_cast<uint16_t>(f - 1);
                d[s][v] = level;
            }
            reached |= next;
            frontier = next;
        }
    }
}

struct SmallLines {
    uint16_t mask[45];
    int pairs = 0;
    int distinct = 0;  // filled by dedup()
    bool universal = false;

    void compute(const SmallGraph& g, const uint8_t d[10][10]) {
        pairs = 0;
        for (int a = 0; a < g.n; ++a)
            for (int b = a + 1; b < g.n; ++b) {
                const int ab = d[a][b];
                uint16_t m = 0;
                for (int c = 0; c < g.n; ++c) {
                    const int x = d[a][c], y = d[b][c];
                    if (x + y == ab || x + ab == y || ab + y == x)
                        m |= static_cast<uint16_t>(1u << c);
                }
                mask[pairs++] = m;
            }
    }

    void dedup(int n) {
        uint16_t sorted[45];
        std::memcpy(sorted, mask, sizeof(uint16_t) * static_cast<size_t>(pairs));
        std::sort(sorted, sorted + pairs);
        distinct = pairs == 0 ? 0 : 1;
        for (int i = 1; i < pairs; ++i)
            if (sorted[i] != sorted[i - 1]) ++distinct;
        const uint16_t full = static_cast<uint16_t>((1u << n) - 1);
        universal = false;
        for (int i = 0; i < pairs; ++i)
            if (mask[i] == full) {
                universal = true;
                break;
            }
    }
};

bool small_trivial(const SmallGraph& g) {
    bool complete = true;
    int deg1 = 0, deg2 = 0;
    for (int v = 0; v < g.n; ++v) {
        const int dv = g.degree(v);
        if (dv != g.n - 1) complete = false;
        if (dv == 1) ++deg1;
        if (dv == 2) ++deg2;
    }
    return complete || (deg1 == 2 && deg2 == g.n - 2) || (g.n == 4 && deg2 == 4);
}

/// Non-trivial and geometric dominant, allocation-free. Equivalent to the
/// classify() flags; the equivalence is exercised exhaustively in tests.
bool small_nontrivial_gd(const SmallGraph& g) {
    if (small_trivial(g)) return false;
    uint8_t d[10][10];
    small_distances(g, d);
    SmallLines ln;
    ln.compute(g, d);
    for (int i = 0; i < ln.pairs; ++i)
        for (int j = i + 1; j < ln.pairs; ++j) {
            if (ln.mask[i] == ln.mask[j]) continue;  // same line, not a containment
            if ((ln.mask[i] & ~ln.mask[j]) == 0 || (ln.mask[j] & ~ln.mask[i]) == 0) return false;
        }
    return true;
}

bool small_chen_chvatal(const SmallGraph& g) {
    uint8_t d[10][10];
    small_distances(g, d);
    SmallLines ln;
    ln.compute(g, d);
    ln.dedup(g.n);
    return ln.universal || ln.distinct >= g.n;
}

/// The four super-dominance conditions (literal containment reading).
bool small_super(const SmallGraph& g) {
    uint8_t d[10][10];
    small_distances(g, d);
    int diam = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) diam = std::max(diam, static_cast<int>(d[u][v]));
    if (diam != 2) return false;
    SmallLines ln;
    ln.compute(g, d);
    for (int i = 0; i < ln.pairs; ++i)
        for (int j = i + 1; j < ln.pairs; ++j)
            if ((ln.mask[i] & ~ln.mask[j]) == 0 || (ln.mask[j] & ~ln.mask[i]) == 0) return false;
    uint16_t hood[10];
    for (int v = 0; v < g.n; ++v)
        hood[v] = static_cast<uint16_t>(g.rows[static_cast<size_t>(v)] | (1u << v));
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (a != b && (hood[a] & ~hood[b]) == 0) return false;
    for (int a = 0; a < g.n; ++a)
        for (int i = 0; i < ln.pairs; ++i)
            if ((hood[a] & ~ln.mask[i]) == 0 || (ln.mask[i] & ~hood[a]) == 0) return false;
    return true;
}

std::vector<SmallGraph> augment_level(const std::vector<SmallGraph>& parents, int k, int workers) {
    std::vector<std::vector<uint64_t>> local(static_cast<size_t>(std::max(workers, 1)));
    parallel_chunks(static_cast<long>(parents.size()), workers, [&](long b, long e, int w) {
        auto& out = local[static_cast<size_t>(w)];
        for (long i = b; i < e; ++i) {
            const SmallGraph& parent = parents[static_cast<size_t>(i)];
            const uint16_t top = static_cast<uint16_t>(1u << (k - 1));
            for (uint16_t nb = 1; nb < (1u << (k - 1)); ++nb) {
                SmallGraph child = parent;
                child.n = k;
                child.rows[static_cast<size_t>(k - 1)] = nb;
                for (uint16_t f = nb; f;) {
                    const int u = std::countr_zero(f);
                    f &= static_cast<uint16_t>(f - 1);
                    child.rows[static_cast<size_t>(u)] |= top;
                }
                out.push_back(Canonicalizer(child).run());
            }
        }
    });
    std::vector<uint64_t> codes;
    for (const auto& v : local) codes.insert(codes.end(), v.begin(), v.end());
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<SmallGraph> reps;
    reps.reserve(codes.size());
    for (uint64_t c : codes) reps.push_back(decode_canonical(CanonicalForm{k, c}));
    return reps;
}

}  // namespace

CanonicalForm canonical_form(const SmallGraph& g) {
    if (g.n < 1 || g.n > 10) throw UsageError("canonical labeling supports 1..10 vertices");
    return CanonicalForm{g.n, Canonicalizer(g).run()};
}

CanonicalForm canonical_form(const Graph& g) { return canonical_form(SmallGraph::from_graph(g)); }

SmallGraph decode_canonical(const CanonicalForm& c) {
    SmallGraph g;
    g.n = c.n;
    const int bits = c.n * (c.n - 1) / 2;
    int k = 0;
    for (int v = 1; v < c.n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if ((c.code >> (bits - 1 - k)) & 1) g.add_edge(u, v);
    return g;
}

Graph canonical_graph(const Graph& g) { return decode_canonical(canonical_form(g)).to_graph(); }

std::vector<SmallGraph> enumerate_connected(int n, int workers) {
    if (n < 1 || n > 9)
        throw UsageError("built-in enumeration covers 1..9 vertices; use a graph6 stream beyond");
    std::vector<SmallGraph> reps{SmallGraph{1, {}}};
    for (int k = 2; k <= n; ++k) reps = augment_level(reps, k, workers);
    return reps;
}

SearchResult find_nontrivial_gd(int n, int workers) {
    const auto reps = enumerate_connected(n, workers);
    SearchResult res;
    res.order = n;
    res.graphs_scanned = static_cast<long>(reps.size());

    std::vector<uint8_t> candidate(reps.size(), 0);
    parallel_chunks(static_cast<long>(reps.size()), workers, [&](long b, long e, int) {
        for (long i = b; i < e; ++i)
            candidate[static_cast<size_t>(i)] = small_nontrivial_gd(reps[static_cast<size_t>(i)]);
    });

    for (size_t i = 0; i < reps.size(); ++i) {
        if (!candidate[i]) continue;
        const Graph g = reps[i].to_graph();
        const Classification cls = classify(g);
        if (cls.trivial_kind != TrivialKind::none || !cls.geometric_dominant)
            throw Error("search filter disagrees with the classifier");
        res.witnesses.push_back({to_graph6(g), cls});
    }
    for (const auto& w : res.witnesses) {
        const long lines = w.cls.distinct_line_count;
        if (!res.g_min || lines < *res.g_min) res.g_min = lines;
    }
    return res;
}

SearchResult find_nontrivial_gd_stream(std::istream& in, bool dedup, int workers) {
    std::vector<Graph> graphs;
    std::unordered_set<uint64_t> seen;
    std::string line;
    long lineno = 0;
    int common_order = -2;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        Graph g = [&] {
            try {
                return parse_graph6(line);
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
            }
        }();
        if (!g.connected())
            throw ConnectivityError("line " + std::to_string(lineno) + ": graph is disconnected");
        if (dedup) {
            const auto cf = canonical_form(g);  // throws beyond 10 vertices
            const uint64_t key = cf.code | (static_cast<uint64_t>(cf.n) << 48);
            if (!seen.insert(key).second) continue;
        }
        common_order = common_order == -2 ? g.vertex_count()
                       : common_order == g.vertex_count() ? common_order
                                                          : -1;
        graphs.push_back(std::move(g));
    }

    SearchResult res;
    res.order = common_order == -2 ? -1 : common_order;
    res.graphs_scanned = static_cast<long>(graphs.size());
    std::vector<Classification> cls(graphs.size());
    parallel_chunks(static_cast<long>(graphs.size()), workers, [&](long b, long e, int) {
        for (long i = b; i < e; ++i)
            cls[static_cast<size_t>(i)] = classify(graphs[static_cast<size_t>(i)]);
    });
    for (size_t i = 0; i < graphs.size(); ++i) {
        if (cls[i].trivial_kind != TrivialKind::none || !cls[i].geometric_dominant) continue;
        res.witnesses.push_back({to_graph6(graphs[i]), cls[i]});
        const long lines = cls[i].distinct_line_count;
        if (!res.g_min || lines < *res.g_min) res.g_min = lines;
    }
    return res;
}

std::optional<long> g_min(int n, int workers) { return find_nontrivial_gd(n, workers).g_min; }

SweepResult sweep_open_questions(int max_n, int workers) {
    if (max_n < 2 || max_n > 9) throw UsageError("sweep covers 2 <= max_n <= 9");
    SweepResult sweep;
    for (int k = 2; k <= max_n; ++k) {
        const auto reps = enumerate_connected(k, workers);
        SweepOrderReport rep;
        rep.order = k;
        rep.classes = static_cast<long>(reps.size());

        std::vector<uint8_t> gd(reps.size()), super(reps.size()), cc_bad(reps.size());
        parallel_chunks(static_cast<long>(reps.size()), workers, [&](long b, long e, int) {
            for (long i = b; i < e; ++i) {
                const auto& g = reps[static_cast<size_t>(i)];
                gd[static_cast<size_t>(i)] = small_nontrivial_gd(g);
                super[static_cast<size_t>(i)] = small_super(g);
                cc_bad[static_cast<size_t>(i)] = !small_chen_chvatal(g);
            }
        });

        for (size_t i = 0; i < reps.size(); ++i) {
            if (cc_bad[i]) ++rep.chen_chvatal_violations;
            if (super[i]) {
                ++rep.super_count;
                if (rep.super_g6.size() < 8) rep.super_g6.push_back(to_graph6(reps[i].to_graph()));
            }
            if (gd[i]) {
                ++rep.nontrivial_gd_count;
                const Graph g = reps[i].to_graph();
                const Classification cls = classify(g);
                rep.witness_g6.push_back(to_graph6(g));
                rep.witness_diameters.push_back(cls.diameter);
                if (cls.diameter != 2) rep.all_witnesses_diameter2 = false;
                if (!rep.g_min || cls.distinct_line_count < *rep.g_min)
                    rep.g_min = cls.distinct_line_count;
            }
        }
        sweep.orders.push_back(std::move(rep));
    }
    return sweep;
}

}  // namespace graphlines
