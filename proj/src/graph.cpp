#include "graphlines/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "graphlines/kernels.hpp"

namespace graphlines {

bool Graph::connected() const {
    const auto& ops = kernels::active_ops();
    Bitset reached(n_);
    reached.set(0);
    Bitset frontier = reached;
    while (frontier.any()) {
        Bitset next(n_);
        for (int v = frontier.first(); v >= 0; v = frontier.next(v))
            ops.or_into(next.words(), rows_[static_cast<size_t>(v)].words(), next.word_count());
        for (size_t w = 0; w < next.word_count(); ++w)
            next.words()[w] &= ~reached.words()[w];
        reached |= next;
        frontier = std::move(next);
    }
    return reached.count() == n_;
}

namespace {

long pair_count(int n) { return static_cast<long>(n) * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");
    const unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == 126)
        throw ParseError("graph6: extended size header at byte 0 is not supported (n > 62)");
    if (head < 63 || head > 126)
        throw ParseError("graph6: out-of-range byte at offset 0");
    const int n = head - 63;
    if (n < 1) throw ParseError("graph6: vertex count 0 at byte 0");

    const long bits = pair_count(n);
    const size_t body = static_cast<size_t>((bits + 5) / 6);
    if (text.size() != 1 + body)
        throw ParseError("graph6: malformed length, expected " + std::to_string(1 + body) +
                         " bytes for n=" + std::to_string(n) + ", got " +
                         std::to_string(text.size()));

    Graph g(n);
    long k = 0;  // bit index in x(0,1), x(0,2), x(1,2), x(0,3), ... order
    int u = 0, v = 1;
    for (size_t i = 1; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: out-of-range byte at offset " + std::to_string(i));
        const int group = c - 63;
        for (int b = 5; b >= 0; --b, ++k) {
            const int bit = (group >> b) & 1;
            if (k < bits) {
                if (bit) g.add_edge(u, v);
                if (++u == v) {
                    u = 0;
                    ++v;
                }
            } else if (bit) {
                throw ParseError("graph6: nonzero trailing bit at offset " + std::to_string(i));
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw UsageError("graph6 encoding limited to n <= 62 (single-byte size header)");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v))
            throw ParseError("edge list: line " + std::to_string(lineno) +
                             ": expected two vertex indices");
        std::string rest;
        if (ls >> rest)
            throw ParseError("edge list: line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || v < 0 || u == v)
            throw ParseError("edge list: line " + std::to_string(lineno) + ": bad edge " +
                             std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
    }
    if (max_vertex < 0) throw ParseError("edge list: no edges found");
    Graph g(max_vertex + 1);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph parse_graph_auto(std::string_view text) {
    size_t i = 0;
    while (i < text.size() && (text[i] == '\n' || text[i] == '\r')) ++i;
    std::string_view rest = text.substr(i);
    const size_t eol = rest.find('\n');
    std::string_view first = eol == std::string_view::npos ? rest : rest.substr(0, eol);
    const bool edgeish =
        first.find('#') != std::string_view::npos ||
        first.find_first_of(" \t") != std::string_view::npos;
    return edgeish ? parse_edge_list(text) : parse_graph6(first);
}

TwinPartition twin_partition(const Graph& g) {
    const int n = g.vertex_count();
    // Group rows by exact neighborhood; map is keyed on the word vector so
    // ordering of classes follows the smallest member.
    std::vector<int> leader_of(static_cast<size_t>(n), -1);
    std::map<std::vector<uint64_t>, int> seen;
    TwinPartition part;
    for (int v = 0; v < n; ++v) {
        const Bitset& row = g.neighbors(v);
        std::vector<uint64_t> key(row.words(), row.words() + row.word_count());
        auto [it, inserted] = seen.try_emplace(std::move(key), static_cast<int>(part.classes.size()));
        if (inserted)
            part.classes.push_back({v});
        else
            part.classes[static_cast<size_t>(it->second)].push_back(v);
    }
    std::sort(part.classes.begin(), part.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return part;
}

long complement_edge_count(const Graph& g) {
    return pair_count(g.vertex_count()) - g.edge_count();
}

}  // namespace graphlines
