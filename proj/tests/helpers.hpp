#pragma once

#include <string>

#include "graphlines/graph.hpp"

namespace helpers {

inline graphlines::Graph path(int n) {
    graphlines::Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline graphlines::Graph cycle(int n) {
    graphlines::Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline graphlines::Graph complete(int n) {
    graphlines::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline graphlines::Graph complete_bipartite(int a, int b) {
    graphlines::Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

inline std::string fixture(const std::string& name) {
    return std::string(GRAPHLINES_FIXTURE_DIR) + "/" + name;
}

}  // namespace helpers
