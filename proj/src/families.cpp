#include "homlab/families.hpp"

#include "homlab/errors.hpp"

namespace homlab {

Graph complete_graph(int k) {
    if (k < 1) throw argument_error("complete_graph: k must be positive");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) es.emplace_back(u, v);
    return Graph(k, std::move(es));
}

Graph edgeless_graph(int n) {
    if (n < 0) throw argument_error("edgeless_graph: negative n");
    return Graph(n, {});
}

Graph cycle_graph(int n) {
    if (n < 3) throw argument_error("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(es));
}

Graph path_graph(int n) {
    if (n < 1) throw argument_error("path_graph: need n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw argument_error("complete_bipartite: parts must be positive");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph(a + b, std::move(es));
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);         // outer cycle
        es.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        es.emplace_back(i, 5 + i);               // spokes
    }
    return Graph(10, std::move(es));
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw argument_error("star_graph: negative leaf count");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, std::move(es));
}

Digraph directed_path(int n) {
    if (n < 1) throw argument_error("directed_path: need n >= 1");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(n, std::move(arcs));
}

Digraph directed_cycle(int n) {
    if (n < 2) throw argument_error("directed_cycle: need n >= 2");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, std::move(arcs));
}

Digraph transitive_tournament(int k) {
    if (k < 1) throw argument_error("transitive_tournament: need k >= 1");
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) arcs.emplace_back(u, v);
    return Digraph(k, std::move(arcs));
}

} // namespace homlab
