#include "homlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "homlab/canonical.hpp"
#include "homlab/errors.hpp"

namespace homlab {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw argument_error("graph: negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw argument_error("graph: loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw argument_error("graph: edge endpoint out of range: " + std::to_string(u) +
                                 " " + std::to_string(v) + " with n=" + std::to_string(n));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    auto comp = component_ids();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> new_id(n_, -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 0 || v >= n_) throw argument_error("induced: vertex out of range");
        new_id[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges_)
        if (new_id[u] != -1 && new_id[v] != -1) es.emplace_back(new_id[u], new_id[v]);
    return Graph(static_cast<int>(sorted.size()), std::move(es));
}

Graph Graph::without_vertex(int v) const {
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int i = 0; i < n_; ++i)
        if (i != v) keep.push_back(i);
    return induced(keep);
}

Graph Graph::without_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size());
    for (auto e : edges_)
        if (e != std::make_pair(u, v)) es.push_back(e);
    return Graph(n_, std::move(es));
}

Graph subdivide(const Graph& g, int k, int vertex_budget) {
    if (k < 0) throw argument_error("subdivide: negative k");
    long long total = g.order() + static_cast<long long>(k) * g.size();
    if (total > vertex_budget)
        throw capacity_error("subdivide: " + std::to_string(total) +
                             " vertices exceed budget " + std::to_string(vertex_budget));
    std::vector<std::pair<int, int>> es;
    int next = g.order();
    for (auto [u, v] : g.edges()) {
        int prev = u;
        for (int i = 0; i < k; ++i) {
            es.emplace_back(prev, next);
            prev = next++;
        }
        es.emplace_back(prev, v);
    }
    return Graph(static_cast<int>(total), std::move(es));
}

Graph subdivide_general(const Graph& g, const std::map<std::pair<int, int>, int>& lengths,
                        int vertex_budget) {
    long long total = g.order();
    for (auto [u, v] : g.edges()) {
        auto it = lengths.find({u, v});
        if (it == lengths.end()) it = lengths.find({v, u});
        if (it == lengths.end())
            throw argument_error("subdivide_general: missing length for edge " +
                                 std::to_string(u) + "-" + std::to_string(v));
        if (it->second < 1) throw argument_error("subdivide_general: length must be positive");
        total += it->second - 1;
    }
    if (total > vertex_budget)
        throw capacity_error("subdivide_general: vertex budget exceeded");
    std::vector<std::pair<int, int>> es;
    int next = g.order();
    for (auto [u, v] : g.edges()) {
        auto it = lengths.find({u, v});
        if (it == lengths.end()) it = lengths.find({v, u});
        int len = it->second;
        int prev = u;
        for (int i = 0; i < len - 1; ++i) {
            es.emplace_back(prev, next);
            prev = next++;
        }
        es.emplace_back(prev, v);
    }
    return Graph(static_cast<int>(total), std::move(es));
}

Graph identify_vertices(const Graph& g, int u, int v) {
    if (u == v) throw argument_error("identify_vertices: u == v");
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw argument_error("identify_vertices: vertex out of range");
    int lo = std::min(u, v), hi = std::max(u, v);
    auto relabel = [&](int x) {
        if (x == hi) x = lo;
        return x > hi ? x - 1 : x;
    };
    std::set<std::pair<int, int>> es;
    for (auto [a, b] : g.edges()) {
        int a2 = relabel(a), b2 = relabel(b);
        if (a2 == b2) continue; // adjacent pair merged: drop the loop
        es.insert({std::min(a2, b2), std::max(a2, b2)});
    }
    return Graph(g.order() - 1, {es.begin(), es.end()});
}

namespace {

std::vector<Graph> dedup_identifications(const Graph& g, bool nonadjacent_only) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (nonadjacent_only && g.adjacent(u, v)) continue;
            Graph h = identify_vertices(g, u, v);
            auto code = canonical_code(h, std::max(kDefaultCanonicalCap, h.order()));
            if (seen.insert(std::move(code)).second) out.push_back(std::move(h));
        }
    return out;
}

} // namespace

std::vector<Graph> pre_set(const Graph& g) { return dedup_identifications(g, false); }

std::vector<Graph> pre_set_nonadjacent(const Graph& g) {
    return dedup_identifications(g, true);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), std::move(es));
}

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arc_list) : n_(n) {
    if (n < 0) throw argument_error("digraph: negative vertex count");
    for (auto [u, v] : arc_list) {
        if (u == v) throw argument_error("digraph: loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw argument_error("digraph: arc endpoint out of range");
    }
    std::sort(arc_list.begin(), arc_list.end());
    arc_list.erase(std::unique(arc_list.begin(), arc_list.end()), arc_list.end());
    arcs_ = std::move(arc_list);
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
}

} // namespace homlab
