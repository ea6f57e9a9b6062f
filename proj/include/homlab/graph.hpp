#ifndef HOMLAB_GRAPH_HPP
#define HOMLAB_GRAPH_HPP

#include <map>
#include <utility>
#include <vector>

namespace homlab {

// Default cap on vertices produced by constructive operations (subdivision,
// products, unions).
inline constexpr int kDefaultVertexBudget = 1 << 16;

// Finite simple undirected graph on vertices 0..n-1.  No loops, no parallel
// edges.  Immutable after construction.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    std::vector<int> component_ids() const;
    int component_count() const;
    Graph induced(const std::vector<int>& vertices) const;
    Graph without_vertex(int v) const;
    Graph without_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_; // sorted, u < v
    std::vector<std::vector<int>> adj_;
};

// Finite loopless directed graph; at most one arc per ordered pair.
class Digraph {
  public:
    Digraph() = default;
    Digraph(int n, std::vector<std::pair<int, int>> arc_list);

    int order() const { return n_; }
    int size() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_; // sorted
    std::vector<std::vector<int>> out_, in_;
};

// Exact k-subdivision: every edge replaced by a path with k new internal
// vertices.  Original vertices keep ids 0..n-1 (the branching vertices);
// internal vertices are appended in edge order.
Graph subdivide(const Graph& g, int k, int vertex_budget = kDefaultVertexBudget);

// General subdivision: edge e is replaced by a path of lengths[e] edges
// (lengths[e] = 1 leaves e intact).  lengths must cover every edge.
Graph subdivide_general(const Graph& g,
                        const std::map<std::pair<int, int>, int>& lengths,
                        int vertex_budget = kDefaultVertexBudget);

// Merges u and v (u != v).  Any loop arising from an adjacent pair is
// dropped; parallel edges collapse.  Result stays in the simple category.
Graph identify_vertices(const Graph& g, int u, int v);

// Pre(G): all graphs obtained by identifying one unordered pair of vertices,
// deduplicated up to isomorphism.
std::vector<Graph> pre_set(const Graph& g);

// The members of Pre(G) arising from non-adjacent pairs only.  For these the
// quotient map G -> G/uv is itself a homomorphism, which is what the
// hom-decomposition lemma needs; an identification of adjacent vertices drops
// the loop edge and the quotient map is not a homomorphism.
std::vector<Graph> pre_set_nonadjacent(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

} // namespace homlab

#endif
