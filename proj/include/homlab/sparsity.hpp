#ifndef HOMLAB_SPARSITY_HPP
#define HOMLAB_SPARSITY_HPP

#include <optional>
#include <vector>

#include "homlab/graph.hpp"
#include "homlab/hom.hpp"

namespace homlab {

// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);
// Shortest odd cycle length; nullopt for bipartite graphs.
std::optional<int> odd_girth(const Graph& g);
bool is_bipartite(const Graph& g);

inline constexpr int kDefaultTreeDepthCap = 14;

// Exact tree-depth: 0 for the empty graph, 1 for nonempty edgeless graphs,
// 1 + min over vertex deletions for connected graphs, max over components
// otherwise.  Memoized on canonical codes of connected subgraphs.
int tree_depth(const Graph& g, int cap = kDefaultTreeDepthCap);

// Depth parameter for shallow topological minors.  s = floor(2p) is the
// maximum number of internal subdivision vertices per edge, so connecting
// paths have length at most s+1.
struct DepthParam {
    int s = 0;
};

// All graphs H with at most max_order vertices (up to isomorphism) such that
// some <=s-internal-vertex subdivision of H is a subgraph of g.
std::vector<Graph> shallow_top_minors(const Graph& g, DepthParam d, int max_order);

enum class GradeMeasure { omega, chi, avg_degree };

// Max of the chosen invariant over shallow_top_minors(g, d, max_order).
double grade(const Graph& g, DepthParam d, GradeMeasure measure, int max_order);

struct TdColoring {
    int t = 0;
    std::vector<int> colors; // vertex -> color id, 0-based
    int color_count = 0;
};

// Checks the low tree-depth property: every union of k <= t color classes
// induces a subgraph of tree-depth at most k.
bool td_coloring_valid(const Graph& g, const TdColoring& coloring);

inline constexpr int kChiTExactOrderCap = 10;
inline constexpr int kChiTExactTCap = 4;

// Minimum number of colors admitting a valid TdColoring; exhaustive
// backtracking, capped at order <= 10 and t <= 4.
int chi_t_exact(const Graph& g, int t);

// Some valid TdColoring: exact within the chi_t caps, otherwise greedy by
// degeneracy order.  Always validated before returning.
TdColoring low_td_coloring(const Graph& g, int t);

// 56(c-1)^2 log(c-1) / (log c - log(c-1)), natural log; requires c >= 4.
double dvorak_threshold(int c);

} // namespace homlab

#endif
