#include "homlab/sparsity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "homlab/canonical.hpp"
#include "homlab/enumerate.hpp"
#include "homlab/errors.hpp"

namespace homlab {

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    int n = g.order();
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        // Non-tree edges close a walk through s containing a cycle no longer
        // than the walk; for s on a shortest cycle the bound is attained.
        for (auto [u, v] : g.edges()) {
            if (dist[u] == -1 || dist[v] == -1) continue;
            if (parent[u] == v || parent[v] == u) continue;
            best = std::min(best, dist[u] + dist[v] + 1);
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<int> odd_girth(const Graph& g) {
    // Shortest odd closed walk from any vertex; such a walk is an odd cycle.
    int best = std::numeric_limits<int>::max();
    int n = g.order();
    std::vector<std::array<int, 2>> dist(n);
    for (int s = 0; s < n; ++s) {
        for (auto& d : dist) d = {-1, -1};
        std::deque<std::pair<int, int>> queue{{s, 0}};
        dist[s][0] = 0;
        while (!queue.empty()) {
            auto [v, p] = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (dist[w][1 - p] == -1) {
                    dist[w][1 - p] = dist[v][p] + 1;
                    queue.emplace_back(w, 1 - p);
                }
            }
        }
        if (dist[s][1] != -1) best = std::min(best, dist[s][1]);
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool is_bipartite(const Graph& g) { return !odd_girth(g).has_value(); }

namespace {

class TreeDepthSolver {
  public:
    int solve(const Graph& g) {
        if (g.order() == 0) return 0;
        int best = 0;
        auto comp = g.component_ids();
        int comps = g.component_count();
        for (int c = 0; c < comps; ++c) {
            std::vector<int> vs;
            for (int v = 0; v < g.order(); ++v)
                if (comp[v] == c) vs.push_back(v);
            best = std::max(best, connected_td(g.induced(vs)));
        }
        return best;
    }

  private:
    int connected_td(const Graph& g) {
        int n = g.order();
        if (n == 1) return 1;
        if (g.size() == 0) return 1;
        std::string code = canonical_code(g, std::max(kDefaultCanonicalCap, n));
        auto it = memo_.find(code);
        if (it != memo_.end()) return it->second;
        int best = n;
        for (int v = 0; v < n; ++v) best = std::min(best, 1 + solve(g.without_vertex(v)));
        memo_.emplace(std::move(code), best);
        return best;
    }

    std::unordered_map<std::string, int> memo_;
};

} // namespace

int tree_depth(const Graph& g, int cap) {
    if (g.order() > cap)
        throw capacity_error("tree_depth: order " + std::to_string(g.order()) +
                             " exceeds cap " + std::to_string(cap));
    return TreeDepthSolver().solve(g);
}

namespace {

// Can some <=s-internal-vertex subdivision of h be embedded in g?  Branch
// vertices are placed injectively, then each h-edge is routed as a path of
// length 1..s+1 whose internal vertices are fresh.
class ShallowEmbedder {
  public:
    ShallowEmbedder(const Graph& g, const Graph& h, int s) : g_(g), h_(h), s_(s) {}

    bool embeds() {
        if (h_.order() > g_.order()) return false;
        place_.assign(h_.order(), -1);
        used_.assign(g_.order(), false);
        order_.resize(h_.order());
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            return h_.degree(a) > h_.degree(b);
        });
        return place_branch(0);
    }

  private:
    bool place_branch(size_t idx) {
        if (idx == order_.size()) return route_edge(0);
        int hv = order_[idx];
        for (int gv = 0; gv < g_.order(); ++gv) {
            if (used_[gv] || g_.degree(gv) < h_.degree(hv)) continue;
            used_[gv] = true;
            place_[hv] = gv;
            if (place_branch(idx + 1)) return true;
            used_[gv] = false;
            place_[hv] = -1;
        }
        return false;
    }

    bool route_edge(size_t e) {
        if (e == h_.edges().size()) return true;
        auto [hu, hv] = h_.edges()[e];
        return extend_path(place_[hu], place_[hv], s_ + 1, e);
    }

    bool extend_path(int at, int goal, int steps_left, size_t e) {
        if (steps_left <= 0) return false;
        if (g_.adjacent(at, goal) && route_edge(e + 1)) return true;
        for (int w : g_.neighbors(at)) {
            if (used_[w] || w == goal) continue;
            used_[w] = true;
            if (extend_path(w, goal, steps_left - 1, e)) {
                used_[w] = false;
                return true;
            }
            used_[w] = false;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    int s_;
    std::vector<int> place_;
    std::vector<bool> used_;
    std::vector<int> order_;
};

} // namespace

std::vector<Graph> shallow_top_minors(const Graph& g, DepthParam d, int max_order) {
    if (d.s < 0) throw argument_error("shallow_top_minors: negative depth");
    std::vector<Graph> out;
    for (int k = 1; k <= std::min(max_order, g.order()); ++k) {
        for (const Graph& h : all_graphs_of_order(k)) {
            if (ShallowEmbedder(g, h, d.s).embeds()) out.push_back(h);
        }
    }
    return out;
}

double grade(const Graph& g, DepthParam d, GradeMeasure measure, int max_order) {
    auto minors = shallow_top_minors(g, d, max_order);
    double best = 0.0;
    for (const Graph& h : minors) {
        double value = 0.0;
        switch (measure) {
        case GradeMeasure::omega: value = clique_number(h); break;
        case GradeMeasure::chi: value = chromatic_number(h); break;
        case GradeMeasure::avg_degree:
            value = h.order() == 0 ? 0.0 : 2.0 * h.size() / h.order();
            break;
        }
        best = std::max(best, value);
    }
    return best;
}

namespace {

// Shared tree-depth evaluations keyed on canonical codes, used while
// validating candidate colorings.
struct TdCache {
    std::unordered_map<std::string, int> memo;

    int td(const Graph& g) {
        std::string code = canonical_code(g, std::max(kDefaultCanonicalCap, g.order()));
        auto it = memo.find(code);
        if (it != memo.end()) return it->second;
        int value = tree_depth(g, std::max(kDefaultTreeDepthCap, g.order()));
        memo.emplace(std::move(code), value);
        return value;
    }
};

std::vector<std::vector<int>> color_classes(const std::vector<int>& colors, int count) {
    std::vector<std::vector<int>> classes(count);
    for (size_t v = 0; v < colors.size(); ++v)
        if (colors[v] >= 0) classes[colors[v]].push_back(static_cast<int>(v));
    return classes;
}

// Checks every subset I of color classes with |I| <= t that contains color
// `must_include` (or all such subsets when must_include < 0): the union must
// induce tree-depth at most |I|.
bool subsets_ok(const Graph& g, const std::vector<std::vector<int>>& classes, int t,
                int must_include, TdCache& cache) {
    int n_colors = static_cast<int>(classes.size());
    std::vector<int> subset;
    std::vector<int> members;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (!subset.empty()) {
            bool relevant = must_include < 0 ||
                            std::find(subset.begin(), subset.end(), must_include) != subset.end();
            if (relevant) {
                members.clear();
                for (int c : subset)
                    members.insert(members.end(), classes[c].begin(), classes[c].end());
                if (cache.td(g.induced(members)) > static_cast<int>(subset.size()))
                    return false;
            }
        }
        if (static_cast<int>(subset.size()) == t) return true;
        for (int c = from; c < n_colors; ++c) {
            subset.push_back(c);
            if (!rec(c + 1)) return false;
            subset.pop_back();
        }
        return true;
    };
    return rec(0);
}

std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.order();
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        order.push_back(best);
        for (int w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

// Exhaustive search for a valid coloring with exactly n_colors available;
// color symmetry broken by allowing at most one fresh color per step.
bool exact_coloring(const Graph& g, int t, int n_colors, TdCache& cache,
                    std::vector<int>& colors) {
    int n = g.order();
    colors.assign(n, -1);
    std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
        if (v == n) return true;
        int limit = std::min(n_colors, used + 1);
        for (int c = 0; c < limit; ++c) {
            colors[v] = c;
            auto classes = color_classes(colors, std::max(used, c + 1));
            if (subsets_ok(g, classes, t, c, cache) && rec(v + 1, std::max(used, c + 1)))
                return true;
            colors[v] = -1;
        }
        return false;
    };
    return rec(0, 0);
}

} // namespace

bool td_coloring_valid(const Graph& g, const TdColoring& coloring) {
    if (static_cast<int>(coloring.colors.size()) != g.order()) return false;
    for (int c : coloring.colors)
        if (c < 0 || c >= coloring.color_count) return false;
    TdCache cache;
    auto classes = color_classes(coloring.colors, coloring.color_count);
    return subsets_ok(g, classes, coloring.t, -1, cache);
}

int chi_t_exact(const Graph& g, int t) {
    if (t < 1) throw argument_error("chi_t_exact: t must be positive");
    if (g.order() > kChiTExactOrderCap || t > kChiTExactTCap)
        throw capacity_error("chi_t_exact: outside exhaustive caps (order <= " +
                             std::to_string(kChiTExactOrderCap) + ", t <= " +
                             std::to_string(kChiTExactTCap) + ")");
    if (g.order() == 0) return 0;
    TdCache cache;
    std::vector<int> colors;
    for (int n_colors = 1; n_colors <= g.order(); ++n_colors)
        if (exact_coloring(g, t, n_colors, cache, colors)) return n_colors;
    return g.order();
}

TdColoring low_td_coloring(const Graph& g, int t) {
    if (t < 1) throw argument_error("low_td_coloring: t must be positive");
    TdColoring result;
    result.t = t;
    if (g.order() == 0) return result;
    TdCache cache;
    if (g.order() <= kChiTExactOrderCap && t <= kChiTExactTCap) {
        std::vector<int> colors;
        for (int n_colors = 1; n_colors <= g.order(); ++n_colors) {
            if (exact_coloring(g, t, n_colors, cache, colors)) {
                result.colors = colors;
                result.color_count = n_colors;
                break;
            }
        }
    } else {
        // Greedy fallback: degeneracy order, smallest color whose addition
        // keeps every affected subset within its tree-depth bound.  A fresh
        // color is always safe, so this terminates with a valid coloring.
        result.colors.assign(g.order(), -1);
        int used = 0;
        for (int v : degeneracy_order(g)) {
            bool placed = false;
            for (int c = 0; c < used && !placed; ++c) {
                result.colors[v] = c;
                auto classes = color_classes(result.colors, used);
                if (subsets_ok(g, classes, t, c, cache))
                    placed = true;
                else
                    result.colors[v] = -1;
            }
            if (!placed) result.colors[v] = used++;
        }
        result.color_count = used;
    }
    if (!td_coloring_valid(g, result))
        throw internal_error("low_td_coloring: produced coloring failed validation");
    return result;
}

double dvorak_threshold(int c) {
    if (c < 4) throw argument_error("dvorak_threshold: requires c >= 4");
    double cm1 = c - 1;
    return 56.0 * cm1 * cm1 * std::log(cm1) / (std::log(c) - std::log(cm1));
}

} // namespace homlab
