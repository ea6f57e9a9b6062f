#include "homlab/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "homlab/canonical.hpp"
#include "homlab/enumerate.hpp"
#include "homlab/errors.hpp"
#include "homlab/families.hpp"
#include "homlab/io.hpp"
#include "homlab/sparsity.hpp"

namespace homlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic across platforms; std::uniform_real_distribution is not.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = splitmix64(state);
        return state;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> out;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw argument_error("generator spec: expected key=value, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

int require_int(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw argument_error("generator spec: missing " + key);
    return std::stoi(it->second);
}

} // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string kind = colon == std::string::npos ? text : text.substr(0, colon);
    auto kv = colon == std::string::npos ? std::map<std::string, std::string>{}
                                         : parse_kv(text.substr(colon + 1));
    GeneratorSpec spec;
    if (kind == "all_graphs" || kind == "graphs") {
        spec.kind = Kind::all_graphs;
        spec.max_order = require_int(kv, "max");
    } else if (kind == "all_digraphs" || kind == "digraphs") {
        spec.kind = Kind::all_digraphs;
        spec.max_order = require_int(kv, "max");
    } else if (kind == "subdiv" || kind == "subdivision_closure") {
        spec.kind = Kind::subdivision_closure;
        spec.max_order = require_int(kv, "max");
        spec.q = require_int(kv, "q");
        auto it = kv.find("base");
        if (it == kv.end()) throw argument_error("generator spec: missing base");
        spec.base_names = it->second;
        std::istringstream bases(it->second);
        std::string token;
        while (std::getline(bases, token, '+')) {
            spec.base.push_back(require_graph(parse_input(token), "subdivision base"));
        }
        if (spec.base.empty()) throw argument_error("generator spec: empty base list");
    } else if (kind == "td" || kind == "bounded_treedepth") {
        spec.kind = Kind::bounded_treedepth;
        spec.max_order = require_int(kv, "max");
        spec.td_bound = require_int(kv, "bound");
    } else if (kind == "rhg" || kind == "random_high_girth") {
        spec.kind = Kind::random_high_girth;
        spec.n = require_int(kv, "n");
        spec.girth_target = require_int(kv, "g");
        spec.trials = require_int(kv, "trials");
        spec.max_order = spec.n;
        if (!kv.count("seed"))
            throw argument_error("generator spec: seed is mandatory for randomized kinds");
        spec.seed = std::stoull(kv.at("seed"));
        if (kv.count("c")) spec.edge_c = std::stod(kv.at("c"));
    } else {
        throw argument_error("generator spec: unknown kind '" + kind + "'");
    }
    return spec;
}

std::string GeneratorSpec::to_string() const {
    std::ostringstream out;
    switch (kind) {
    case Kind::all_graphs: out << "all_graphs:max=" << max_order; break;
    case Kind::all_digraphs: out << "all_digraphs:max=" << max_order; break;
    case Kind::subdivision_closure:
        out << "subdiv:base=" << base_names << ",q=" << q << ",max=" << max_order;
        break;
    case Kind::bounded_treedepth:
        out << "td:bound=" << td_bound << ",max=" << max_order;
        break;
    case Kind::random_high_girth:
        out << "rhg:n=" << n << ",g=" << girth_target << ",trials=" << trials
            << ",seed=" << (seed ? *seed : 0);
        break;
    }
    return out.str();
}

namespace {

Graph delete_short_cycles(Graph g, int target_girth) {
    while (true) {
        auto current = girth(g);
        if (!current || *current >= target_girth) return g;
        // locate one shortest cycle's closing edge in BFS order and drop it
        int n = g.order();
        std::vector<int> dist(n), parent(n);
        for (int s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            std::fill(parent.begin(), parent.end(), -1);
            std::vector<int> queue{s};
            dist[s] = 0;
            for (size_t head = 0; head < queue.size(); ++head) {
                int v = queue[head];
                for (int w : g.neighbors(v))
                    if (dist[w] == -1) {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    }
            }
            bool deleted = false;
            for (auto [u, v] : g.edges()) {
                if (dist[u] == -1 || dist[v] == -1) continue;
                if (parent[u] == v || parent[v] == u) continue;
                if (dist[u] + dist[v] + 1 == *current) {
                    g = g.without_edge(u, v);
                    deleted = true;
                    break;
                }
            }
            if (deleted) break;
        }
    }
}

int chromatic_estimate(const Graph& g) {
    if (g.order() <= kDefaultChromaticCap) return chromatic_number(g);
    // greedy bound in reverse degeneracy order; deterministic
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
    std::vector<int> color(n, -1);
    int used = 0;
    for (int v : order) {
        std::set<int> taken;
        for (int w : g.neighbors(v))
            if (color[w] != -1) taken.insert(color[w]);
        int c = 0;
        while (taken.count(c)) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

} // namespace

std::optional<Graph> random_high_girth(int n, int g, int trials, std::uint64_t seed,
                                       double edge_c) {
    if (n < 1 || trials < 1) return std::nullopt;
    if (g < 3) g = 3; // every simple graph has girth >= 3
    std::optional<Graph> best;
    int best_chi = -1;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(splitmix64(seed ^ static_cast<std::uint64_t>(trial)));
        double p = std::min(1.0, edge_c / n);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.uniform() < p) edges.emplace_back(u, v);
        Graph candidate = delete_short_cycles(Graph(n, std::move(edges)), g);
        int chi = chromatic_estimate(candidate);
        if (chi > best_chi) {
            best_chi = chi;
            best = std::move(candidate);
        }
    }
    return best;
}

std::vector<std::pair<Graph, SubdivisionCertificate>>
subdivision_closure(const std::vector<Graph>& base, int q, int max_order) {
    if (q < 0) throw argument_error("subdivision_closure: negative q");
    std::vector<std::pair<Graph, SubdivisionCertificate>> out;
    std::set<std::string> seen;
    for (const Graph& b : base) {
        int m = b.size();
        std::vector<int> lengths(m, 1);
        while (true) {
            long long total = b.order();
            for (int len : lengths) total += len - 1;
            if (total <= max_order) {
                std::map<std::pair<int, int>, int> by_edge;
                for (int i = 0; i < m; ++i) by_edge[b.edges()[i]] = lengths[i];
                Graph h = subdivide_general(b, by_edge);
                auto code = canonical_code(h, std::max(kDefaultCanonicalCap, h.order()));
                if (seen.insert(code).second)
                    out.emplace_back(std::move(h), SubdivisionCertificate{b, lengths});
            }
            int pos = m - 1;
            while (pos >= 0 && lengths[pos] == q + 1) lengths[pos--] = 1;
            if (pos < 0) break;
            ++lengths[pos];
        }
        if (m == 0) { // edgeless base: the only subdivision is the base itself
            if (b.order() <= max_order) {
                auto code = canonical_code(b, std::max(kDefaultCanonicalCap, b.order()));
                if (seen.insert(code).second)
                    out.emplace_back(b, SubdivisionCertificate{b, {}});
            }
        }
    }
    return out;
}

ClassSample enumerate_sample(const GeneratorSpec& spec) {
    switch (spec.kind) {
    case GeneratorSpec::Kind::all_graphs: {
        std::vector<Structure> members;
        for (const Graph& g : all_graphs_up_to(spec.max_order))
            members.push_back(to_structure(g));
        return ClassSample::make(std::move(members),
                                 ClassFlags{.hereditary = true, .addable = true,
                                            .monotone = true},
                                 spec.to_string());
    }
    case GeneratorSpec::Kind::all_digraphs: {
        std::vector<Structure> members;
        for (const Digraph& g : all_digraphs_up_to(spec.max_order))
            members.push_back(to_structure(g));
        return ClassSample::make(std::move(members),
                                 ClassFlags{.hereditary = true, .addable = true,
                                            .monotone = true},
                                 spec.to_string());
    }
    case GeneratorSpec::Kind::subdivision_closure: {
        std::vector<Structure> members;
        for (const auto& [g, cert] : subdivision_closure(spec.base, spec.q, spec.max_order))
            members.push_back(to_structure(g));
        return ClassSample::make(std::move(members),
                                 ClassFlags{.topologically_closed = true}, spec.to_string());
    }
    case GeneratorSpec::Kind::bounded_treedepth: {
        std::vector<Structure> members;
        for (const Graph& g : all_graphs_up_to(spec.max_order))
            if (tree_depth(g) <= spec.td_bound) members.push_back(to_structure(g));
        return ClassSample::make(std::move(members),
                                 ClassFlags{.hereditary = true, .addable = true,
                                            .monotone = true},
                                 spec.to_string());
    }
    case GeneratorSpec::Kind::random_high_girth: {
        if (!spec.seed)
            throw argument_error("enumerate_sample: seed is mandatory for randomized kinds");
        std::vector<Structure> members;
        auto g = random_high_girth(spec.n, spec.girth_target, spec.trials, *spec.seed,
                                   spec.edge_c);
        if (g) members.push_back(to_structure(*g));
        return ClassSample::make(std::move(members), ClassFlags{}, spec.to_string());
    }
    }
    throw argument_error("enumerate_sample: unknown kind");
}

Verdict odd_girth_criterion_experiment(const ClassSample& sample, int g, int t,
                                       const HomSearchConfig& cfg, Structure* h_out) {
    if (g < 3 || g % 2 == 0)
        throw argument_error("odd_girth_criterion_experiment: g must be odd and >= 3");
    Structure forbidden = to_structure(cycle_graph(g));
    Structure h = dual_construct({forbidden}, sample, t, cfg);
    if (h_out) *h_out = h;

    Verdict verdict;
    if (auto witness = hom_exists(forbidden, h, cfg)) {
        verdict.holds = false;
        verdict.direction = "cycle-maps-to-dual";
        verdict.counterexample = forbidden;
        verdict.witness = witness;
        return verdict;
    }
    for (const auto& member : sample.members) {
        auto as_g = as_graph(member);
        if (!as_g) throw argument_error("odd_girth_criterion_experiment: sample must be graphs");
        auto og = odd_girth(*as_g);
        if (og && *og <= g) continue; // imposes nothing
        if (!hom_exists(member, h, cfg)) {
            verdict.holds = false;
            verdict.direction = "high-odd-girth-member-uncolorable";
            verdict.counterexample = member;
            return verdict;
        }
    }
    return verdict;
}

} // namespace homlab
