#include "homlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "homlab/canonical.hpp"
#include "homlab/errors.hpp"

namespace homlab {

namespace {

// All enumerations extend each representative of order n-1 by one vertex with
// every possible attachment, then deduplicate canonically.  Deleting the last
// vertex of any order-n object lands on some order-(n-1) representative, so
// the sweep is complete.

std::mutex cache_mutex;

std::vector<Graph> extend_graphs(const std::vector<Graph>& smaller, int n) {
    std::map<std::string, Graph> reps;
    for (const Graph& g : smaller) {
        int base = g.order();
        for (std::uint64_t attach = 0; attach < (std::uint64_t{1} << base); ++attach) {
            std::vector<std::pair<int, int>> es = g.edges();
            for (int v = 0; v < base; ++v)
                if (attach >> v & 1) es.emplace_back(v, base);
            Graph h(n, std::move(es));
            auto [code, labeling] =
                canonical_code_and_labeling(to_structure(h), std::max(kDefaultCanonicalCap, n));
            if (!reps.count(code)) {
                std::vector<std::pair<int, int>> relabeled;
                for (auto [u, v] : h.edges()) relabeled.emplace_back(labeling[u], labeling[v]);
                reps.emplace(std::move(code), Graph(n, std::move(relabeled)));
            }
        }
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [code, g] : reps) out.push_back(std::move(g));
    return out;
}

std::vector<Digraph> extend_digraphs(const std::vector<Digraph>& smaller, int n) {
    std::map<std::string, Digraph> reps;
    for (const Digraph& g : smaller) {
        int base = g.order();
        std::uint64_t combos = 1;
        for (int i = 0; i < base; ++i) combos *= 4;
        for (std::uint64_t attach = 0; attach < combos; ++attach) {
            std::vector<std::pair<int, int>> arcs = g.arcs();
            std::uint64_t code_bits = attach;
            for (int v = 0; v < base; ++v) {
                int mode = code_bits & 3;
                code_bits >>= 2;
                if (mode & 1) arcs.emplace_back(v, base);
                if (mode & 2) arcs.emplace_back(base, v);
            }
            Digraph h(n, std::move(arcs));
            auto [code, labeling] =
                canonical_code_and_labeling(to_structure(h), std::max(kDefaultCanonicalCap, n));
            if (!reps.count(code)) {
                std::vector<std::pair<int, int>> relabeled;
                for (auto [u, v] : h.arcs()) relabeled.emplace_back(labeling[u], labeling[v]);
                reps.emplace(std::move(code), Digraph(n, std::move(relabeled)));
            }
        }
    }
    std::vector<Digraph> out;
    out.reserve(reps.size());
    for (auto& [code, g] : reps) out.push_back(std::move(g));
    return out;
}

} // namespace

const std::vector<Graph>& all_graphs_of_order(int n) {
    if (n < 1) throw argument_error("all_graphs_of_order: need n >= 1");
    if (n > 10) throw capacity_error("all_graphs_of_order: enumeration capped at order 10");
    static std::vector<std::vector<Graph>> cache; // cache[k] holds order k+1
    std::scoped_lock lock(cache_mutex);
    while (static_cast<int>(cache.size()) < n) {
        int next = static_cast<int>(cache.size()) + 1;
        if (next == 1)
            cache.push_back({Graph(1, {})});
        else
            cache.push_back(extend_graphs(cache[next - 2], next));
    }
    return cache[n - 1];
}

std::vector<Graph> all_graphs_up_to(int max_order) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_order; ++n) {
        const auto& tier = all_graphs_of_order(n);
        out.insert(out.end(), tier.begin(), tier.end());
    }
    return out;
}

const std::vector<Digraph>& all_digraphs_of_order(int n) {
    if (n < 1) throw argument_error("all_digraphs_of_order: need n >= 1");
    if (n > 6) throw capacity_error("all_digraphs_of_order: enumeration capped at order 6");
    static std::vector<std::vector<Digraph>> cache;
    std::scoped_lock lock(cache_mutex);
    while (static_cast<int>(cache.size()) < n) {
        int next = static_cast<int>(cache.size()) + 1;
        if (next == 1)
            cache.push_back({Digraph(1, {})});
        else
            cache.push_back(extend_digraphs(cache[next - 2], next));
    }
    return cache[n - 1];
}

std::vector<Digraph> all_digraphs_up_to(int max_order) {
    std::vector<Digraph> out;
    for (int n = 1; n <= max_order; ++n) {
        const auto& tier = all_digraphs_of_order(n);
        out.insert(out.end(), tier.begin(), tier.end());
    }
    return out;
}

namespace {

// Every tuple over 0..n-1 that contains the vertex n-1, per relation.
std::vector<std::vector<std::vector<int>>> new_vertex_tuples(const Signature& sig, int n) {
    std::vector<std::vector<std::vector<int>>> out(sig.symbol_count());
    for (int r = 0; r < sig.symbol_count(); ++r) {
        int arity = sig.symbol(r).arity;
        std::vector<int> tuple(arity, 0);
        while (true) {
            if (std::find(tuple.begin(), tuple.end(), n - 1) != tuple.end())
                out[r].push_back(tuple);
            int pos = arity - 1;
            while (pos >= 0 && tuple[pos] == n - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            ++tuple[pos];
        }
    }
    return out;
}

std::vector<Structure> extend_structures(const std::vector<Structure>& smaller,
                                         const Signature& sig, int n,
                                         const StructureEnumLimits& limits) {
    auto candidates = new_vertex_tuples(sig, n);
    int total_new = 0;
    for (const auto& per_rel : candidates) total_new += static_cast<int>(per_rel.size());
    if (total_new > limits.max_new_tuples)
        throw capacity_error("structure enumeration: " + std::to_string(total_new) +
                             " candidate tuples through the new vertex exceed the guard of " +
                             std::to_string(limits.max_new_tuples) +
                             "; set a per-relation tuple cap or lower the order");

    std::map<std::string, Structure> reps;
    std::vector<std::pair<int, int>> slot; // (relation, index into candidates[relation])
    for (int r = 0; r < sig.symbol_count(); ++r)
        for (size_t i = 0; i < candidates[r].size(); ++i)
            slot.emplace_back(r, static_cast<int>(i));

    for (const Structure& s : smaller) {
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << total_new); ++subset) {
            std::vector<Relation> rels;
            for (int r = 0; r < sig.symbol_count(); ++r)
                rels.push_back(Relation{sig.symbol(r).arity, s.relation(r).flat});
            for (int b = 0; b < total_new; ++b) {
                if (!(subset >> b & 1)) continue;
                auto [r, i] = slot[b];
                const auto& tuple = candidates[r][i];
                rels[r].flat.insert(rels[r].flat.end(), tuple.begin(), tuple.end());
            }
            if (limits.tuple_cap >= 0) {
                bool over = false;
                for (const auto& rel : rels)
                    if (rel.tuple_count() > limits.tuple_cap) over = true;
                if (over) continue;
            }
            Structure h(sig, n, std::move(rels));
            auto [code, labeling] =
                canonical_code_and_labeling(h, std::max(kDefaultCanonicalCap, n));
            if (!reps.count(code)) reps.emplace(std::move(code), apply_labeling(h, labeling));
        }
    }
    std::vector<Structure> out;
    out.reserve(reps.size());
    for (auto& [code, s] : reps) out.push_back(std::move(s));
    return out;
}

} // namespace

std::vector<Structure> all_structures_of_order(const Signature& sig, int n,
                                               const StructureEnumLimits& limits) {
    if (n < 1) throw argument_error("all_structures_of_order: need n >= 1");
    if (n > 6) throw capacity_error("all_structures_of_order: capped at order 6");
    std::vector<Structure> tier;
    for (int k = 1; k <= n; ++k) {
        if (k == 1) {
            std::vector<Structure> singles;
            // order-1 structures: every subset of the all-zero tuples
            std::vector<std::vector<std::vector<int>>> cands = new_vertex_tuples(sig, 1);
            int total = 0;
            for (const auto& per_rel : cands) total += static_cast<int>(per_rel.size());
            if (total > limits.max_new_tuples)
                throw capacity_error("structure enumeration: base tier exceeds guard");
            std::vector<std::pair<int, int>> slot;
            for (int r = 0; r < sig.symbol_count(); ++r)
                for (size_t i = 0; i < cands[r].size(); ++i)
                    slot.emplace_back(r, static_cast<int>(i));
            std::map<std::string, Structure> reps;
            for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << total); ++subset) {
                std::vector<Relation> rels;
                for (int r = 0; r < sig.symbol_count(); ++r)
                    rels.push_back(Relation{sig.symbol(r).arity, {}});
                for (int b = 0; b < total; ++b) {
                    if (!(subset >> b & 1)) continue;
                    auto [r, i] = slot[b];
                    rels[r].flat.insert(rels[r].flat.end(), cands[r][i].begin(),
                                        cands[r][i].end());
                }
                if (limits.tuple_cap >= 0) {
                    bool over = false;
                    for (const auto& rel : rels)
                        if (rel.tuple_count() > limits.tuple_cap) over = true;
                    if (over) continue;
                }
                Structure h(sig, 1, std::move(rels));
                reps.emplace(canonical_code(h, kDefaultCanonicalCap), h);
            }
            for (auto& [code, s] : reps) singles.push_back(std::move(s));
            tier = std::move(singles);
        } else {
            tier = extend_structures(tier, sig, k, limits);
        }
    }
    return tier;
}

} // namespace homlab
