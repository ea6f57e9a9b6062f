#include "homlab/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "homlab/canonical.hpp"
#include "homlab/errors.hpp"

namespace homlab {

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    std::set<std::string> names;
    for (const auto& s : symbols_) {
        if (s.arity < 1 || s.arity > kMaxArity)
            throw argument_error("signature: arity of " + s.name + " outside 1.." +
                                 std::to_string(kMaxArity));
        if (!names.insert(s.name).second)
            throw argument_error("signature: duplicate symbol " + s.name);
    }
}

int Signature::index_of(const std::string& name) const {
    for (int i = 0; i < symbol_count(); ++i)
        if (symbols_[i].name == name) return i;
    return -1;
}

int Signature::max_arity() const {
    int m = 0;
    for (const auto& s : symbols_) m = std::max(m, s.arity);
    return m;
}

namespace {

void sort_tuples(Relation& rel) {
    int r = rel.arity;
    int count = rel.tuple_count();
    std::vector<std::vector<int>> tuples(count);
    for (int i = 0; i < count; ++i)
        tuples[i].assign(rel.flat.begin() + static_cast<long>(i) * r,
                         rel.flat.begin() + static_cast<long>(i + 1) * r);
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    rel.flat.clear();
    for (const auto& t : tuples) rel.flat.insert(rel.flat.end(), t.begin(), t.end());
}

} // namespace

Structure::Structure(Signature sig, int n, std::vector<Relation> relations)
    : sig_(std::move(sig)), n_(n), relations_(std::move(relations)) {
    if (n < 0) throw argument_error("structure: negative universe size");
    if (static_cast<int>(relations_.size()) != sig_.symbol_count())
        throw argument_error("structure: relation count does not match signature");
    for (int i = 0; i < sig_.symbol_count(); ++i) {
        auto& rel = relations_[i];
        if (rel.arity != sig_.symbol(i).arity)
            throw argument_error("structure: arity mismatch for " + sig_.symbol(i).name);
        if (rel.flat.size() % rel.arity != 0)
            throw argument_error("structure: ragged tuple data for " + sig_.symbol(i).name);
        for (int x : rel.flat)
            if (x < 0 || x >= n_)
                throw argument_error("structure: tuple entry out of range in " +
                                     sig_.symbol(i).name);
        sort_tuples(rel);
    }
}

int Structure::total_tuples() const {
    int total = 0;
    for (const auto& rel : relations_) total += rel.tuple_count();
    return total;
}

std::vector<Block> Structure::blocks() const {
    std::vector<Block> out;
    for (int r = 0; r < sig_.symbol_count(); ++r) {
        const auto& rel = relations_[r];
        for (int i = 0; i < rel.tuple_count(); ++i) {
            auto t = rel.tuple(i);
            out.push_back(Block{r, {t.begin(), t.end()}});
        }
    }
    return out;
}

bool Structure::has_tuple(int rel_index, std::span<const int> tuple) const {
    const auto& rel = relations_[rel_index];
    int r = rel.arity;
    if (static_cast<int>(tuple.size()) != r) return false;
    int lo = 0, hi = rel.tuple_count();
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        auto cand = rel.tuple(mid);
        int cmp = 0;
        for (int j = 0; j < r; ++j) {
            if (cand[j] != tuple[j]) {
                cmp = cand[j] < tuple[j] ? -1 : 1;
                break;
            }
        }
        if (cmp == 0) return true;
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return false;
}

bool Structure::relations_count_equal(const Structure& other) const {
    for (size_t i = 0; i < relations_.size(); ++i)
        if (relations_[i].flat != other.relations_[i].flat) return false;
    return true;
}

bool Homomorphism::valid() const {
    if (source.sig() != target.sig()) return false;
    if (static_cast<int>(map.size()) != source.order()) return false;
    for (int x : map)
        if (x < 0 || x >= target.order()) return false;
    std::vector<int> image(kMaxArity);
    for (int r = 0; r < source.sig().symbol_count(); ++r) {
        const auto& rel = source.relation(r);
        for (int i = 0; i < rel.tuple_count(); ++i) {
            auto t = rel.tuple(i);
            for (int j = 0; j < rel.arity; ++j) image[j] = map[t[j]];
            if (!target.has_tuple(r, {image.data(), static_cast<size_t>(rel.arity)}))
                return false;
        }
    }
    return true;
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
    if (f.target.order() != g.source.order() || f.target.sig() != g.source.sig())
        throw argument_error("compose: middle structures disagree");
    Homomorphism h{f.source, g.target, std::vector<int>(f.map.size())};
    for (size_t i = 0; i < f.map.size(); ++i) h.map[i] = g.map[f.map[i]];
    return h;
}

const Signature& graph_signature() {
    static const Signature sig({Symbol{"E", 2}});
    return sig;
}

const Signature& digraph_signature() {
    static const Signature sig({Symbol{"A", 2}});
    return sig;
}

Structure to_structure(const Graph& g) {
    Relation rel{2, {}};
    rel.flat.reserve(static_cast<size_t>(g.size()) * 4);
    for (auto [u, v] : g.edges()) {
        rel.flat.insert(rel.flat.end(), {u, v, v, u});
    }
    return Structure(graph_signature(), g.order(), {std::move(rel)});
}

Structure to_structure(const Digraph& g) {
    Relation rel{2, {}};
    for (auto [u, v] : g.arcs()) rel.flat.insert(rel.flat.end(), {u, v});
    return Structure(digraph_signature(), g.order(), {std::move(rel)});
}

Structure to_structure_oriented(const Graph& g) {
    Relation rel{2, {}};
    for (auto [u, v] : g.edges()) rel.flat.insert(rel.flat.end(), {u, v});
    return Structure(graph_signature(), g.order(), {std::move(rel)});
}

std::optional<Graph> as_graph(const Structure& s) {
    if (s.sig().symbol_count() != 1 || s.sig().symbol(0).arity != 2) return std::nullopt;
    const auto& rel = s.relation(0);
    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i < rel.tuple_count(); ++i) {
        auto t = rel.tuple(i);
        if (t[0] == t[1]) return std::nullopt;
        pairs.insert({t[0], t[1]});
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : pairs) {
        if (u < v) {
            if (!pairs.count({v, u})) return std::nullopt;
            edges.emplace_back(u, v);
        }
    }
    if (pairs.size() != edges.size() * 2) return std::nullopt;
    return Graph(s.order(), std::move(edges));
}

std::optional<Digraph> as_digraph(const Structure& s) {
    if (s.sig().symbol_count() != 1 || s.sig().symbol(0).arity != 2) return std::nullopt;
    const auto& rel = s.relation(0);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < rel.tuple_count(); ++i) {
        auto t = rel.tuple(i);
        if (t[0] == t[1]) return std::nullopt;
        arcs.emplace_back(t[0], t[1]);
    }
    return Digraph(s.order(), std::move(arcs));
}

Structure disjoint_union(const Structure& a, const Structure& b) {
    if (a.sig() != b.sig()) throw argument_error("disjoint_union: signature mismatch");
    std::vector<Relation> rels;
    for (int r = 0; r < a.sig().symbol_count(); ++r) {
        Relation rel{a.relation(r).arity, a.relation(r).flat};
        for (int x : b.relation(r).flat) rel.flat.push_back(x + a.order());
        rels.push_back(std::move(rel));
    }
    return Structure(a.sig(), a.order() + b.order(), std::move(rels));
}

Structure induced_substructure(const Structure& a, const std::vector<int>& subset) {
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> new_id(a.order(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= a.order())
            throw argument_error("induced_substructure: vertex out of range");
        new_id[sorted[i]] = static_cast<int>(i);
    }
    std::vector<Relation> rels;
    for (int r = 0; r < a.sig().symbol_count(); ++r) {
        const auto& rel = a.relation(r);
        Relation out{rel.arity, {}};
        for (int i = 0; i < rel.tuple_count(); ++i) {
            auto t = rel.tuple(i);
            bool inside = true;
            for (int x : t)
                if (new_id[x] == -1) {
                    inside = false;
                    break;
                }
            if (!inside) continue;
            for (int x : t) out.flat.push_back(new_id[x]);
        }
        rels.push_back(std::move(out));
    }
    return Structure(a.sig(), static_cast<int>(sorted.size()), std::move(rels));
}

Structure categorical_product(const Structure& a, const Structure& b, int vertex_budget) {
    if (a.sig() != b.sig()) throw argument_error("categorical_product: signature mismatch");
    long long n = static_cast<long long>(a.order()) * b.order();
    if (n > vertex_budget)
        throw capacity_error("categorical_product: order " + std::to_string(n) +
                             " exceeds budget");
    std::vector<Relation> rels;
    for (int r = 0; r < a.sig().symbol_count(); ++r) {
        const auto& ra = a.relation(r);
        const auto& rb = b.relation(r);
        Relation out{ra.arity, {}};
        for (int i = 0; i < ra.tuple_count(); ++i) {
            auto ta = ra.tuple(i);
            for (int j = 0; j < rb.tuple_count(); ++j) {
                auto tb = rb.tuple(j);
                for (int k = 0; k < ra.arity; ++k)
                    out.flat.push_back(ta[k] * b.order() + tb[k]);
            }
        }
        rels.push_back(std::move(out));
    }
    return Structure(a.sig(), static_cast<int>(n), std::move(rels));
}

Graph gaifman(const Structure& a) {
    std::set<std::pair<int, int>> edges;
    for (int r = 0; r < a.sig().symbol_count(); ++r) {
        const auto& rel = a.relation(r);
        if (rel.arity < 2) continue;
        for (int i = 0; i < rel.tuple_count(); ++i) {
            auto t = rel.tuple(i);
            for (int x = 0; x < rel.arity; ++x)
                for (int y = x + 1; y < rel.arity; ++y)
                    if (t[x] != t[y])
                        edges.insert({std::min(t[x], t[y]), std::max(t[x], t[y])});
        }
    }
    return Graph(a.order(), {edges.begin(), edges.end()});
}

Graph incidence(const Structure& a) {
    auto blocks = a.blocks();
    std::set<std::pair<int, int>> edges;
    int block_id = a.order();
    for (const auto& b : blocks) {
        for (int x : b.tuple) edges.insert({x, block_id});
        ++block_id;
    }
    return Graph(a.order() + static_cast<int>(blocks.size()), {edges.begin(), edges.end()});
}

Structure identify_vertices(const Structure& a, int u, int v) {
    if (u == v) throw argument_error("identify_vertices: u == v");
    if (u < 0 || v < 0 || u >= a.order() || v >= a.order())
        throw argument_error("identify_vertices: vertex out of range");
    int lo = std::min(u, v), hi = std::max(u, v);
    auto relabel = [&](int x) {
        if (x == hi) x = lo;
        return x > hi ? x - 1 : x;
    };
    std::vector<Relation> rels;
    for (int r = 0; r < a.sig().symbol_count(); ++r) {
        const auto& rel = a.relation(r);
        Relation out{rel.arity, {}};
        std::vector<int> image(rel.arity);
        for (int i = 0; i < rel.tuple_count(); ++i) {
            auto t = rel.tuple(i);
            bool degenerate = false;
            for (int j = 0; j < rel.arity; ++j) {
                image[j] = relabel(t[j]);
                for (int k = 0; k < j; ++k)
                    if (image[k] == image[j]) degenerate = true;
            }
            if (degenerate) continue; // merged entries: the loop analogue, dropped
            out.flat.insert(out.flat.end(), image.begin(), image.end());
        }
        rels.push_back(std::move(out));
    }
    return Structure(a.sig(), a.order() - 1, std::move(rels));
}

std::vector<Structure> pre_set(const Structure& a) {
    std::vector<Structure> out;
    std::set<std::string> seen;
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v) {
            Structure h = identify_vertices(a, u, v);
            auto code = canonical_code(h, std::max(kDefaultCanonicalCap, h.order()));
            if (seen.insert(std::move(code)).second) out.push_back(std::move(h));
        }
    return out;
}

bool is_connected(const Structure& a) {
    return a.order() >= 1 && gaifman(a).component_count() == 1;
}

int component_count(const Structure& a) { return gaifman(a).component_count(); }

} // namespace homlab
