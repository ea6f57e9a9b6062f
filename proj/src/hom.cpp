#include "homlab/hom.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>

#include "homlab/errors.hpp"
#include "homlab/families.hpp"

namespace homlab {

long long default_node_budget() {
    if (const char* env = std::getenv("HOMLAB_BUDGET")) {
        char* end = nullptr;
        long long value = std::strtoll(env, &end, 10);
        if (end != env && value > 0) return value;
    }
    return 50'000'000;
}

namespace {

using Mask = std::uint64_t;

struct BinaryConstraint {
    int other;   // the variable at the far end
    int rel;
    bool forward; // true: tuple (other, changed); false: tuple (changed, other)
};

// Backtracking search over total maps source -> target.  Most-constrained
// variable first, values ascending; optional AC-3 propagation over binary
// tuples; tuples outside the propagated set are checked as soon as their
// support is fully assigned.
class HomSearcher {
  public:
    HomSearcher(const Structure& a, const Structure& b, const HomSearchConfig& cfg)
        : a_(a), b_(b), cfg_(cfg) {
        if (a.sig() != b.sig()) throw argument_error("hom search: signature mismatch");
        na_ = a.order();
        nb_ = b.order();
        if (nb_ > 64) throw capacity_error("hom search: target order above 64 unsupported");
        budget_ = cfg.node_budget < 0 ? default_node_budget() : cfg.node_budget;
        full_mask_ = nb_ == 64 ? ~Mask{0} : ((Mask{1} << nb_) - 1);
        build_tables();
    }

    // Visitor returns false to stop the enumeration.
    void search(const std::function<bool(std::span<const int>)>& visit) {
        if (na_ == 0) {
            visit({});
            return;
        }
        if (nb_ == 0) return;
        if (cfg_.injective && na_ > nb_) return;
        dom_.assign(na_, full_mask_);
        for (int v = 0; v < na_; ++v) {
            dom_[v] &= unary_mask_[v];
            if (!dom_[v]) return;
        }
        assignment_.assign(na_, -1);
        if (propagate_ac() && !initial_ac_pass()) return;
        visit_ = &visit;
        solve();
    }

  private:
    bool propagate_ac() const {
        return cfg_.propagation == HomSearchConfig::Propagation::arc_consistency;
    }

    void build_tables() {
        int sc = a_.sig().symbol_count();
        succ_.assign(sc, {});
        pred_.assign(sc, {});
        loop_ok_.assign(sc, 0);
        unary_mask_.assign(na_, full_mask_);
        adj_.assign(na_, {});
        touching_.assign(na_, {});
        for (int r = 0; r < sc; ++r) {
            const auto& rb = b_.relation(r);
            if (rb.arity == 2) {
                succ_[r].assign(nb_, 0);
                pred_[r].assign(nb_, 0);
                for (int i = 0; i < rb.tuple_count(); ++i) {
                    auto t = rb.tuple(i);
                    succ_[r][t[0]] |= Mask{1} << t[1];
                    pred_[r][t[1]] |= Mask{1} << t[0];
                    if (t[0] == t[1]) loop_ok_[r] |= Mask{1} << t[0];
                }
            }
            // Encoded target tuples for completion checks.
            std::vector<std::uint64_t> codes;
            for (int i = 0; i < rb.tuple_count(); ++i) {
                auto t = rb.tuple(i);
                std::uint64_t key = 0;
                for (int x : t) key = (key << 6) | static_cast<std::uint64_t>(x);
                codes.push_back(key);
            }
            std::sort(codes.begin(), codes.end());
            target_codes_.push_back(std::move(codes));
        }
        for (int r = 0; r < sc; ++r) {
            const auto& ra = a_.relation(r);
            bool via_ac = propagate_ac() && ra.arity == 2;
            for (int i = 0; i < ra.tuple_count(); ++i) {
                auto t = ra.tuple(i);
                if (via_ac) {
                    if (t[0] == t[1]) {
                        unary_mask_[t[0]] &= loop_ok_[r];
                    } else {
                        adj_[t[1]].push_back(BinaryConstraint{t[0], r, true});
                        adj_[t[0]].push_back(BinaryConstraint{t[1], r, false});
                    }
                    continue;
                }
                int idx = static_cast<int>(check_tuples_.size());
                check_tuples_.push_back({r, {t.begin(), t.end()}});
                std::set<int> support(t.begin(), t.end());
                for (int v : support) touching_[v].push_back(idx);
            }
        }
    }

    bool initial_ac_pass() {
        std::vector<int> queue;
        std::vector<bool> queued(na_, true);
        for (int v = 0; v < na_; ++v) queue.push_back(v);
        return run_ac(queue, queued);
    }

    bool run_ac(std::vector<int>& queue, std::vector<bool>& queued) {
        while (!queue.empty()) {
            int w = queue.back();
            queue.pop_back();
            queued[w] = false;
            for (const auto& c : adj_[w]) {
                Mask next = 0;
                Mask cur = dom_[c.other];
                const auto& table = c.forward ? succ_[c.rel] : pred_[c.rel];
                Mask dw = dom_[w];
                while (cur) {
                    int x = std::countr_zero(cur);
                    cur &= cur - 1;
                    if (table[x] & dw) next |= Mask{1} << x;
                }
                if (next != dom_[c.other]) {
                    dom_[c.other] = next;
                    if (!next) return false;
                    if (!queued[c.other]) {
                        queued[c.other] = true;
                        queue.push_back(c.other);
                    }
                }
            }
        }
        return true;
    }

    bool completion_checks(int v) const {
        for (int idx : touching_[v]) {
            const auto& [rel, tuple] = check_tuples_[idx];
            std::uint64_t key = 0;
            bool complete = true;
            for (int u : tuple) {
                if (assignment_[u] < 0) {
                    complete = false;
                    break;
                }
                key = (key << 6) | static_cast<std::uint64_t>(assignment_[u]);
            }
            if (!complete) continue;
            const auto& codes = target_codes_[rel];
            if (!std::binary_search(codes.begin(), codes.end(), key)) return false;
        }
        return true;
    }

    // Returns true when the search should unwind completely.
    bool solve() {
        int v = -1;
        int best_count = nb_ + 1;
        for (int u = 0; u < na_; ++u) {
            if (assignment_[u] >= 0) continue;
            int count = std::popcount(dom_[u]);
            if (count < best_count) {
                best_count = count;
                v = u;
            }
        }
        if (v == -1) {
            bool keep_going = (*visit_)({assignment_.data(), assignment_.size()});
            return !(keep_going && cfg_.enumerate_all);
        }
        Mask options = dom_[v];
        while (options) {
            int x = std::countr_zero(options);
            options &= options - 1;
            if (++nodes_ > budget_)
                throw budget_error("hom search: node budget " + std::to_string(budget_) +
                                   " exhausted");
            auto saved_dom = dom_;
            assignment_[v] = x;
            dom_[v] = Mask{1} << x;
            bool ok = true;
            if (cfg_.injective) {
                for (int u = 0; u < na_ && ok; ++u) {
                    if (u == v || assignment_[u] >= 0) continue;
                    dom_[u] &= ~(Mask{1} << x);
                    if (!dom_[u]) ok = false;
                }
            }
            if (ok) ok = completion_checks(v);
            if (ok && propagate_ac()) {
                std::vector<int> queue{v};
                std::vector<bool> queued(na_, false);
                queued[v] = true;
                ok = run_ac(queue, queued);
            }
            if (ok && solve()) return true;
            dom_ = std::move(saved_dom);
            assignment_[v] = -1;
        }
        return false;
    }

    const Structure& a_;
    const Structure& b_;
    HomSearchConfig cfg_;
    int na_ = 0, nb_ = 0;
    long long budget_ = 0;
    long long nodes_ = 0;
    Mask full_mask_ = 0;

    std::vector<std::vector<Mask>> succ_, pred_;
    std::vector<Mask> loop_ok_;
    std::vector<Mask> unary_mask_;
    std::vector<std::vector<BinaryConstraint>> adj_;
    std::vector<std::pair<int, std::vector<int>>> check_tuples_;
    std::vector<std::vector<int>> touching_;
    std::vector<std::vector<std::uint64_t>> target_codes_;

    std::vector<Mask> dom_;
    std::vector<int> assignment_;
    const std::function<bool(std::span<const int>)>* visit_ = nullptr;
};

} // namespace

std::optional<Homomorphism> hom_exists(const Structure& a, const Structure& b,
                                       const HomSearchConfig& cfg) {
    HomSearchConfig single = cfg;
    single.enumerate_all = false;
    HomSearcher searcher(a, b, single);
    std::optional<Homomorphism> result;
    searcher.search([&](std::span<const int> map) {
        result = Homomorphism{a, b, {map.begin(), map.end()}};
        return false;
    });
    return result;
}

void hom_enumerate(const Structure& a, const Structure& b,
                   const std::function<bool(std::span<const int>)>& visit,
                   const HomSearchConfig& cfg) {
    HomSearcher searcher(a, b, cfg);
    searcher.search(visit);
}

long long hom_count(const Structure& a, const Structure& b, const HomSearchConfig& cfg) {
    HomSearchConfig all = cfg;
    all.enumerate_all = true;
    long long count = 0;
    hom_enumerate(
        a, b,
        [&](std::span<const int>) {
            ++count;
            return true;
        },
        all);
    return count;
}

bool hom_equivalent(const Structure& a, const Structure& b, const HomSearchConfig& cfg) {
    return hom_exists(a, b, cfg).has_value() && hom_exists(b, a, cfg).has_value();
}

CoreResult core(const Structure& a, const HomSearchConfig& cfg, int cap) {
    if (a.order() > cap)
        throw capacity_error("core: order " + std::to_string(a.order()) + " exceeds cap " +
                             std::to_string(cap));
    Structure current = a;
    std::vector<int> overall(a.order());
    std::vector<int> support(a.order());
    for (int i = 0; i < a.order(); ++i) overall[i] = support[i] = i;

    HomSearchConfig all = cfg;
    all.enumerate_all = true;
    while (true) {
        int n = current.order();
        std::optional<std::vector<int>> best;
        int best_size = n + 1;
        hom_enumerate(current, current, [&](std::span<const int> map) {
            Mask image = 0;
            for (int x : map) image |= Mask{1} << x;
            int size = std::popcount(image);
            if (size < n && size < best_size) {
                best_size = size;
                best.emplace(map.begin(), map.end());
                if (size == 1) return false; // cannot improve
            }
            return true;
        }, all);
        if (!best) break;
        std::vector<int> image;
        for (int x = 0; x < n; ++x)
            if (std::find(best->begin(), best->end(), x) != best->end()) image.push_back(x);
        std::vector<int> position(n, -1);
        for (size_t i = 0; i < image.size(); ++i) position[image[i]] = static_cast<int>(i);
        for (int& x : overall) x = position[(*best)[x]];
        std::vector<int> next_support(image.size());
        for (size_t i = 0; i < image.size(); ++i) next_support[i] = support[image[i]];
        support = std::move(next_support);
        current = induced_substructure(current, image);
    }
    return CoreResult{current, Homomorphism{a, current, std::move(overall)}, std::move(support)};
}

int chromatic_number(const Graph& g, const HomSearchConfig& cfg, int cap) {
    if (g.order() == 0) return 0;
    if (g.order() > cap)
        throw capacity_error("chromatic_number: order exceeds cap " + std::to_string(cap));
    Structure src = to_structure(g);
    int start = g.size() > 0 ? 2 : 1;
    for (int k = start; k <= g.order(); ++k)
        if (hom_exists(src, to_structure(complete_graph(k)), cfg)) return k;
    return g.order();
}

int clique_number(const Graph& g, const HomSearchConfig& cfg, int cap) {
    if (g.order() == 0) return 0;
    if (g.order() > cap)
        throw capacity_error("clique_number: order exceeds cap " + std::to_string(cap));
    Structure target = to_structure(g);
    int best = 1;
    for (int k = 2; k <= g.order(); ++k) {
        if (!hom_exists(to_structure(complete_graph(k)), target, cfg)) break;
        best = k;
    }
    return best;
}

std::optional<Homomorphism> hom_exists(const Graph& a, const Graph& b,
                                       const HomSearchConfig& cfg) {
    return hom_exists(to_structure(a), to_structure(b), cfg);
}

bool hom_equivalent(const Graph& a, const Graph& b, const HomSearchConfig& cfg) {
    return hom_equivalent(to_structure(a), to_structure(b), cfg);
}

bool subgraph_embeds(const Graph& a, const Graph& b, const HomSearchConfig& cfg) {
    HomSearchConfig injective = cfg;
    injective.injective = true;
    return hom_exists(to_structure(a), to_structure(b), injective).has_value();
}

} // namespace homlab
