#include "homlab/approximation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "homlab/canonical.hpp"
#include "homlab/errors.hpp"

namespace homlab {

namespace {

std::string tier_cache_key(const Signature& sig, const StructureEnumLimits& limits) {
    std::string key;
    for (const auto& sym : sig.symbols()) {
        key += sym.name;
        key += '/';
        key += std::to_string(sym.arity);
        key += ';';
    }
    key += "cap=" + std::to_string(limits.tuple_cap);
    return key;
}

const std::vector<Structure>& cached_tier(const Signature& sig, int order,
                                          const StructureEnumLimits& limits) {
    static std::map<std::string, std::map<int, std::vector<Structure>>> cache;
    static std::mutex mutex;
    std::scoped_lock lock(mutex);
    auto& tiers = cache[tier_cache_key(sig, limits)];
    auto it = tiers.find(order);
    if (it == tiers.end())
        it = tiers.emplace(order, all_structures_of_order(sig, order, limits)).first;
    return it->second;
}

// All nonempty subsets of 0..n-1 of the given size, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int n, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(current.size()) == size) {
            out.push_back(current);
            return;
        }
        for (int i = from; i < n; ++i) {
            current.push_back(i);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

Verdict is_t_approximation(const Structure& a, const Structure& b, int t,
                           const HomSearchConfig& cfg) {
    if (a.sig() != b.sig())
        throw argument_error("is_t_approximation: signature mismatch");
    Verdict verdict;
    auto forward = hom_exists(a, b, cfg);
    if (!forward) {
        verdict.holds = false;
        verdict.direction = "no-forward-hom";
        return verdict;
    }
    verdict.witness = forward;
    for (int size = 1; size < t && size <= b.order(); ++size) {
        for (const auto& subset : subsets_of_size(b.order(), size)) {
            Structure sub = induced_substructure(b, subset);
            if (!hom_exists(sub, a, cfg)) {
                verdict.holds = false;
                verdict.direction = "substructure-escapes";
                verdict.counterexample = std::move(sub);
                verdict.witness.reset();
                return verdict;
            }
        }
    }
    return verdict;
}

std::optional<ApproxResult> theta_oracle(const Structure& a, int t, int max_order,
                                         const ThetaConfig& cfg) {
    if (t < 1) throw argument_error("theta_oracle: t must be positive");
    if (a.order() == 0)
        return ApproxResult{a, Homomorphism{a, a, {}}, t, true};
    for (int order = 1; order <= max_order; ++order) {
        for (const Structure& b : cached_tier(a.sig(), order, cfg.limits)) {
            // Small induced substructures first: they reject most candidates
            // (any loop dies against a loop-free a at t >= 2) before the
            // more expensive forward search runs.
            bool ok = true;
            for (int size = 1; size < t && size <= b.order() && ok; ++size)
                for (const auto& subset : subsets_of_size(b.order(), size)) {
                    if (!hom_exists(induced_substructure(b, subset), a, cfg.search)) {
                        ok = false;
                        break;
                    }
                }
            if (!ok) continue;
            auto forward = hom_exists(a, b, cfg.search);
            if (!forward) continue;
            return ApproxResult{b, std::move(*forward), t, true};
        }
    }
    return std::nullopt;
}

std::string QuotientTrace::to_text() const {
    std::ostringstream out;
    out << "colors: " << coloring.color_count << " (t=" << coloring.t << ")\n";
    out << "coloring:";
    for (int c : coloring.colors) out << ' ' << c;
    out << '\n';
    for (const auto& r : retractions) {
        out << "subset {";
        for (size_t i = 0; i < r.colors.size(); ++i) out << (i ? "," : "") << r.colors[i];
        out << "} retraction:";
        for (size_t i = 0; i < r.vertices.size(); ++i)
            out << ' ' << r.vertices[i] << "->" << r.image[i];
        int core_size = static_cast<int>(
            std::set<int>(r.image.begin(), r.image.end()).size());
        out << " core-size: " << core_size << '\n';
    }
    out << "classes:";
    for (const auto& cls : classes) {
        out << " {";
        for (size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << cls[i];
        out << '}';
    }
    out << '\n';
    return out.str();
}

std::pair<ApproxResult, QuotientTrace> quotient_approximation(const Structure& a, int t,
                                                              const HomSearchConfig& cfg) {
    if (t < a.sig().max_arity())
        throw argument_error("quotient_approximation: t must be at least the maximum arity");
    if (a.order() == 0)
        return {ApproxResult{a, Homomorphism{a, a, {}}, t, false}, QuotientTrace{}};

    Graph gaifman_graph = gaifman(a);
    TdColoring coloring = low_td_coloring(gaifman_graph, t);
    int n_colors = coloring.color_count;

    // Exactly-t subsets when enough colors exist; with fewer colors every
    // nonempty subset participates (degenerate-case padding).
    std::vector<std::vector<int>> subsets;
    if (n_colors >= t) {
        subsets = subsets_of_size(n_colors, t);
    } else {
        for (int size = 1; size <= n_colors; ++size) {
            auto tier = subsets_of_size(n_colors, size);
            subsets.insert(subsets.end(), tier.begin(), tier.end());
        }
    }

    QuotientTrace trace;
    trace.coloring = coloring;
    int n = a.order();
    // f_by_subset[s][v]: image of vertex v under f_I for subset s (-1 when v
    // is outside A_I).
    std::vector<std::vector<int>> f_by_subset(subsets.size(), std::vector<int>(n, -1));
    for (size_t s = 0; s < subsets.size(); ++s) {
        const auto& colors = subsets[s];
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (std::find(colors.begin(), colors.end(), coloring.colors[v]) != colors.end())
                members.push_back(v);
        Structure a_i = induced_substructure(a, members);
        CoreResult cr = core(a_i, cfg, std::max(kDefaultCoreCap, a_i.order()));
        SubsetRetraction record;
        record.colors = colors;
        record.vertices = members;
        record.image.resize(members.size());
        for (size_t i = 0; i < members.size(); ++i) {
            int image_local = cr.support[cr.retraction.map[i]];
            record.image[i] = members[image_local];
            f_by_subset[s][members[i]] = members[image_local];
        }
        trace.retractions.push_back(std::move(record));
    }

    // x ~ y iff same color and every applicable f_I agrees.
    std::map<std::vector<int>, int> class_of_signature;
    std::vector<int> class_of(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> sig{coloring.colors[v]};
        for (size_t s = 0; s < subsets.size(); ++s)
            if (f_by_subset[s][v] != -1) {
                sig.push_back(static_cast<int>(s));
                sig.push_back(f_by_subset[s][v]);
            }
        auto it = class_of_signature.find(sig);
        if (it == class_of_signature.end()) {
            int id = static_cast<int>(trace.classes.size());
            class_of_signature.emplace(std::move(sig), id);
            trace.classes.push_back({v});
            class_of[v] = id;
        } else {
            class_of[v] = it->second;
            trace.classes[it->second].push_back(v);
        }
    }

    // Representative independence: all members of a class must agree under
    // every applicable retraction (this re-checks the ~ definition).
    for (const auto& cls : trace.classes)
        for (size_t s = 0; s < subsets.size(); ++s) {
            int expected = f_by_subset[s][cls[0]];
            for (int v : cls)
                if (f_by_subset[s][v] != expected)
                    throw internal_error("quotient_approximation: class members disagree "
                                         "under a retraction");
        }

    int n_classes = static_cast<int>(trace.classes.size());
    std::vector<Relation> rels;
    for (int r = 0; r < a.sig().symbol_count(); ++r) {
        int arity = a.sig().symbol(r).arity;
        Relation out{arity, {}};
        std::vector<int> tuple(arity, 0);
        std::vector<int> rep(arity), image(arity);
        while (true) {
            // membership: for every applicable subset I, the f_I image of the
            // representatives is a tuple of a.
            bool applicable_found = false;
            bool member = true;
            for (int j = 0; j < arity; ++j) rep[j] = trace.classes[tuple[j]][0];
            for (size_t s = 0; s < subsets.size() && member; ++s) {
                bool applicable = true;
                for (int j = 0; j < arity; ++j)
                    if (f_by_subset[s][rep[j]] == -1) {
                        applicable = false;
                        break;
                    }
                if (!applicable) continue;
                applicable_found = true;
                for (int j = 0; j < arity; ++j) image[j] = f_by_subset[s][rep[j]];
                if (!a.has_tuple(r, {image.data(), image.size()})) member = false;
            }
            if (member && applicable_found)
                out.flat.insert(out.flat.end(), tuple.begin(), tuple.end());
            int pos = arity - 1;
            while (pos >= 0 && tuple[pos] == n_classes - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            ++tuple[pos];
        }
        rels.push_back(std::move(out));
    }
    Structure quotient(a.sig(), n_classes, std::move(rels));

    Homomorphism forward{a, quotient, class_of};
    if (!forward.valid())
        throw internal_error("quotient_approximation: projection is not a homomorphism");
    Verdict check = is_t_approximation(a, quotient, t, cfg);
    if (!check.holds)
        throw internal_error("quotient_approximation: output failed the t-approximation "
                             "check (" + check.direction + ")");
    return {ApproxResult{std::move(quotient), std::move(forward), t, false}, std::move(trace)};
}

} // namespace homlab
