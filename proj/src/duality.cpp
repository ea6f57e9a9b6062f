#include "homlab/duality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "homlab/canonical.hpp"
#include "homlab/errors.hpp"
#include "homlab/families.hpp"

namespace homlab {

ClassSample ClassSample::make(std::vector<Structure> members, ClassFlags flags,
                              std::string description) {
    std::map<std::string, Structure> dedup;
    for (auto& m : members) {
        auto [code, labeling] =
            canonical_code_and_labeling(m, std::max(kDefaultCanonicalCap, m.order()));
        if (!dedup.count(code)) dedup.emplace(std::move(code), apply_labeling(m, labeling));
    }
    ClassSample sample;
    sample.flags = flags;
    sample.description = std::move(description);
    // canonical order: by order first, then code
    std::vector<std::pair<std::pair<int, std::string>, Structure>> sorted;
    for (auto& [code, s] : dedup) sorted.push_back({{s.order(), code}, std::move(s)});
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [key, s] : sorted) sample.members.push_back(std::move(s));
    return sample;
}

Verdict verify_duality(const DualityInstance& inst, const ClassSample& universe,
                       const HomSearchConfig& cfg) {
    for (const auto& f : inst.family)
        if (f.sig() != inst.dual.sig())
            throw argument_error("verify_duality: family/dual signature mismatch");

    Verdict verdict;
    bool avoids = true;
    for (const auto& f : inst.family)
        if (hom_exists(f, inst.dual, cfg)) avoids = false;
    verdict.family_avoids_dual = avoids;

    for (const auto& g : universe.members) {
        if (!inst.family.empty() && g.sig() != inst.family.front().sig())
            throw argument_error("verify_duality: sample member signature mismatch");
        bool forbidden = false;
        for (const auto& f : inst.family)
            if (hom_exists(f, g, cfg)) {
                forbidden = true;
                break;
            }
        auto to_dual = hom_exists(g, inst.dual, cfg);
        if (forbidden && to_dual) {
            verdict.holds = false;
            verdict.direction = "forbidden-but-colorable";
            verdict.counterexample = g;
            verdict.witness = to_dual;
            return verdict;
        }
        if (!forbidden && !to_dual) {
            verdict.holds = false;
            verdict.direction = "unforbidden-but-uncolorable";
            verdict.counterexample = g;
            return verdict;
        }
    }
    return verdict;
}

DualityInstance ghrv_instance(int k) {
    if (k < 1) throw argument_error("ghrv_instance: k must be positive");
    DualityInstance inst;
    inst.family.push_back(to_structure(directed_path(k + 1)));
    inst.dual = to_structure(transitive_tournament(k));
    return inst;
}

namespace {

std::vector<Structure> dedup_family(const std::vector<Structure>& family) {
    std::map<std::string, Structure> dedup;
    for (const auto& f : family) {
        auto [code, labeling] =
            canonical_code_and_labeling(f, std::max(kDefaultCanonicalCap, f.order()));
        if (!dedup.count(code)) dedup.emplace(std::move(code), apply_labeling(f, labeling));
    }
    std::vector<Structure> out;
    for (auto& [code, s] : dedup) out.push_back(std::move(s));
    return out;
}

} // namespace

DualityInstance minimize_family(const DualityInstance& inst, const ClassSample& universe,
                                const HomSearchConfig& cfg) {
    if (!verify_duality(inst, universe, cfg).holds)
        throw argument_error("minimize_family: instance does not verify over the sample");

    DualityInstance current{dedup_family(inst.family), inst.dual};
    bool changed = true;
    while (changed) {
        changed = false;

        // Rule 1: replace members by their cores.
        std::vector<Structure> cored;
        for (const auto& f : current.family) {
            CoreResult cr = core(f, cfg);
            if (cr.core.order() != f.order()) changed = true;
            cored.push_back(std::move(cr.core));
        }
        auto deduped = dedup_family(cored);
        if (deduped.size() != current.family.size()) changed = true;
        current.family = std::move(deduped);

        // Rule 2: drop redundant members, canonical order.
        for (size_t i = 0; i < current.family.size();) {
            DualityInstance candidate = current;
            candidate.family.erase(candidate.family.begin() + i);
            if (verify_duality(candidate, universe, cfg).holds) {
                current = std::move(candidate);
                changed = true;
            } else {
                ++i;
            }
        }

        // Rule 3: replace a member by Pre(member) when the result verifies.
        for (size_t i = 0; i < current.family.size(); ++i) {
            DualityInstance candidate = current;
            Structure member = candidate.family[i];
            candidate.family.erase(candidate.family.begin() + i);
            auto pre = pre_set(member);
            candidate.family.insert(candidate.family.end(), pre.begin(), pre.end());
            candidate.family = dedup_family(candidate.family);
            if (verify_duality(candidate, universe, cfg).holds) {
                current = std::move(candidate);
                changed = true;
                break; // restart the rule cascade on the new family
            }
        }
    }
    return current;
}

Verdict connectivity_check(const DualityInstance& inst, const ClassSample& universe,
                           const HomSearchConfig& cfg) {
    if (!universe.flags.addable && !universe.flags.monotone)
        throw argument_error("connectivity_check: sample is flagged neither addable nor "
                             "monotone, no connectivity lemma applies");

    std::set<std::string> sample_codes;
    if (universe.flags.monotone)
        for (const auto& m : universe.members)
            sample_codes.insert(canonical_code(m, std::max(kDefaultCanonicalCap, m.order())));

    for (const auto& f : inst.family) {
        if (!is_connected(f)) {
            Verdict verdict;
            verdict.holds = false;
            verdict.direction = "disconnected-member";
            // The lemma's constructive pair: G1 accepts one part but not the
            // other, G2 the reverse; their union then beats the dual.
            Graph gf = gaifman(f);
            auto comp = gf.component_ids();
            std::vector<int> part1, part2;
            for (int v = 0; v < f.order(); ++v)
                (comp[v] == 0 ? part1 : part2).push_back(v);
            Structure f1 = induced_substructure(f, part1);
            Structure f2 = induced_substructure(f, part2);
            for (const auto& g1 : universe.members) {
                if (hom_exists(f1, g1, cfg) || !hom_exists(f2, g1, cfg)) continue;
                for (const auto& g2 : universe.members) {
                    if (!hom_exists(f1, g2, cfg) || hom_exists(f2, g2, cfg)) continue;
                    Structure pair = disjoint_union(g1, g2);
                    auto witness = hom_exists(f, pair, cfg);
                    verdict.counterexample = std::move(pair);
                    if (witness) verdict.witness = witness;
                    return verdict;
                }
            }
            verdict.counterexample = f;
            return verdict;
        }
        if (universe.flags.monotone) {
            auto code = canonical_code(f, std::max(kDefaultCanonicalCap, f.order()));
            if (!sample_codes.count(code)) {
                Verdict verdict;
                verdict.holds = false;
                verdict.direction = "member-outside-sample";
                verdict.counterexample = f;
                return verdict;
            }
            if (auto witness = hom_exists(f, inst.dual, cfg)) {
                Verdict verdict;
                verdict.holds = false;
                verdict.direction = "member-maps-to-dual";
                verdict.counterexample = f;
                verdict.witness = witness;
                return verdict;
            }
        }
    }
    return Verdict::ok();
}

Structure dual_construct(const std::vector<Structure>& family, const ClassSample& universe,
                         int t, const HomSearchConfig& cfg) {
    if (family.empty()) throw argument_error("dual_construct: empty family");
    const Signature& sig = family.front().sig();
    int max_member = 0;
    for (const auto& f : family) {
        if (f.sig() != sig) throw argument_error("dual_construct: signature mismatch");
        if (!is_connected(f))
            throw argument_error("dual_construct: family members must be connected");
        max_member = std::max(max_member, f.order());
    }
    if (t < max_member)
        throw argument_error("dual_construct: t must be at least the largest member order");

    ThetaConfig theta_cfg;
    theta_cfg.search = cfg;
    std::vector<Structure> approximations;
    std::set<std::string> seen;
    for (const auto& a : universe.members) {
        bool avoided = true;
        for (const auto& f : family)
            if (hom_exists(f, a, cfg)) {
                avoided = false;
                break;
            }
        if (!avoided) continue;
        auto res = theta_oracle(a, t, a.order(), theta_cfg);
        if (!res)
            throw internal_error("dual_construct: oracle found no approximation though the "
                                 "structure approximates itself");
        Structure cand = std::move(res->approx);
        auto code = canonical_code(cand, std::max(kDefaultCanonicalCap, cand.order()));
        if (!seen.insert(code).second) continue;
        bool equivalent = false;
        for (const auto& existing : approximations)
            if (hom_equivalent(cand, existing, cfg)) {
                equivalent = true;
                break;
            }
        if (!equivalent) approximations.push_back(std::move(cand));
    }

    Structure dual(sig, 0, [&] {
        std::vector<Relation> rels;
        for (const auto& sym : sig.symbols()) rels.push_back(Relation{sym.arity, {}});
        return rels;
    }());
    for (const auto& part : approximations) dual = disjoint_union(dual, part);

    for (const auto& f : family)
        if (hom_exists(f, dual, cfg))
            throw internal_error("dual_construct: a family member maps to the dual");
    Verdict check = verify_duality(DualityInstance{family, dual}, universe, cfg);
    if (!check.holds)
        throw internal_error("dual_construct: constructed dual does not verify (" +
                             check.direction + ")");
    return dual;
}

Structure product_dual(const std::vector<Structure>& family_duals, int vertex_budget) {
    if (family_duals.empty()) throw argument_error("product_dual: empty input");
    Structure out = family_duals.front();
    for (size_t i = 1; i < family_duals.size(); ++i)
        out = categorical_product(out, family_duals[i], vertex_budget);
    return out;
}

} // namespace homlab
