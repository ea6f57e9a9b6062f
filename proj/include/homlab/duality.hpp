#ifndef HOMLAB_DUALITY_HPP
#define HOMLAB_DUALITY_HPP

#include <string>
#include <vector>

#include "homlab/approximation.hpp"
#include "homlab/hom.hpp"
#include "homlab/structure.hpp"
#include "homlab/verdict.hpp"

namespace homlab {

// A candidate finite duality: forbidden family F and dual D, same signature.
struct DualityInstance {
    std::vector<Structure> family;
    Structure dual;
};

struct ClassFlags {
    bool hereditary = false;
    bool addable = false;
    bool monotone = false;
    bool topologically_closed = false;
};

// Explicit finite stand-in for an infinite class.  Members are deduplicated
// by canonical code and kept in canonical order; flags are caller assertions
// about the class the sample represents (they select minimization rules and
// are never silently trusted for soundness).
struct ClassSample {
    std::vector<Structure> members;
    ClassFlags flags;
    std::string description;

    static ClassSample make(std::vector<Structure> members, ClassFlags flags,
                            std::string description);
};

// Checks, for every G in the sample, (exists F in family: F -> G) iff
// (G does not map to dual).  First failure in canonical sample order is
// returned with a full witness; family_avoids_dual reports whether no family
// member maps to the dual.
Verdict verify_duality(const DualityInstance& inst, const ClassSample& universe,
                       const HomSearchConfig& cfg = {});

// Gallai-Hasse-Roy-Vitaver instance: family = {directed path on k+1
// vertices}, dual = transitive tournament on k vertices.
DualityInstance ghrv_instance(int k);

// Reduces the family to a fixed point of three rules, re-verifying against
// the sample after each step: replace members by their cores, drop redundant
// members (canonical order), replace a member F by Pre(F) when the result
// still verifies.
DualityInstance minimize_family(const DualityInstance& inst, const ClassSample& universe,
                                const HomSearchConfig& cfg = {});

// For addable samples asserts every family member is connected; for monotone
// samples additionally that members appear in the sample and avoid the dual.
// A disconnected member is reported together with the lemma's constructive
// pair G1 + G2 when one exists in the sample.
Verdict connectivity_check(const DualityInstance& inst, const ClassSample& universe,
                           const HomSearchConfig& cfg = {});

// Theorem-style dual: the disjoint union of the t-approximations of all
// sample members avoided by the whole family (deduplicated up to
// isomorphism and hom-equivalence); the empty structure when none survive.
// Postconditions (no family member maps to the result; the duality verifies
// over the sample) are checked and violations throw internal_error.
Structure dual_construct(const std::vector<Structure>& family, const ClassSample& universe,
                         int t, const HomSearchConfig& cfg = {});

// Categorical product of the given duals, in the given order.
Structure product_dual(const std::vector<Structure>& family_duals,
                       int vertex_budget = kDefaultVertexBudget);

} // namespace homlab

#endif
