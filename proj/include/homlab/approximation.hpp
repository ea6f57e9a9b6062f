#ifndef HOMLAB_APPROXIMATION_HPP
#define HOMLAB_APPROXIMATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlab/enumerate.hpp"
#include "homlab/hom.hpp"
#include "homlab/sparsity.hpp"
#include "homlab/structure.hpp"
#include "homlab/verdict.hpp"

namespace homlab {

// A t-approximation B of A: A -> B and every induced substructure of B of
// order < t has a homomorphism to A.  exact means the order equals
// Theta^t(A), i.e. it was produced by the minimality oracle.
struct ApproxResult {
    Structure approx;
    Homomorphism forward; // A -> approx
    int t = 0;
    bool exact = false;
};

struct ThetaConfig {
    StructureEnumLimits limits;
    HomSearchConfig search;
};

// Brute-force oracle for Theta^t: enumerates candidate structures over A's
// signature by increasing order (lexicographic within an order) and returns
// the first t-approximation.  nullopt when none exists within max_order.
std::optional<ApproxResult> theta_oracle(const Structure& a, int t, int max_order,
                                         const ThetaConfig& cfg = {});

// Checks that b is a t-approximation of a; on failure the counterexample is
// the offending induced substructure of b.  Only induced substructures are
// enumerated: any substructure maps into the induced one on the same
// universe subset, so the homomorphism condition carries over.
Verdict is_t_approximation(const Structure& a, const Structure& b, int t,
                           const HomSearchConfig& cfg = {});

// Per-subset retraction record: f_I maps the substructure induced by colors
// in I onto its core.  vertices and image hold global universe ids.
struct SubsetRetraction {
    std::vector<int> colors;
    std::vector<int> vertices;
    std::vector<int> image; // image[i] = f_I(vertices[i])
};

struct QuotientTrace {
    TdColoring coloring;
    std::vector<SubsetRetraction> retractions;
    std::vector<std::vector<int>> classes; // partition of the universe by ~

    std::string to_text() const;
};

// The constructive quotient: a valid low tree-depth coloring of Gaifman(A),
// core retractions f_I per color subset, the equivalence x ~ y iff same color
// and all applicable f_I agree, and the quotient structure on the classes.
// Requires t >= max arity of A's signature.  The result is verified to be a
// t-approximation before returning; a verification failure is an
// internal_error.
std::pair<ApproxResult, QuotientTrace> quotient_approximation(const Structure& a, int t,
                                                              const HomSearchConfig& cfg = {});

} // namespace homlab

#endif
