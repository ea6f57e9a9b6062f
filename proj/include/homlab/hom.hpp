#ifndef HOMLAB_HOM_HPP
#define HOMLAB_HOM_HPP

#include <functional>
#include <optional>
#include <span>

#include "homlab/structure.hpp"

namespace homlab {

// Default search budget: HOMLAB_BUDGET env var when set, otherwise 50M nodes.
long long default_node_budget();

struct HomSearchConfig {
    long long node_budget = -1; // -1: use default_node_budget()
    // When false the search stops at the first witness; hom_enumerate and
    // hom_count need it set (hom_count forces it).
    bool enumerate_all = false;
    enum class Propagation { none, arc_consistency };
    Propagation propagation = Propagation::arc_consistency;
    bool injective = false; // restrict to injective maps (subgraph embedding)
};

// Decides A -> B and returns a witness.  Deterministic for a fixed config:
// most-constrained variable first, values in ascending order, arc-consistency
// propagation on binary symbols, higher-arity tuples checked once their
// support is assigned.  Throws budget_error when the node budget runs out
// (distinct from "no homomorphism").
std::optional<Homomorphism> hom_exists(const Structure& a, const Structure& b,
                                       const HomSearchConfig& cfg = {});

// Visits homomorphisms A -> B; the visitor returns false to stop early.
// Visits them all only when cfg.enumerate_all is set, otherwise just the
// first one found.
void hom_enumerate(const Structure& a, const Structure& b,
                   const std::function<bool(std::span<const int>)>& visit,
                   const HomSearchConfig& cfg);

long long hom_count(const Structure& a, const Structure& b,
                    const HomSearchConfig& cfg = {});

bool hom_equivalent(const Structure& a, const Structure& b,
                    const HomSearchConfig& cfg = {});

inline constexpr int kDefaultCoreCap = 9;

struct CoreResult {
    Structure core;
    Homomorphism retraction; // input onto the core, composed across rounds
    // The core is an induced substructure of the input; core vertex k sits on
    // input vertex support[k].  Composing retraction with support gives a
    // retracting self-map of the input.
    std::vector<int> support;
};

// Iteratively finds a non-surjective endomorphism (smallest image, first in
// deterministic search order) and retracts until every endomorphism is an
// automorphism.
CoreResult core(const Structure& a, const HomSearchConfig& cfg = {},
                int cap = kDefaultCoreCap);

inline constexpr int kDefaultChromaticCap = 12;

// Minimum k with G -> K_k.
int chromatic_number(const Graph& g, const HomSearchConfig& cfg = {},
                     int cap = kDefaultChromaticCap);
// Maximum k with K_k -> G.
int clique_number(const Graph& g, const HomSearchConfig& cfg = {},
                  int cap = kDefaultChromaticCap);

// Graph conveniences (symmetric encoding on both sides).
std::optional<Homomorphism> hom_exists(const Graph& a, const Graph& b,
                                       const HomSearchConfig& cfg = {});
bool hom_equivalent(const Graph& a, const Graph& b, const HomSearchConfig& cfg = {});

// Injective homomorphism test; for simple graphs this is exactly
// "a is isomorphic to a subgraph of b".
bool subgraph_embeds(const Graph& a, const Graph& b, const HomSearchConfig& cfg = {});

} // namespace homlab

#endif
