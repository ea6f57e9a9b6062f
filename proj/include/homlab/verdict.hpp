#ifndef HOMLAB_VERDICT_HPP
#define HOMLAB_VERDICT_HPP

#include <optional>
#include <string>

#include "homlab/structure.hpp"

namespace homlab {

// Outcome of a verification: Holds, or Fails with a concrete counterexample
// and, when one exists, a witness mapping for the offending direction.
struct Verdict {
    bool holds = true;
    std::optional<Structure> counterexample;
    std::optional<Homomorphism> witness;
    std::string direction; // which implication/property failed; empty when holds

    // Filled by duality verification: whether no family member maps to the dual.
    std::optional<bool> family_avoids_dual;

    static Verdict ok() { return Verdict{}; }
};

} // namespace homlab

#endif
