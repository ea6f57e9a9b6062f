#ifndef HOMLAB_ENUMERATE_HPP
#define HOMLAB_ENUMERATE_HPP

#include <vector>

#include "homlab/graph.hpp"
#include "homlab/structure.hpp"

namespace homlab {

// Isomorphism-free enumerations.  Deterministic: results are canonical
// representatives sorted by canonical code within each order.  Built
// incrementally (extend each (n-1)-vertex representative by one vertex with
// every attachment) and cached behind a mutex.
const std::vector<Graph>& all_graphs_of_order(int n);
std::vector<Graph> all_graphs_up_to(int max_order);

const std::vector<Digraph>& all_digraphs_of_order(int n);
std::vector<Digraph> all_digraphs_up_to(int max_order);

struct StructureEnumLimits {
    // Per-relation tuple cap; -1 means unlimited.
    int tuple_cap = -1;
    // Guard on the number of candidate tuples through the newest vertex
    // (extension subsets are 2^count); exceeding it is a capacity error.
    int max_new_tuples = 16;
};

// All structures over sig with universe size exactly n, up to isomorphism.
std::vector<Structure> all_structures_of_order(const Signature& sig, int n,
                                               const StructureEnumLimits& limits = {});

} // namespace homlab

#endif
