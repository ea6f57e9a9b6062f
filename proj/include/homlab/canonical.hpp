#ifndef HOMLAB_CANONICAL_HPP
#define HOMLAB_CANONICAL_HPP

#include <string>
#include <vector>

#include "homlab/graph.hpp"
#include "homlab/structure.hpp"

namespace homlab {

inline constexpr int kDefaultCanonicalCap = 10;

// Canonical byte string: equal codes iff isomorphic structures.  Ordered
// partition refinement with backtracking over individualizations; the code is
// the minimum serialization over the leaves of the refinement tree.
std::string canonical_code(const Structure& s, int cap = kDefaultCanonicalCap);

// The relabeling that realizes the canonical code (new id of vertex v is
// labeling[v]).
std::vector<int> canonical_labeling(const Structure& s, int cap = kDefaultCanonicalCap);

std::pair<std::string, std::vector<int>>
canonical_code_and_labeling(const Structure& s, int cap = kDefaultCanonicalCap);

Structure apply_labeling(const Structure& s, const std::vector<int>& labeling);

// Graphs and digraphs are coded through their structure encodings.
std::string canonical_code(const Graph& g, int cap = kDefaultCanonicalCap);
std::string canonical_code(const Digraph& g, int cap = kDefaultCanonicalCap);

bool isomorphic(const Structure& a, const Structure& b, int cap = kDefaultCanonicalCap);
bool isomorphic(const Graph& a, const Graph& b, int cap = kDefaultCanonicalCap);

} // namespace homlab

#endif
