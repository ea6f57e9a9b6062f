#ifndef HOMLAB_FAMILIES_HPP
#define HOMLAB_FAMILIES_HPP

#include "homlab/graph.hpp"

namespace homlab {

Graph complete_graph(int k);
Graph edgeless_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph path_graph(int n);   // path on n vertices
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph star_graph(int leaves);

Digraph directed_path(int n);  // arcs 0->1->...->n-1
Digraph directed_cycle(int n); // n >= 2
Digraph transitive_tournament(int k);

} // namespace homlab

#endif
