#ifndef HOMLAB_STRUCTURE_HPP
#define HOMLAB_STRUCTURE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homlab/graph.hpp"

namespace homlab {

inline constexpr int kMaxArity = 8;

struct Symbol {
    std::string name;
    int arity = 0;
    bool operator==(const Symbol&) const = default;
};

// Relational signature: ordered list of symbols with unique names and
// arities in 1..kMaxArity.
class Signature {
  public:
    Signature() = default;
    explicit Signature(std::vector<Symbol> symbols);

    int symbol_count() const { return static_cast<int>(symbols_.size()); }
    const Symbol& symbol(int i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    int index_of(const std::string& name) const; // -1 when absent
    int max_arity() const;

    bool operator==(const Signature&) const = default;

  private:
    std::vector<Symbol> symbols_;
};

// One relation: tuples stored flat (concatenated), lexicographically sorted
// and deduplicated.  Tuple i is flat[i*arity .. (i+1)*arity).
struct Relation {
    int arity = 0;
    std::vector<int> flat;

    int tuple_count() const { return arity == 0 ? 0 : static_cast<int>(flat.size()) / arity; }
    std::span<const int> tuple(int i) const {
        return {flat.data() + static_cast<size_t>(i) * arity, static_cast<size_t>(arity)};
    }
};

// A block of a structure: one tuple of one relation.
struct Block {
    int symbol = 0; // index into the signature
    std::vector<int> tuple;
};

// Finite sigma-structure: universe 0..n-1 plus one tuple set per symbol.
// Immutable after construction.
class Structure {
  public:
    Structure() = default;
    Structure(Signature sig, int n, std::vector<Relation> relations);

    const Signature& sig() const { return sig_; }
    int order() const { return n_; }
    const Relation& relation(int i) const { return relations_[i]; }
    const std::vector<Relation>& relations() const { return relations_; }
    int total_tuples() const;
    std::vector<Block> blocks() const;
    bool has_tuple(int rel, std::span<const int> tuple) const;

    bool operator==(const Structure& other) const {
        return sig_ == other.sig_ && n_ == other.n_ && relations_count_equal(other);
    }

  private:
    bool relations_count_equal(const Structure& other) const;
    Signature sig_;
    int n_ = 0;
    std::vector<Relation> relations_;
};

// Total mapping between universes, carried with its endpoints so validity is
// checkable independently of whatever search produced it.
struct Homomorphism {
    Structure source;
    Structure target;
    std::vector<int> map;

    bool valid() const;
};

Homomorphism compose(const Homomorphism& f, const Homomorphism& g); // g after f

// --- graph <-> structure encodings ---------------------------------------

const Signature& graph_signature();   // one binary symbol "E"
const Signature& digraph_signature(); // one binary symbol "A"

// Hom-faithful encoding: each edge {u,v} contributes both (u,v) and (v,u).
Structure to_structure(const Graph& g);
// Each arc as-is.
Structure to_structure(const Digraph& g);
// One tuple (min,max) per edge.  Under this encoding the incidence graph of
// an encoded graph is its 1-subdivision; under the symmetric encoding each
// edge would yield two blocks.
Structure to_structure_oriented(const Graph& g);

// Inverse of to_structure where the shape allows it.
std::optional<Graph> as_graph(const Structure& s);
std::optional<Digraph> as_digraph(const Structure& s);

// --- constructive operations ----------------------------------------------

Structure disjoint_union(const Structure& a, const Structure& b);
Structure induced_substructure(const Structure& a, const std::vector<int>& subset);
Structure categorical_product(const Structure& a, const Structure& b,
                              int vertex_budget = kDefaultVertexBudget);
Graph gaifman(const Structure& a);
Graph incidence(const Structure& a);

// Merge u and v; tuples whose image contains a repeated entry are dropped
// (the analogue of dropping loops in the graph case).
Structure identify_vertices(const Structure& a, int u, int v);
std::vector<Structure> pre_set(const Structure& a);

bool is_connected(const Structure& a); // Gaifman-connected, non-empty
int component_count(const Structure& a);

} // namespace homlab

#endif
