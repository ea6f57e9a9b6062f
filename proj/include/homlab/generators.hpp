#ifndef HOMLAB_GENERATORS_HPP
#define HOMLAB_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homlab/duality.hpp"
#include "homlab/graph.hpp"
#include "homlab/verdict.hpp"

namespace homlab {

struct GeneratorSpec {
    enum class Kind {
        all_graphs,
        all_digraphs,
        subdivision_closure,
        bounded_treedepth,
        random_high_girth,
    };
    Kind kind = Kind::all_graphs;
    int max_order = 0;

    // subdivision_closure
    std::vector<Graph> base;
    std::string base_names;
    int q = 0;
    // bounded_treedepth
    int td_bound = 0;
    // random_high_girth
    int n = 0;
    int girth_target = 0;
    int trials = 0;
    std::optional<std::uint64_t> seed; // mandatory for randomized kinds
    double edge_c = 3.0;

    // Parses "all_graphs:max=5", "subdiv:base=K3,q=2,max=9",
    // "td:bound=2,max=5", "rhg:n=20,g=6,trials=100,seed=42".
    static GeneratorSpec parse(const std::string& text);
    std::string to_string() const;
};

// Deterministic isomorphism-free sample for the spec, with flags set per
// kind.  Samples are cumulative over orders 1..max_order.
ClassSample enumerate_sample(const GeneratorSpec& spec);

// Erdos-style search: per trial, sample G(n, c/n), delete one edge from each
// detected short cycle (BFS order) until girth >= g, and keep the candidate
// with the largest chromatic number (exact within caps, degeneracy-greedy
// beyond).  Deterministic given the seed.
std::optional<Graph> random_high_girth(int n, int g, int trials, std::uint64_t seed,
                                       double edge_c = 3.0);

struct SubdivisionCertificate {
    Graph base;
    std::vector<int> lengths; // per base edge, in base.edges() order
};

// All <=(q+1)-length-per-edge subdivisions of the base graphs, up to
// isomorphism, with a certificate per member.
std::vector<std::pair<Graph, SubdivisionCertificate>>
subdivision_closure(const std::vector<Graph>& base, int q, int max_order);

// Builds H_g = dual_construct({C_g}, sample, t) and checks that every member
// with odd-girth greater than g maps to H_g while C_g does not.
Verdict odd_girth_criterion_experiment(const ClassSample& sample, int g, int t,
                                       const HomSearchConfig& cfg = {},
                                       Structure* h_out = nullptr);

} // namespace homlab

#endif
