#ifndef HOMLAB_TEST_UTIL_HPP
#define HOMLAB_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "homlab/structure.hpp"

namespace homlab::test {

// Independent oracle: tries all |B|^|A| total maps directly against the
// homomorphism condition.  No search, no propagation; kept separate from the
// engine on purpose.
inline bool naive_hom_exists(const Structure& a, const Structure& b) {
    int na = a.order(), nb = b.order();
    if (na == 0) return true;
    if (nb == 0) return false;
    std::vector<int> map(na, 0);
    while (true) {
        if (Homomorphism{a, b, map}.valid()) return true;
        int pos = na - 1;
        while (pos >= 0 && map[pos] == nb - 1) map[pos--] = 0;
        if (pos < 0) return false;
        ++map[pos];
    }
}

inline long long naive_hom_count(const Structure& a, const Structure& b) {
    int na = a.order(), nb = b.order();
    if (na == 0) return 1;
    if (nb == 0) return 0;
    long long count = 0;
    std::vector<int> map(na, 0);
    while (true) {
        if (Homomorphism{a, b, map}.valid()) ++count;
        int pos = na - 1;
        while (pos >= 0 && map[pos] == nb - 1) map[pos--] = 0;
        if (pos < 0) return count;
        ++map[pos];
    }
}

// Independent oracle: isomorphism by scanning all vertex permutations.
inline bool naive_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    return perm;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), std::move(es));
}

} // namespace homlab::test

#endif
