#include "homlab/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "homlab/errors.hpp"

namespace homlab {

namespace {

// Individualization-refinement canonicalizer.  The refinement function and
// the target-cell choice depend only on the ordered partition and the tuple
// incidences, never on vertex ids, so the minimum serialization over all
// leaves of the search tree is a canonical form.
class Canonicalizer {
  public:
    explicit Canonicalizer(const Structure& s, int cap) : s_(s), n_(s.order()) {
        if (n_ > cap)
            throw capacity_error("canonical_code: order " + std::to_string(n_) +
                                 " exceeds cap " + std::to_string(cap));
        if (n_ > 64) throw capacity_error("canonical_code: order above 64 unsupported");
        if (s.sig().symbol_count() > 255)
            throw capacity_error("canonical_code: too many relation symbols");
        has_tuples_.assign(n_, false);
        for (const auto& rel : s.relations())
            for (int x : rel.flat) has_tuples_[x] = true;
    }

    std::pair<std::string, std::vector<int>> run() {
        header_ = serialize_header();
        if (n_ == 0) return {header_, {}};
        std::vector<std::vector<int>> cells(1);
        for (int v = 0; v < n_; ++v) cells[0].push_back(v);
        refine(cells);
        descend(cells);
        return {best_code_, best_labeling_};
    }

  private:
    std::string serialize_header() const {
        std::string out;
        out.push_back(static_cast<char>(s_.sig().symbol_count()));
        for (const auto& sym : s_.sig().symbols()) {
            out.push_back(static_cast<char>(sym.name.size()));
            out += sym.name;
            out.push_back(static_cast<char>(sym.arity));
        }
        out.push_back(static_cast<char>(n_));
        return out;
    }

    void compute_features(const std::vector<int>& cell_of,
                          std::vector<std::vector<std::uint64_t>>& feats) const {
        if (static_cast<int>(feats.size()) != n_) feats.resize(n_);
        for (auto& f : feats) f.clear();
        for (int r = 0; r < s_.sig().symbol_count(); ++r) {
            const auto& rel = s_.relation(r);
            int arity = rel.arity;
            for (int i = 0; i < rel.tuple_count(); ++i) {
                auto t = rel.tuple(i);
                std::uint64_t packed = 0;
                for (int j = 0; j < arity; ++j)
                    packed = (packed << 6) | static_cast<std::uint64_t>(cell_of[t[j]]);
                for (int j = 0; j < arity; ++j) {
                    std::uint64_t key =
                        ((static_cast<std::uint64_t>(r) * kMaxArity + j) << 48) | packed;
                    feats[t[j]].push_back(key);
                }
            }
        }
        for (auto& f : feats) std::sort(f.begin(), f.end());
    }

    void refine(std::vector<std::vector<int>>& cells) {
        std::vector<int>& cell_of = cell_of_buffer_;
        cell_of.assign(n_, 0);
        auto& feats = feats_buffer_;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
            compute_features(cell_of, feats);
            std::vector<std::vector<int>> next;
            next.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(std::move(cell));
                    continue;
                }
                std::sort(cell.begin(), cell.end(), [&](int a, int b) {
                    if (feats[a] != feats[b]) return feats[a] < feats[b];
                    return a < b;
                });
                size_t start = 0;
                for (size_t i = 1; i <= cell.size(); ++i) {
                    if (i == cell.size() || feats[cell[i]] != feats[cell[start]]) {
                        next.emplace_back(cell.begin() + start, cell.begin() + i);
                        if (i - start != cell.size()) changed = true;
                        start = i;
                    }
                }
            }
            cells = std::move(next);
        }
    }

    void descend(const std::vector<std::vector<int>>& cells) {
        size_t target = cells.size();
        for (size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = c;
                break;
            }
        if (target == cells.size()) {
            emit_leaf(cells);
            return;
        }
        const auto& cell = cells[target];
        // Vertices touched by no tuple are interchangeable: one branch suffices.
        bool all_bare = true;
        for (int v : cell)
            if (has_tuples_[v]) {
                all_bare = false;
                break;
            }
        for (int v : cell) {
            std::vector<std::vector<int>> split;
            split.reserve(cells.size() + 1);
            for (size_t c = 0; c < cells.size(); ++c) {
                if (c == target) {
                    split.push_back({v});
                    std::vector<int> rest;
                    for (int w : cells[c])
                        if (w != v) rest.push_back(w);
                    split.push_back(std::move(rest));
                } else {
                    split.push_back(cells[c]);
                }
            }
            refine(split);
            if (++leaves_ > kLeafLimit)
                throw capacity_error("canonical_code: refinement tree too large");
            descend(split);
            if (all_bare) break;
        }
    }

    void emit_leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> label(n_);
        for (size_t c = 0; c < cells.size(); ++c) label[cells[c][0]] = static_cast<int>(c);
        std::string code = header_;
        std::vector<std::uint64_t> packed;
        for (int r = 0; r < s_.sig().symbol_count(); ++r) {
            const auto& rel = s_.relation(r);
            int arity = rel.arity;
            packed.clear();
            for (int i = 0; i < rel.tuple_count(); ++i) {
                auto t = rel.tuple(i);
                std::uint64_t key = 0;
                for (int j = 0; j < arity; ++j)
                    key = (key << 6) | static_cast<std::uint64_t>(label[t[j]]);
                packed.push_back(key);
            }
            std::sort(packed.begin(), packed.end());
            std::uint32_t count = static_cast<std::uint32_t>(packed.size());
            for (int b = 0; b < 4; ++b) code.push_back(static_cast<char>((count >> (8 * b)) & 0xff));
            for (std::uint64_t key : packed)
                for (int j = arity - 1; j >= 0; --j)
                    code.push_back(static_cast<char>((key >> (6 * j)) & 0x3f));
        }
        if (best_code_.empty() || code < best_code_) {
            best_code_ = std::move(code);
            best_labeling_ = std::move(label);
        }
    }

    static constexpr long long kLeafLimit = 50'000'000;

    const Structure& s_;
    int n_;
    std::vector<bool> has_tuples_;
    std::string header_;
    std::string best_code_;
    std::vector<int> best_labeling_;
    long long leaves_ = 0;
    std::vector<int> cell_of_buffer_;
    std::vector<std::vector<std::uint64_t>> feats_buffer_;
};

} // namespace

std::string canonical_code(const Structure& s, int cap) {
    return Canonicalizer(s, cap).run().first;
}

std::vector<int> canonical_labeling(const Structure& s, int cap) {
    return Canonicalizer(s, cap).run().second;
}

std::pair<std::string, std::vector<int>> canonical_code_and_labeling(const Structure& s,
                                                                     int cap) {
    return Canonicalizer(s, cap).run();
}

Structure apply_labeling(const Structure& s, const std::vector<int>& labeling) {
    if (static_cast<int>(labeling.size()) != s.order())
        throw argument_error("apply_labeling: size mismatch");
    std::vector<Relation> rels;
    for (const auto& rel : s.relations()) {
        Relation out{rel.arity, rel.flat};
        for (int& x : out.flat) x = labeling[x];
        rels.push_back(std::move(out));
    }
    return Structure(s.sig(), s.order(), std::move(rels));
}

std::string canonical_code(const Graph& g, int cap) {
    return canonical_code(to_structure(g), cap);
}

std::string canonical_code(const Digraph& g, int cap) {
    return canonical_code(to_structure(g), cap);
}

bool isomorphic(const Structure& a, const Structure& b, int cap) {
    if (a.sig() != b.sig() || a.order() != b.order()) return false;
    return canonical_code(a, cap) == canonical_code(b, cap);
}

bool isomorphic(const Graph& a, const Graph& b, int cap) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_code(a, cap) == canonical_code(b, cap);
}

} // namespace homlab
