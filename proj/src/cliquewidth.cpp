#include "splitcw/cliquewidth.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <vector>

namespace splitcw {

namespace {

using Mask = std::uint64_t;
constexpr Mask bit(int v) { return Mask{1} << v; }

// A partition of a vertex set into label classes, stored as class masks ordered
// by least member. Encoded as one nibble per vertex (0xF for non-members).
using Blocks = std::vector<Mask>;

std::uint64_t encode(const Blocks& blocks) {
    std::uint64_t code = ~std::uint64_t{0};
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int v : VertexSet(blocks[b])) {
            code &= ~(std::uint64_t{0xF} << (4 * v));
            code |= static_cast<std::uint64_t>(b) << (4 * v);
        }
    }
    return code;
}

Blocks decode(std::uint64_t code, Mask set) {
    Blocks blocks;
    for (int v : VertexSet(set)) {
        const auto b = static_cast<std::size_t>((code >> (4 * v)) & 0xF);
        if (blocks.size() <= b) blocks.resize(b + 1, 0);
        blocks[b] |= bit(v);
    }
    return blocks;
}

void normalise(Blocks& blocks) {
    std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

struct Parent {
    enum class Kind : std::uint8_t { Leaf, Union, Merge } kind;
    Mask left = 0;              // Union: the part containing the least vertex
    std::uint64_t source = 0;   // Merge: code before merging
};

struct Layer {
    std::vector<std::uint64_t> order;
    std::unordered_map<std::uint64_t, Parent> parent;

    bool insert(std::uint64_t code, Parent p) {
        if (!parent.emplace(code, p).second) return false;
        order.push_back(code);
        return true;
    }
};

class Solver {
public:
    Solver(const Graph& g, int k) : g_(g), k_(k), n_(g.order()), all_(g.vertices().bits()), layers_(Mask{1} << n_) {}

    std::optional<KExpression> solve() {
        for (int v = 0; v < n_; ++v) layers_[bit(v)].insert(encode({bit(v)}), {Parent::Kind::Leaf});
        if (n_ == 1) return reconstruct_top();

        std::vector<std::vector<Mask>> by_size(n_ + 1);
        for (Mask s = 1; s <= all_; ++s) by_size[std::popcount(s)].push_back(s);
        for (int size = 2; size <= n_; ++size) {
            for (Mask s : by_size[size]) {
                if (grow(s)) return reconstruct_top();
            }
        }
        return std::nullopt;
    }

private:
    Mask outside_nbrs(int v, Mask s) const { return g_.rows()[v] & ~s; }

    bool homogeneous_pair(Mask a, Mask b, Mask s) const {
        return outside_nbrs(std::countr_zero(a), s) == outside_nbrs(std::countr_zero(b), s);
    }

    Mask nbr_union(Mask x) const {
        Mask out = 0;
        for (int v : VertexSet(x)) out |= g_.rows()[v];
        return out;
    }

    Mask common_nbrs(Mask x) const {
        Mask out = all_;
        for (int v : VertexSet(x)) out &= g_.rows()[v];
        return out;
    }

    // Fills layers_[s]; returns true once s is the whole vertex set and reachable.
    bool grow(Mask s) {
        Layer& layer = layers_[s];
        const Mask low = s & -s;
        const Mask rest = s & ~low;
        // Parts containing the least vertex, proper and non-empty complement.
        for (Mask sub = rest; ; sub = (sub - 1) & rest) {
            const Mask left = sub | low;
            const Mask right = s & ~left;
            if (right != 0 && !layers_[left].order.empty() && !layers_[right].order.empty()) {
                if (combine(s, left, right, layer)) return true;
            }
            if (sub == 0) break;
        }
        return false;
    }

    bool combine(Mask s, Mask left, Mask right, Layer& layer) {
        // Copy the code lists: inserting into layer never touches these layers.
        const auto& lcodes = layers_[left].order;
        const auto& rcodes = layers_[right].order;
        for (std::uint64_t lc : lcodes) {
            const Blocks a = decode(lc, left);
            for (std::uint64_t rc : rcodes) {
                const Blocks b = decode(rc, right);
                std::vector<int> match(b.size(), -1);
                std::vector<char> taken(a.size(), 0);
                if (assign(s, left, a, b, 0, static_cast<int>(a.size()), match, taken, layer)) return true;
            }
        }
        return false;
    }

    // Decides, block by block of the right part, whether it shares a label with
    // a block of the left part or takes a fresh one.
    bool assign(Mask s, Mask left, const Blocks& a, const Blocks& b, std::size_t j, int used, std::vector<int>& match,
                std::vector<char>& taken, Layer& layer) {
        if (j == b.size()) return finish_union(s, left, a, b, match, layer);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (taken[i]) continue;
            // Same label: no edges between them, and identical view of the rest of the graph.
            if ((nbr_union(a[i]) & b[j]) != 0 || !homogeneous_pair(a[i], b[j], s)) continue;
            taken[i] = 1;
            match[j] = static_cast<int>(i);
            if (assign(s, left, a, b, j + 1, used, match, taken, layer)) return true;
            taken[i] = 0;
        }
        match[j] = -1;
        if (used < k_ && assign(s, left, a, b, j + 1, used + 1, match, taken, layer)) return true;
        return false;
    }

    bool finish_union(Mask s, Mask left, const Blocks& a, const Blocks& b, const std::vector<int>& match,
                      Layer& layer) {
        Blocks merged = a;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (match[j] >= 0) merged[match[j]] |= b[j];
            else merged.push_back(b[j]);
        }
        // Every cross edge must come from a join of two whole classes.
        for (std::size_t x = 0; x < merged.size(); ++x) {
            const Mask xl = merged[x] & left;
            const Mask xr = merged[x] & ~left;
            const Mask common = common_nbrs(merged[x]);
            const Mask xl_nbrs = nbr_union(xl);
            const Mask xr_nbrs = nbr_union(xr);
            for (std::size_t y = x + 1; y < merged.size(); ++y) {
                const Mask yl = merged[y] & left;
                const Mask yr = merged[y] & ~left;
                const bool cross = (xl_nbrs & yr) != 0 || (xr_nbrs & yl) != 0;
                if (cross && (merged[y] & ~common) != 0) return false;
            }
        }
        normalise(merged);
        const std::uint64_t code = encode(merged);
        if (!layer.insert(code, {Parent::Kind::Union, left, 0})) return false;
        if (s == all_) {
            top_ = code;
            return true;
        }
        return close_under_merges(s, code, layer);
    }

    bool close_under_merges(Mask s, std::uint64_t start, Layer& layer) {
        std::vector<std::uint64_t> queue{start};
        while (!queue.empty()) {
            const std::uint64_t code = queue.back();
            queue.pop_back();
            const Blocks blocks = decode(code, s);
            for (std::size_t x = 0; x < blocks.size(); ++x) {
                for (std::size_t y = x + 1; y < blocks.size(); ++y) {
                    if (!homogeneous_pair(blocks[x], blocks[y], s)) continue;
                    Blocks next;
                    for (std::size_t z = 0; z < blocks.size(); ++z) {
                        if (z == y) continue;
                        next.push_back(z == x ? (blocks[x] | blocks[y]) : blocks[z]);
                    }
                    normalise(next);
                    const std::uint64_t merged = encode(next);
                    if (layer.insert(merged, {Parent::Kind::Merge, 0, code})) queue.push_back(merged);
                }
            }
        }
        return false;
    }

    std::optional<KExpression> reconstruct_top() {
        const Mask s = all_;
        const std::uint64_t code = n_ == 1 ? layers_[s].order.front() : top_;
        const Blocks blocks = decode(code, s);
        std::vector<int> labels(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) labels[b] = static_cast<int>(b) + 1;
        return build(s, code, labels);
    }

    // Expression for state (s, code) in which class b carries labels[b].
    KExpression build(Mask s, std::uint64_t code, const std::vector<int>& labels) const {
        const Parent& p = layers_[s].parent.at(code);
        const Blocks blocks = decode(code, s);
        switch (p.kind) {
            case Parent::Kind::Leaf:
                return KExpression::create(labels[0]);
            case Parent::Kind::Merge: {
                const Blocks before = decode(p.source, s);
                std::vector<char> in_use(k_ + 2, 0);
                for (int l : labels) in_use[l] = 1;
                int spare = 1;
                while (in_use[spare]) ++spare;
                std::vector<int> before_labels(before.size(), 0);
                int merged_label = 0;
                for (std::size_t x = 0; x < before.size(); ++x) {
                    auto it = std::find(blocks.begin(), blocks.end(), before[x]);
                    if (it != blocks.end()) before_labels[x] = labels[it - blocks.begin()];
                }
                for (std::size_t x = 0; x < before.size(); ++x) {
                    if (before_labels[x] != 0) continue;
                    for (std::size_t z = 0; z < blocks.size(); ++z) {
                        if ((blocks[z] & before[x]) != 0) merged_label = labels[z];
                    }
                    // The first unmatched class keeps the merged label, the second takes the spare.
                    before_labels[x] = std::count(before_labels.begin(), before_labels.end(), merged_label) == 0
                                           ? merged_label
                                           : spare;
                }
                return KExpression::rename(spare, merged_label, build(s, p.source, before_labels));
            }
            case Parent::Kind::Union: {
                const Mask left = p.left;
                const Mask right = s & ~left;
                KExpression e = KExpression::disjoint_union(build_part(left, blocks, labels),
                                                            build_part(right, blocks, labels));
                for (std::size_t x = 0; x < blocks.size(); ++x) {
                    const Mask xl_nbrs = nbr_union(blocks[x] & left);
                    const Mask xr_nbrs = nbr_union(blocks[x] & right);
                    for (std::size_t y = x + 1; y < blocks.size(); ++y) {
                        if ((xl_nbrs & blocks[y] & right) != 0 || (xr_nbrs & blocks[y] & left) != 0) {
                            e = KExpression::join(labels[x], labels[y], std::move(e));
                        }
                    }
                }
                return e;
            }
        }
        throw std::logic_error("unknown parent kind");
    }

    // Restricts the classes of a union to one side and builds that side.
    KExpression build_part(Mask side, const Blocks& blocks, const std::vector<int>& labels) const {
        std::vector<std::pair<Mask, int>> parts;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b] & side) parts.emplace_back(blocks[b] & side, labels[b]);
        }
        std::sort(parts.begin(), parts.end(),
                  [](auto a, auto b) { return std::countr_zero(a.first) < std::countr_zero(b.first); });
        Blocks part_blocks;
        std::vector<int> part_labels;
        for (auto [m, l] : parts) {
            part_blocks.push_back(m);
            part_labels.push_back(l);
        }
        return build(side, encode(part_blocks), part_labels);
    }

    const Graph& g_;
    const int k_;
    const int n_;
    const Mask all_;
    std::vector<Layer> layers_;
    std::uint64_t top_ = 0;
};

KExpression distinct_labels_expression(const Graph& g) {
    const int n = g.order();
    KExpression e = KExpression::create(1);
    for (int v = 1; v < n; ++v) e = KExpression::disjoint_union(std::move(e), KExpression::create(v + 1));
    for (auto [u, v] : g.edges()) e = KExpression::join(u + 1, v + 1, std::move(e));
    return e;
}

}  // namespace

std::optional<KExpression> cw_at_most(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("cw_at_most needs k >= 1");
    if (g.order() == 0) throw std::invalid_argument("cw_at_most needs a non-empty graph");
    if (g.order() > kCliqueWidthLimit) {
        throw SizeLimitError("exact clique-width supports at most " + std::to_string(kCliqueWidthLimit) +
                             " vertices");
    }
    if (k >= g.order()) return distinct_labels_expression(g);
    return Solver(g, k).solve();
}

int clique_width(const Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1;; ++k) {
        if (cw_at_most(g, k)) return k;
    }
}

KExpression build_rp1_expression(const Graph& g, const SplitPartition& p, int r) {
    if (r < 1) throw PreconditionError("r must be at least 1");
    if (g.order() == 0) throw PreconditionError("expressions need at least one vertex");
    check_partition(g, p);
    if (p.independent.size() >= r) {
        throw PreconditionError("|I| = " + std::to_string(p.independent.size()) + " is not below r = " +
                                std::to_string(r));
    }
    if (independence_number(g) >= r) throw PreconditionError("graph contains rP1");

    std::vector<int> label_of(g.order(), 0);
    int next_label = 1;
    for (int v : p.independent) label_of[v] = next_label++;
    const int fresh = next_label;
    const int placed = next_label + 1;

    std::optional<KExpression> e;
    auto add = [&](KExpression leaf) {
        e = e ? KExpression::disjoint_union(std::move(*e), std::move(leaf)) : std::move(leaf);
    };
    for (int v : p.independent) add(KExpression::create(label_of[v]));
    bool any_placed = false;
    for (int v : p.clique) {
        add(KExpression::create(fresh));
        if (any_placed) e = KExpression::join(fresh, placed, std::move(*e));
        for (int u : g.neighbours(v) & p.independent) e = KExpression::join(fresh, label_of[u], std::move(*e));
        e = KExpression::rename(fresh, placed, std::move(*e));
        any_placed = true;
    }
    return *e;
}

}  // namespace splitcw
