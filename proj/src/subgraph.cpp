#include "splitcw/subgraph.hpp"

#include <algorithm>
#include <string>

#include "splitcw/canonical.hpp"

namespace splitcw {

namespace {

class Matcher {
public:
    Matcher(const Graph& host, const Graph& pattern, const EmbeddingConstraints& constraints,
            const std::function<bool(const Embedding&)>& visit)
        : host_(host), pattern_(pattern), visit_(visit) {
        const int m = pattern.order();
        if (!constraints.allowed.empty() && static_cast<int>(constraints.allowed.size()) != m) {
            throw std::invalid_argument("embedding constraints need one entry per pattern vertex");
        }
        allowed_.resize(m);
        for (int p = 0; p < m; ++p) {
            VertexSet base = constraints.allowed.empty() ? host.vertices() : constraints.allowed[p] & host.vertices();
            // Induced copies keep degrees and non-degrees within bounds.
            std::uint64_t bits = 0;
            for (int v : base) {
                if (host.degree(v) >= pattern.degree(p) &&
                    host.order() - 1 - host.degree(v) >= m - 1 - pattern.degree(p)) {
                    bits |= std::uint64_t{1} << v;
                }
            }
            allowed_[p] = bits;
        }
        map_.map.assign(m, -1);
    }

    std::size_t run() {
        if (pattern_.order() > host_.order()) return 0;
        extend(0, 0);
        return visited_;
    }

private:
    bool extend(int p, std::uint64_t used) {
        if (p == pattern_.order()) {
            ++visited_;
            return visit_(map_);
        }
        std::uint64_t cand = allowed_[p] & ~used;
        for (int q = 0; q < p && cand != 0; ++q) {
            const std::uint64_t nbrs = host_.rows()[map_.map[q]];
            cand &= pattern_.adjacent(p, q) ? nbrs : ~nbrs;
        }
        for (int v : VertexSet(cand)) {
            map_.map[p] = v;
            if (!extend(p + 1, used | (std::uint64_t{1} << v))) return false;
        }
        map_.map[p] = -1;
        return true;
    }

    const Graph& host_;
    const Graph& pattern_;
    const std::function<bool(const Embedding&)>& visit_;
    std::vector<std::uint64_t> allowed_;
    Embedding map_;
    std::size_t visited_ = 0;
};

EmbeddingConstraints colour_constraints(const LabelledBipartiteGraph& g, const LabelledBipartiteGraph& h) {
    EmbeddingConstraints c;
    c.allowed.resize(h.order());
    for (int p = 0; p < h.order(); ++p) c.allowed[p] = h.black().contains(p) ? g.black() : g.white();
    return c;
}

}  // namespace

std::size_t for_each_induced_embedding(const Graph& host, const Graph& pattern,
                                       const EmbeddingConstraints& constraints,
                                       const std::function<bool(const Embedding&)>& visit) {
    return Matcher(host, pattern, constraints, visit).run();
}

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern,
                                          const EmbeddingConstraints& constraints) {
    std::optional<Embedding> found;
    for_each_induced_embedding(host, pattern, constraints, [&](const Embedding& e) {
        found = e;
        return false;
    });
    return found;
}

bool is_free(const Graph& host, std::span<const Graph> patterns) {
    return std::none_of(patterns.begin(), patterns.end(),
                        [&](const Graph& p) { return contains_induced(host, p).has_value(); });
}

LabelledBipartiteGraph::LabelledBipartiteGraph(Graph graph, VertexSet black)
    : graph_(std::move(graph)), black_(black) {
    check_vertex_set(graph_, black_);
    if (!is_independent(graph_, black_)) throw NotBipartiteError("black vertices are not independent");
    if (!is_independent(graph_, white())) throw NotBipartiteError("white vertices are not independent");
}

std::vector<int> LabelledBipartiteGraph::colours() const {
    std::vector<int> out(order(), 0);
    for (int v : black_) out[v] = 1;
    return out;
}

LabelledBipartiteGraph opposite_labelling(const LabelledBipartiteGraph& h) {
    return LabelledBipartiteGraph(h.graph(), h.white());
}

bool labelled_isomorphic(const LabelledBipartiteGraph& g, const LabelledBipartiteGraph& h) {
    if (g.order() != h.order() || g.black().size() != h.black().size()) return false;
    return labelled_contains(g, h);
}

std::optional<Embedding> labelled_embedding(const LabelledBipartiteGraph& g, const LabelledBipartiteGraph& h) {
    return contains_induced(g.graph(), h.graph(), colour_constraints(g, h));
}

bool labelled_contains(const LabelledBipartiteGraph& g, const LabelledBipartiteGraph& h) {
    return labelled_embedding(g, h).has_value();
}

std::vector<VertexSet> all_labellings(const Graph& g) {
    if (g.order() == 0) return {VertexSet{}};
    const auto side = bipartition(g);
    if (side.empty()) throw NotBipartiteError("graph is not bipartite");
    const auto comps = connected_components(g);
    if (comps.size() >= 64 || (std::uint64_t{1} << comps.size()) > kLabellingCap) {
        throw LabellingSpaceError("labelling space of " + std::to_string(comps.size()) +
                                  " components exceeds the 2^20 cap");
    }
    // For each component: the side holding its least vertex, and the other side.
    std::vector<std::pair<VertexSet, VertexSet>> halves;
    for (VertexSet comp : comps) {
        std::uint64_t zero = 0;
        for (int v : comp) {
            if (side[v] == 0) zero |= std::uint64_t{1} << v;
        }
        halves.emplace_back(VertexSet(zero), comp - VertexSet(zero));
    }
    std::vector<VertexSet> out;
    const std::uint64_t total = std::uint64_t{1} << comps.size();
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        VertexSet black;
        for (std::size_t i = 0; i < halves.size(); ++i) {
            black = black | (((mask >> i) & 1U) ? halves[i].second : halves[i].first);
        }
        out.push_back(black);
    }
    return out;
}

LabelledBipartiteGraph black_maximal_labelling(const Graph& h) {
    const auto labellings = all_labellings(h);
    int best = -1;
    for (VertexSet black : labellings) best = std::max(best, black.size());
    std::optional<LabelledBipartiteGraph> chosen;
    CanonicalCode chosen_code;
    for (VertexSet black : labellings) {
        if (black.size() != best) continue;
        LabelledBipartiteGraph candidate(h, black);
        auto code = canonical_code(h, candidate.colours());
        if (!chosen) {
            chosen = candidate;
            chosen_code = std::move(code);
        } else if (code != chosen_code) {
            throw BUndefinedError("maximum-black labellings are not all isomorphic");
        }
    }
    return *chosen;
}

std::optional<LabelledBipartiteGraph> weakly_free(const Graph& g, std::span<const LabelledBipartiteGraph> patterns) {
    for (VertexSet black : all_labellings(g)) {
        LabelledBipartiteGraph labelled(g, black);
        const bool avoids = std::none_of(patterns.begin(), patterns.end(), [&](const LabelledBipartiteGraph& p) {
            return labelled_contains(labelled, p);
        });
        if (avoids) return labelled;
    }
    return std::nullopt;
}

}  // namespace splitcw
