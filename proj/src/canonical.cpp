#include "splitcw/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "splitcw/io.hpp"

namespace splitcw {

namespace {

using Cells = std::vector<std::vector<int>>;

// Splits cells until every vertex in a cell sees the same number of
// neighbours in every cell. Cell order is derived only from invariants.
Cells refine(const Graph& g, Cells cells) {
    const int n = g.order();
    std::vector<int> cell_of(n);
    while (true) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
        }
        std::vector<std::uint64_t> masks(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (int v : cells[c]) masks[c] |= std::uint64_t{1} << v;
        }
        Cells next;
        next.reserve(n);
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> key(cells.size());
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    key[c] = std::popcount(g.rows()[v] & masks[c]);
                }
                keyed.emplace_back(std::move(key), v);
            }
            std::sort(keyed.begin(), keyed.end());
            std::vector<int> current{keyed[0].second};
            for (std::size_t i = 1; i < keyed.size(); ++i) {
                if (keyed[i].first != keyed[i - 1].first) {
                    next.push_back(std::move(current));
                    current.clear();
                }
                current.push_back(keyed[i].second);
            }
            next.push_back(std::move(current));
        }
        if (next.size() == cells.size()) return next;
        cells = std::move(next);
    }
}

bool pairwise_twins(const Graph& g, const std::vector<int>& cell) {
    const int u = cell[0];
    for (std::size_t i = 1; i < cell.size(); ++i) {
        const int v = cell[i];
        const std::uint64_t mu = g.rows()[u] & ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        const std::uint64_t mv = g.rows()[v] & ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        if (mu != mv) return false;
    }
    // Twins with a common representative are pairwise twins, except that the
    // relation between the others and u may differ; check adjacency to u is uniform.
    if (cell.size() > 2) {
        const bool first = g.adjacent(u, cell[1]);
        for (std::size_t i = 2; i < cell.size(); ++i) {
            if (g.adjacent(u, cell[i]) != first) return false;
        }
    }
    return true;
}

struct Search {
    const Graph& g;
    std::optional<std::string> best;
    std::vector<int> best_perm;

    void run(const Cells& cells) {
        const std::size_t n = static_cast<std::size_t>(g.order());
        if (cells.size() == n) {
            std::vector<int> perm(n);
            for (std::size_t c = 0; c < cells.size(); ++c) perm[cells[c][0]] = static_cast<int>(c);
            std::string code = to_graph6(relabel(g, perm));
            if (!best || code < *best) {
                best = std::move(code);
                best_perm = std::move(perm);
            }
            return;
        }
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) {
                target = c;
            }
        }
        const auto& cell = cells[target];
        const std::size_t branches = pairwise_twins(g, cell) ? 1 : cell.size();
        for (std::size_t b = 0; b < branches; ++b) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({cell[b]});
                std::vector<int> rest;
                for (int v : cell) {
                    if (v != cell[b]) rest.push_back(v);
                }
                child.push_back(std::move(rest));
            }
            run(refine(g, std::move(child)));
        }
    }
};

Cells initial_cells(const Graph& g, std::span<const int> colours) {
    const int n = g.order();
    if (!colours.empty() && static_cast<int>(colours.size()) != n) {
        throw std::invalid_argument("colour vector length does not match the graph order");
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto colour = [&](int v) { return colours.empty() ? 0 : colours[v]; };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour(a) < colour(b); });
    Cells cells;
    for (int v : order) {
        if (cells.empty() || colour(cells.back()[0]) != colour(v)) cells.emplace_back();
        cells.back().push_back(v);
    }
    return cells;
}

}  // namespace

std::vector<int> canonical_labelling(const Graph& g, std::span<const int> colours) {
    if (g.order() > kCanonicalLimit) {
        throw SizeLimitError("canonical labelling supports at most " + std::to_string(kCanonicalLimit) +
                             " vertices");
    }
    if (g.order() == 0) return {};
    Search search{g, std::nullopt, {}};
    search.run(refine(g, initial_cells(g, colours)));
    return search.best_perm;
}

CanonicalCode canonical_code(const Graph& g) { return canonical_code(g, {}); }

CanonicalCode canonical_code(const Graph& g, std::span<const int> colours) {
    const auto perm = canonical_labelling(g, colours);
    CanonicalCode code{to_graph6(relabel(g, perm))};
    if (!colours.empty()) {
        std::vector<int> ordered(colours.size());
        for (std::size_t v = 0; v < colours.size(); ++v) ordered[perm[v]] = colours[v];
        code.bytes.push_back('|');
        for (std::size_t i = 0; i < ordered.size(); ++i) {
            if (i > 0) code.bytes.push_back(',');
            code.bytes += std::to_string(ordered[i]);
        }
    }
    return code;
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labelling(g)); }

namespace {

std::vector<int> neighbour_degree_profile(const Graph& g, int v) {
    std::vector<int> out;
    for (int w : g.neighbours(v)) out.push_back(g.degree(w));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
    const int n = g.order();
    if (n != h.order() || g.size() != h.size()) return false;
    std::vector<int> dg(n), dh(n);
    for (int v = 0; v < n; ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;

    std::vector<std::vector<int>> pg(n), ph(n);
    for (int v = 0; v < n; ++v) {
        pg[v] = neighbour_degree_profile(g, v);
        ph[v] = neighbour_degree_profile(h, v);
    }
    // Candidates for each g-vertex: h-vertices with identical degree and neighbour-degree profile.
    std::vector<std::uint64_t> allowed(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (dg[u] == dh[v] && pg[u] == ph[v]) allowed[u] |= std::uint64_t{1} << v;
        }
        if (allowed[u] == 0) return false;
    }
    // Map g-vertices in order of fewest candidates.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(allowed[a]) < std::popcount(allowed[b]);
    });
    std::vector<int> image(n, -1);
    auto extend = [&](auto&& self, int depth, std::uint64_t used) -> bool {
        if (depth == n) return true;
        const int u = order[depth];
        std::uint64_t cand = allowed[u] & ~used;
        for (int d = 0; d < depth; ++d) {
            const int w = order[d];
            cand &= g.adjacent(u, w) ? h.rows()[image[w]] : ~h.rows()[image[w]];
        }
        for (int v : VertexSet(cand)) {
            image[u] = v;
            if (self(self, depth + 1, used | (std::uint64_t{1} << v))) return true;
        }
        image[u] = -1;
        return false;
    };
    return extend(extend, 0, 0);
}

}  // namespace splitcw
