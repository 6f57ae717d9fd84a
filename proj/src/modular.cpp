#include "splitcw/modular.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "splitcw/canonical.hpp"

namespace splitcw {

std::optional<Distinguisher> find_distinguisher(const Graph& g, VertexSet m) {
    check_vertex_set(g, m);
    if (m.size() < 2) return std::nullopt;
    const int x = m.front();
    for (int v : g.vertices() - m) {
        const bool sees_x = g.adjacent(v, x);
        for (int y : m.without(x)) {
            if (g.adjacent(v, y) != sees_x) return Distinguisher{v, x, y};
        }
    }
    return std::nullopt;
}

bool is_module(const Graph& g, VertexSet m) { return !find_distinguisher(g, m).has_value(); }

std::optional<VertexSet> find_nontrivial_module(const Graph& g) {
    const int n = g.order();
    if (n > kModuleSearchLimit) {
        throw SizeLimitError("module search supports at most " + std::to_string(kModuleSearchLimit) + " vertices");
    }
    if (n <= 2) return std::nullopt;
    const std::uint64_t full = g.vertices().bits();
    for (int size = 2; size < n; ++size) {
        // Gosper's hack: subsets of the given size in increasing numeric order.
        std::uint64_t m = (std::uint64_t{1} << size) - 1;
        while (m < full) {
            if (is_module(g, VertexSet(m))) return VertexSet(m);
            const std::uint64_t low = m & -m;
            const std::uint64_t ripple = m + low;
            m = (((ripple ^ m) >> 2) / low) | ripple;
        }
    }
    return std::nullopt;
}

bool is_prime(const Graph& g) { return !find_nontrivial_module(g).has_value(); }

std::vector<Graph> prime_induced_subgraphs(const Graph& g) {
    const int n = g.order();
    if (n > kModuleSearchLimit) {
        throw SizeLimitError("prime subgraph enumeration supports at most " + std::to_string(kModuleSearchLimit) +
                             " vertices");
    }
    std::map<std::pair<int, CanonicalCode>, Graph> found;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Graph sub = induced_subgraph(g, VertexSet(mask));
        if (!is_prime(sub)) continue;
        auto code = canonical_code(sub);
        found.try_emplace({sub.order(), std::move(code)}, sub);
    }
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [key, sub] : found) out.push_back(canonical_form(sub));
    return out;
}

}  // namespace splitcw
