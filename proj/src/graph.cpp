#include "splitcw/graph.hpp"

#include <algorithm>
#include <string>

namespace splitcw {

namespace {

void check_order(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kMaxVertices) {
        throw SizeLimitError("graph has " + std::to_string(n) + " vertices; limit is " +
                             std::to_string(kMaxVertices));
    }
}

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members) {
    for (int v : members) {
        if (v < 0 || v >= 64) throw std::out_of_range("vertex index out of range");
        bits_ |= bit(v);
    }
}

VertexSet VertexSet::range(int n) {
    if (n <= 0) return VertexSet{};
    if (n >= 64) return VertexSet(~std::uint64_t{0});
    return VertexSet(bit(n) - 1);
}

VertexSet VertexSet::from(std::span<const int> members) {
    std::uint64_t bits = 0;
    for (int v : members) {
        if (v < 0 || v >= 64) throw std::out_of_range("vertex index out of range");
        bits |= bit(v);
    }
    return VertexSet(bits);
}

std::vector<int> VertexSet::to_vector() const { return {begin(), end()}; }

Graph::Graph(int n) {
    check_order(n);
    rows_.assign(n, 0);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        rows_[u] |= bit(v);
        rows_[v] |= bit(u);
    }
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const std::uint64_t allowed = VertexSet::range(n).bits();
    for (int u = 0; u < n; ++u) {
        if ((rows[u] & ~allowed) != 0) throw std::out_of_range("adjacency row mentions a non-vertex");
        if ((rows[u] & bit(u)) != 0) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        for (int v : VertexSet(rows[u])) {
            if ((rows[v] & bit(u)) == 0) throw std::invalid_argument("adjacency is not symmetric");
        }
    }
    Graph g;
    g.rows_ = std::move(rows);
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
        for (int v : VertexSet(rows_[u] & ~(bit(u + 1) - 1))) out.emplace_back(u, v);
    }
    return out;
}

void check_vertex_set(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices())) {
        throw std::out_of_range("vertex set mentions a vertex outside [0, " + std::to_string(g.order()) + ")");
    }
}

Graph complement(const Graph& g) {
    const std::uint64_t all = g.vertices().bits();
    std::vector<std::uint64_t> rows(g.order());
    for (int v = 0; v < g.order(); ++v) rows[v] = ~g.rows()[v] & all & ~bit(v);
    return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int shift = g.order();
    check_order(shift + h.order());
    std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
    for (auto r : h.rows()) rows.push_back(r << shift);
    return Graph::from_rows(std::move(rows));
}

Graph multiple(int r, const Graph& g) {
    if (r < 0) throw std::invalid_argument("negative multiplicity");
    Graph out(0);
    for (int i = 0; i < r; ++i) out = disjoint_union(out, g);
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    check_vertex_set(g, s);
    std::vector<int> index(g.order(), -1);
    int next = 0;
    for (int v : s) index[v] = next++;
    std::vector<std::uint64_t> rows(next, 0);
    for (int v : s) {
        for (int w : g.neighbours(v) & s) rows[index[v]] |= bit(index[w]);
    }
    return Graph::from_rows(std::move(rows));
}

Graph delete_vertices(const Graph& g, VertexSet s) {
    check_vertex_set(g, s);
    return induced_subgraph(g, g.vertices() - s);
}

Graph subgraph_complementation(const Graph& g, VertexSet s) {
    check_vertex_set(g, s);
    std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
    for (int v : s) rows[v] ^= s.without(v).bits();
    return Graph::from_rows(std::move(rows));
}

Graph bipartite_complementation(const Graph& g, VertexSet s, VertexSet t) {
    check_vertex_set(g, s);
    check_vertex_set(g, t);
    if (s.intersects(t)) throw std::invalid_argument("bipartite complementation needs disjoint sets");
    std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
    for (int v : s) rows[v] ^= t.bits();
    for (int v : t) rows[v] ^= s.bits();
    return Graph::from_rows(std::move(rows));
}

Graph add_vertex(const Graph& g, VertexSet nbrs) {
    check_vertex_set(g, nbrs);
    const int n = g.order();
    check_order(n + 1);
    std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
    for (int v : nbrs) rows[v] |= bit(n);
    rows.push_back(nbrs.bits());
    return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong length");
    std::vector<char> seen(n, 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = 1;
    }
    std::vector<std::uint64_t> rows(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbours(u)) rows[perm[u]] |= bit(perm[v]);
    }
    return Graph::from_rows(std::move(rows));
}

bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s) {
        if (!s.without(v).subset_of(g.neighbours(v))) return false;
    }
    return true;
}

bool is_independent(const Graph& g, VertexSet s) {
    for (int v : s) {
        if (g.neighbours(v).intersects(s)) return false;
    }
    return true;
}

bool is_complete_to(const Graph& g, VertexSet s, VertexSet t) {
    for (int v : s) {
        if (!t.subset_of(g.neighbours(v))) return false;
    }
    return true;
}

bool is_anticomplete_to(const Graph& g, VertexSet s, VertexSet t) {
    for (int v : s) {
        if (g.neighbours(v).intersects(t)) return false;
    }
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        VertexSet comp(bit(left.front()));
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next = next | g.neighbours(v);
            frontier = next - comp;
            comp = comp | next;
        }
        out.push_back(comp);
        left = left - comp;
    }
    return out;
}

std::vector<int> bipartition(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (VertexSet comp : connected_components(g)) {
        std::vector<int> stack{comp.front()};
        side[comp.front()] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbours(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return {};
                }
            }
        }
    }
    return side;
}

bool is_bipartite(const Graph& g) { return g.order() == 0 || !bipartition(g).empty(); }

int independence_number(const Graph& g) {
    // Branch on the lowest remaining vertex: either exclude it or take it and drop its neighbours.
    auto best = [&](auto&& self, VertexSet cand) -> int {
        if (cand.empty()) return 0;
        int v = cand.front();
        int with = 1 + self(self, cand.without(v) - g.neighbours(v));
        if (g.neighbours(v).intersects(cand)) return std::max(with, self(self, cand.without(v)));
        return with;
    };
    return best(best, g.vertices());
}

bool is_star_forest(const Graph& g) {
    for (VertexSet comp : connected_components(g)) {
        const int k = comp.size();
        if (k <= 2) continue;
        int centres = 0;
        for (int v : comp) {
            if (g.degree(v) == k - 1) ++centres;
            else if (g.degree(v) != 1) return false;
        }
        if (centres != 1) return false;
    }
    return true;
}

}  // namespace splitcw
