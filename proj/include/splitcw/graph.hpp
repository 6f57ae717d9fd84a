#pragma once

/// \file graph.hpp
/// \brief Finite simple undirected graphs on at most 64 vertices, stored as
/// adjacency bit rows, and the elementary operations on them.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace splitcw {

inline constexpr int kMaxVertices = 64;

/// Thrown when an input exceeds a documented size limit.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A subset of the vertex range [0, 64). Whether it is valid for a particular
/// graph is checked by the operations that take one.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members);

    static VertexSet range(int n);
    static VertexSet from(std::span<const int> members);

    constexpr std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1U) != 0; }
    /// Smallest member; -1 when empty.
    int front() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
    bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }
    std::vector<int> to_vector() const;

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend bool operator==(VertexSet, VertexSet) = default;
    friend auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Immutable simple graph with vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    Graph(int n, std::initializer_list<Edge> edges);
    Graph(int n, std::span<const Edge> edges);

    /// Builds a graph from adjacency rows; rejects asymmetric rows, loops
    /// and bits outside [0, n).
    static Graph from_rows(std::vector<std::uint64_t> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    int size() const;
    bool adjacent(int u, int v) const { return ((rows_[u] >> v) & 1U) != 0; }
    VertexSet neighbours(int v) const { return VertexSet(rows_[v]); }
    int degree(int v) const { return std::popcount(rows_[v]); }
    VertexSet vertices() const { return VertexSet::range(order()); }
    std::span<const std::uint64_t> rows() const { return rows_; }
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::uint64_t> rows_;
};

/// Throws std::out_of_range unless every member of s is a vertex of g.
void check_vertex_set(const Graph& g, VertexSet s);

Graph complement(const Graph& g);
/// g's vertices keep their indices; h's vertices follow, shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// r disjoint copies of g.
Graph multiple(int r, const Graph& g);
/// Vertices of s renumbered 0..|s|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertices(const Graph& g, VertexSet s);
/// Flips every pair inside s.
Graph subgraph_complementation(const Graph& g, VertexSet s);
/// Flips every pair with one end in s and the other in t; s and t must be disjoint.
Graph bipartite_complementation(const Graph& g, VertexSet s, VertexSet t);
/// Adds vertex n adjacent to exactly the members of nbrs.
Graph add_vertex(const Graph& g, VertexSet nbrs);
/// Relabels so that vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
/// Complete: every member of s adjacent to every member of t.
bool is_complete_to(const Graph& g, VertexSet s, VertexSet t);
bool is_anticomplete_to(const Graph& g, VertexSet s, VertexSet t);

std::vector<VertexSet> connected_components(const Graph& g);
/// Two-colouring side per vertex (0/1) with the least vertex of each
/// component on side 0, or empty when g is not bipartite.
std::vector<int> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
int independence_number(const Graph& g);
/// Every component is a star K_{1,s} (s >= 0; K1 and K2 included).
bool is_star_forest(const Graph& g);

}  // namespace splitcw
