#pragma once

/// \file subgraph.hpp
/// \brief Induced-subgraph containment, H-freeness, labelled bipartite graphs
/// and the weakly H^l-free decision.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "splitcw/graph.hpp"

namespace splitcw {

/// map[p] is the host vertex that pattern vertex p is sent to.
struct Embedding {
    std::vector<int> map;

    VertexSet image() const { return VertexSet::from(map); }
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Restricts where each pattern vertex may go. An empty `allowed` means
/// "anywhere"; otherwise it has one entry per pattern vertex.
struct EmbeddingConstraints {
    std::vector<VertexSet> allowed;
};

/// Lexicographically least induced embedding of pattern into host (comparing
/// the image sequence map[0], map[1], ...), or nullopt.
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern,
                                          const EmbeddingConstraints& constraints = {});

/// Visits induced embeddings in lexicographic order until visit returns false.
/// Returns the number of embeddings visited.
std::size_t for_each_induced_embedding(const Graph& host, const Graph& pattern,
                                       const EmbeddingConstraints& constraints,
                                       const std::function<bool(const Embedding&)>& visit);

/// True iff host has no induced copy of any pattern.
bool is_free(const Graph& host, std::span<const Graph> patterns);

class NotBipartiteError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when the maximum-black labellings of a graph are not all
/// isomorphic, so the canonical black-maximal labelling does not exist.
class BUndefinedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when a labelling search would exceed kLabellingCap labellings.
class LabellingSpaceError : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::uint64_t kLabellingCap = std::uint64_t{1} << 20;

/// A bipartite graph with an ordered (black, white) bipartition into
/// independent sets.
class LabelledBipartiteGraph {
public:
    /// Throws NotBipartiteError if either colour class is not independent,
    /// std::out_of_range if black mentions a non-vertex.
    LabelledBipartiteGraph(Graph graph, VertexSet black);

    const Graph& graph() const { return graph_; }
    VertexSet black() const { return black_; }
    VertexSet white() const { return graph_.vertices() - black_; }
    int order() const { return graph_.order(); }
    /// 1 for black, 0 for white.
    std::vector<int> colours() const;

    friend bool operator==(const LabelledBipartiteGraph&, const LabelledBipartiteGraph&) = default;

private:
    Graph graph_;
    VertexSet black_;
};

/// Same graph, colours reversed.
LabelledBipartiteGraph opposite_labelling(const LabelledBipartiteGraph& h);

/// Colour-preserving graph isomorphism.
bool labelled_isomorphic(const LabelledBipartiteGraph& g, const LabelledBipartiteGraph& h);

/// h is a labelled induced subgraph of g (black to black, white to white).
bool labelled_contains(const LabelledBipartiteGraph& g, const LabelledBipartiteGraph& h);
std::optional<Embedding> labelled_embedding(const LabelledBipartiteGraph& g, const LabelledBipartiteGraph& h);

/// Every black-and-white labelling of g, as black sets: each connected
/// component contributes its two colour-class assignments (an isolated vertex
/// is black or white). Order: component i's choice is bit i of a counter,
/// bit set meaning the side containing the component's least vertex is white.
/// Throws NotBipartiteError, or LabellingSpaceError beyond kLabellingCap.
std::vector<VertexSet> all_labellings(const Graph& g);

/// The labelling maximising the number of black vertices, provided all
/// maximisers are isomorphic as labelled graphs. The representative is the
/// first maximiser in all_labellings order.
LabelledBipartiteGraph black_maximal_labelling(const Graph& h);

/// A labelling of g containing none of the patterns as a labelled induced
/// subgraph (first in all_labellings order), or nullopt if none exists.
std::optional<LabelledBipartiteGraph> weakly_free(const Graph& g, std::span<const LabelledBipartiteGraph> patterns);

}  // namespace splitcw
