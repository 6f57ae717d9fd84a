#pragma once

/// \file split.hpp
/// \brief Split partitions and the correspondence between split graphs and
/// labelled bipartite graphs obtained by complementing the clique side.

#include <utility>
#include <vector>

#include "splitcw/graph.hpp"
#include "splitcw/subgraph.hpp"

namespace splitcw {

/// Ordered pair (K, I): K a clique, I an independent set, together covering
/// all vertices. Either side may be empty.
struct SplitPartition {
    VertexSet clique;
    VertexSet independent;

    friend bool operator==(const SplitPartition&, const SplitPartition&) = default;
};

class InvalidPartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_valid_partition(const Graph& g, const SplitPartition& p);
/// Throws InvalidPartitionError naming the violated condition.
void check_partition(const Graph& g, const SplitPartition& p);

/// No induced 2K2, C4 or C5.
bool is_split(const Graph& g);

/// Every split partition of g, sorted by (|K|, K as an ascending vertex list).
std::vector<SplitPartition> split_partitions(const Graph& g);

/// Some automorphism of g maps p.clique onto q.clique.
bool partitions_isomorphic(const Graph& g, const SplitPartition& p, const SplitPartition& q);

/// An induced embedding of h into g sending ph.clique into pg.clique and
/// ph.independent into pg.independent exists.
bool partition_contains(const Graph& g, const SplitPartition& pg, const Graph& h, const SplitPartition& ph);

/// Which colour the clique side receives in the bipartite picture.
enum class CliqueColour { Black, White };

/// Complements the edges inside p.clique and colours the clique side per
/// `clique_colour`, the independent side with the other colour.
LabelledBipartiteGraph to_labelled_bipartite(const Graph& g, const SplitPartition& p, CliqueColour clique_colour);

/// Completes the class coloured `clique_colour` into a clique; returns the
/// split graph together with (that class, the other class).
std::pair<Graph, SplitPartition> from_labelled_bipartite(const LabelledBipartiteGraph& b, CliqueColour clique_colour);

/// h plus one new vertex complete to p.clique and anti-complete to p.independent.
Graph key_lemma_extension(const Graph& h, const SplitPartition& p);

}  // namespace splitcw
