#pragma once

/// \file cliquewidth.hpp
/// \brief Exact clique-width by search over label partitions, and the explicit
/// (r+1)-expression for split graphs with independence number below r.
///
/// Conventions: cw of the empty graph is 0 and cw of K1 is 1. Create leaves
/// may reuse labels freely; expressions always have at least one vertex.

#include <optional>
#include <stdexcept>

#include "splitcw/graph.hpp"
#include "splitcw/kexpr.hpp"
#include "splitcw/split.hpp"

namespace splitcw {

/// Largest order accepted by the exact solver.
inline constexpr int kCliqueWidthLimit = 10;

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A k-expression for g (evaluating to a graph isomorphic to g) or nullopt if
/// cw(g) > k. The search is complete.
///
/// Every k-expression can be normalised so that each subexpression on a vertex
/// set S evaluates to exactly g[S]: any join can be moved down to the union
/// that first brings its two endpoint sets together. The search therefore only
/// tracks (S, partition of S into at most k label classes). A state is kept
/// only if every class is homogeneous towards V \ S, since vertices sharing a
/// label are indistinguishable to every later operation. States are generated
/// bottom-up by size of S: union of two states on disjoint sets (with some
/// classes sharing labels), followed by the joins that add exactly the
/// g-edges across the union, followed by any sequence of class merges
/// (renames). Joins are only taken when they add an edge; renames only when
/// they merge two classes.
std::optional<KExpression> cw_at_most(const Graph& g, int k);

/// Least k with cw_at_most(g, k).
int clique_width(const Graph& g);

/// Expression of width at most r+1 for a split graph with independence number
/// below r: distinct labels for I, one label for the newest K vertex and one
/// for K vertices already placed. Leaves appear as I in increasing order, then
/// K in increasing order, so evaluate() reproduces g under that ordering.
KExpression build_rp1_expression(const Graph& g, const SplitPartition& p, int r);

}  // namespace splitcw
