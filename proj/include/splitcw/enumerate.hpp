#pragma once

/// \file enumerate.hpp
/// \brief Graphs on n vertices up to isomorphism, as canonical forms sorted by
/// canonical code.

#include <string>
#include <vector>

#include "splitcw/graph.hpp"

namespace splitcw {

inline constexpr int kEnumerationLimit = 8;

/// One graph per isomorphism class, in canonical form, ordered by canonical
/// code. Results are memoised; safe to call from several threads.
const std::vector<Graph>& enumerate_graphs(int n);
/// The split graphs among enumerate_graphs(n), same order.
const std::vector<Graph>& enumerate_split_graphs(int n);

struct GraphFilter {
    bool split = false;
    std::vector<Graph> free_of;
    bool prime = false;
    bool star_forest = false;

    bool accepts(const Graph& g) const;
};

std::vector<Graph> enumerate_filtered(int n, const GraphFilter& filter);

}  // namespace splitcw
