#pragma once

/// \file canonical.hpp
/// \brief Exact canonical forms and isomorphism testing for small graphs.
///
/// The canonical form is found by individualisation-refinement: colour
/// refinement to an equitable ordered partition, then branching on the first
/// smallest non-singleton cell and keeping the least graph6 string over all
/// leaves. A cell whose members are pairwise twins is branched on one member
/// only, since every permutation of such a cell is an automorphism.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "splitcw/graph.hpp"

namespace splitcw {

/// Largest order accepted by canonical_code.
inline constexpr int kCanonicalLimit = 16;

/// Isomorphism-class fingerprint. Two codes compare equal iff the (coloured)
/// graphs are isomorphic; the bytes are the graph6 string of the canonical
/// relabelling, followed by the canonical colour sequence when colours are used.
struct CanonicalCode {
    std::string bytes;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const { return std::hash<std::string>{}(c.bytes); }
};

/// perm[v] is the canonical position of vertex v.
std::vector<int> canonical_labelling(const Graph& g, std::span<const int> colours = {});

CanonicalCode canonical_code(const Graph& g);
/// Code of a vertex-coloured graph; isomorphisms must preserve colours.
CanonicalCode canonical_code(const Graph& g, std::span<const int> colours);

/// The canonical representative of g's isomorphism class.
Graph canonical_form(const Graph& g);

/// Backtracking search for an adjacency-preserving bijection, pruned by
/// degrees and by the sorted degree multiset of each neighbourhood. Does not
/// use canonical_code.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace splitcw
