#pragma once

/// \file modular.hpp
/// \brief Modules, primality and prime induced subgraphs.
///
/// Conventions: the empty set, singletons and the full vertex set are the
/// trivial modules, so every graph on at most two vertices is prime.
/// prime_induced_subgraphs only reports subgraphs with at least one vertex.

#include <optional>
#include <tuple>
#include <vector>

#include "splitcw/graph.hpp"

namespace splitcw {

inline constexpr int kModuleSearchLimit = 15;

/// (v, x, y): v lies outside the candidate set and is adjacent to exactly one of x, y.
struct Distinguisher {
    int v;
    int x;
    int y;
};

bool is_module(const Graph& g, VertexSet m);
/// A vertex outside m that separates two members of m, or nullopt when m is a module.
std::optional<Distinguisher> find_distinguisher(const Graph& g, VertexSet m);

/// Smallest non-trivial module (by size, then by bit pattern), or nullopt.
/// Exhaustive over vertex subsets; order limited to kModuleSearchLimit.
std::optional<VertexSet> find_nontrivial_module(const Graph& g);

bool is_prime(const Graph& g);

/// Prime induced subgraphs with n >= 1, one per isomorphism class, sorted by
/// (order, canonical code).
std::vector<Graph> prime_induced_subgraphs(const Graph& g);

}  // namespace splitcw
