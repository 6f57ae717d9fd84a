#pragma once

/// \file classify.hpp
/// \brief Bounded/unbounded clique-width verdicts for H-free graphs within
/// split, chordal, bipartite and weakly chordal graphs, and for weakly
/// H-free bipartite graphs with a black/white labelling.

#include <optional>
#include <string>
#include <vector>

#include "splitcw/graph.hpp"
#include "splitcw/subgraph.hpp"

namespace splitcw {

enum class Outcome { Bounded, Unbounded, Open };

std::string to_string(Outcome outcome);

/// Evidence for the first clause: H (or its complement, or its opposite
/// labelling) is isomorphic to, or embeds into, the named target.
struct Witness {
    std::string relation;     ///< "isomorphic", "induced" or "labelled-induced"
    std::string subject;      ///< "H", "H̄", "H^ℓ" or "H^ℓ̄"
    std::string target;       ///< catalog expression, e.g. "F5" or "co-(P1+P4)"
    std::vector<int> map;     ///< subject vertex i goes to target vertex map[i]

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    Outcome outcome = Outcome::Unbounded;
    /// Every satisfied clause, in bullet order; the first one decides.
    std::vector<std::string> clauses;
    std::optional<Witness> witness;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Three-bullet form: rP1, F4, F5 (each for H or its complement).
Verdict classify_split(const Graph& h);
/// Seven-bullet form: rP1, bull+P1, F1, F2, F3, Q, K1,3+2P1. Agrees with
/// classify_split on outcome.
Verdict classify_split_main(const Graph& h);
Verdict classify_chordal(const Graph& h);
Verdict classify_bipartite(const Graph& h);
Verdict classify_weakly_chordal(const Graph& h);

struct WeaklyBipartiteOptions {
    /// Also try the opposite labelling against (P2+P4)^b and (P6)^b. The
    /// classification itself does not; this exists to compare against it.
    bool opposite_for_all = false;
};

Verdict classify_weakly_bip(const LabelledBipartiteGraph& h, WeaklyBipartiteOptions options = {});

}  // namespace splitcw
