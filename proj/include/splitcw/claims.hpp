#pragma once

/// \file claims.hpp
/// \brief Exhaustive desk-scale checks of structural facts about split graphs,
/// the star-forest reduction for (K1,3+2P1)-free split graphs, and the
/// clique-width growth table.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitcw/cliquewidth.hpp"
#include "splitcw/enumerate.hpp"
#include "splitcw/graph.hpp"
#include "splitcw/split.hpp"

namespace splitcw {

class UnknownClaimError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ClaimInfo {
    std::string id;
    std::string statement;
    std::string family;
    std::string negative_control;
    /// Smallest max_n at which the negative control finds a counterexample.
    int negative_control_n;
};

const std::vector<ClaimInfo>& registered_claims();
const ClaimInfo& claim_info(std::string_view id);

struct VerifyOptions {
    /// Worker threads; 0 means one per hardware thread. Never affects results.
    int jobs = 1;
    /// Run the deliberately weakened variant, which must fail.
    bool negative_control = false;
};

using NamedVertices = std::vector<std::pair<std::string, std::vector<int>>>;

struct Counterexample {
    std::string graph6;
    std::optional<SplitPartition> partition;
    NamedVertices witness;
    std::string detail;
};

struct ClaimCounts {
    long graphs = 0;
    long partitions = 0;
    /// Instances where the hypothesis held and the conclusion was tested.
    long checks = 0;

    ClaimCounts& operator+=(const ClaimCounts& o) {
        graphs += o.graphs;
        partitions += o.partitions;
        checks += o.checks;
        return *this;
    }
};

struct ClaimReport {
    std::string claim;
    int max_n = 0;
    std::string family;
    bool negative_control = false;
    bool holds = true;
    std::optional<Counterexample> counterexample;
    ClaimCounts counts;
    /// Largest n actually swept (the sweep stops after the first n with a counterexample).
    int swept_to = 0;
};

/// Sweeps the claim's family for n up to max_n (at most 8). The counterexample,
/// if any, is the first in (n, canonical code, partition) order.
ClaimReport verify_claim(std::string_view id, int max_n, VerifyOptions options = {});

class ReductionError : public PreconditionError {
public:
    enum class Reason { NotSplit, NotFree, SmallIndependentSet };
    ReductionError(Reason reason, const std::string& what) : PreconditionError(what), reason_(reason) {}
    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/// Deletes the two I-neighbours of the least K vertex with exactly two of them
/// (if any), flips all pairs between I' and the K vertices with more than one
/// neighbour in I', then complements K. Remaining vertices keep their order.
Graph thm7_reduce(const Graph& g, const SplitPartition& p);

struct GrowthRow {
    int n;
    long graphs;
    int max_cw;
    std::string witness_graph6;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    bool monotone;
};

/// Maximum exact clique-width over the family for each n in [1, max_n]; rows
/// with an empty family are omitted.
GrowthReport cw_growth_report(int max_n, const GraphFilter& family, int jobs = 1);

/// Clique-width memoised by canonical code; thread-safe.
int cached_clique_width(const Graph& g);

}  // namespace splitcw
