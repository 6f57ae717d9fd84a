#pragma once

/// \file serialize.hpp
/// \brief JSON text for partitions, labelled bipartite graphs, verdicts and
/// claim reports. Output key order is fixed; indent < 0 gives one line.

#include <string>
#include <string_view>

#include "splitcw/claims.hpp"
#include "splitcw/classify.hpp"
#include "splitcw/split.hpp"
#include "splitcw/subgraph.hpp"

namespace splitcw {

/// {"K":[...],"I":[...]}. Throws FormatError on malformed text and, when
/// validate is set, InvalidPartitionError if it is not a split partition of g.
SplitPartition partition_from_json(std::string_view text, const Graph& g, bool validate = true);
std::string to_json(const SplitPartition& p, int indent = -1);

/// {"black":[...],"white":[...],"edges":[[u,v],...]}; the two lists must
/// cover 0..n-1 exactly once.
LabelledBipartiteGraph labelled_from_json(std::string_view text);
std::string to_json(const LabelledBipartiteGraph& h, int indent = -1);

std::string to_json(const Verdict& v, int indent = -1);
/// Split verdict from the three-bullet form plus the clauses of the
/// seven-bullet form under "main_clauses".
std::string split_verdict_json(const Graph& h, int indent = -1);
std::string to_json(const ClaimReport& r, int indent = -1);
std::string to_json(const GrowthReport& r, int indent = -1);

}  // namespace splitcw
