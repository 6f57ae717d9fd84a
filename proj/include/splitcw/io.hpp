#pragma once

/// \file io.hpp
/// \brief graph6 and plain edge-list text formats.

#include <stdexcept>
#include <string>
#include <string_view>

#include "splitcw/graph.hpp"

namespace splitcw {

/// Malformed textual graph input. what() carries a position-aware diagnostic.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Standard graph6 encoding, without header or trailing newline.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 record. An optional ">>graph6<<" header and one trailing
/// newline are accepted; anything else that is not a canonical encoding
/// (wrong length, bytes outside 63..126, non-zero padding bits) is rejected.
Graph from_graph6(std::string_view text);

/// "n\nu v\nu v\n..." with edges as returned by Graph::edges().
std::string to_edge_list(const Graph& g);
/// Inverse of to_edge_list; blank lines and lines starting with '#' are skipped.
Graph from_edge_list(std::string_view text);

}  // namespace splitcw
