#pragma once

/// \file kexpr.hpp
/// \brief Expressions over the four clique-width operations.
///
/// Text grammar (whitespace-insensitive on input, none emitted):
///   E := v(i) | u(E,E) | j(i,j,E) | r(i>j,E)
/// with labels written as positive decimal integers.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "splitcw/graph.hpp"

namespace splitcw {

class MalformedExpressionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable expression tree; subtrees are shared, copies are cheap.
class KExpression {
public:
    enum class Kind { Create, Union, Join, Rename };

    /// A single vertex with the given label.
    static KExpression create(int label);
    static KExpression disjoint_union(KExpression left, KExpression right);
    /// Adds every edge between a vertex labelled i and a vertex labelled j; i != j.
    static KExpression join(int i, int j, KExpression child);
    /// Relabels every vertex labelled from to `to`.
    static KExpression rename(int from, int to, KExpression child);

    Kind kind() const;
    /// Create: the label. Join/Rename: i / from.
    int first() const;
    /// Join/Rename: j / to.
    int second() const;
    /// Union: left operand; Join/Rename: the child.
    const KExpression& left() const;
    const KExpression& right() const;

    /// Number of Create leaves.
    int vertex_count() const;

private:
    struct Node;
    explicit KExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// A graph with a positive label on every vertex.
struct LabelledGraph {
    Graph graph;
    std::vector<int> labels;
};

/// Vertices are numbered by the left-to-right order of the Create leaves.
LabelledGraph evaluate(const KExpression& e);

/// Number of distinct labels mentioned anywhere in e.
int width(const KExpression& e);

std::string to_string(const KExpression& e);
KExpression parse_kexpression(std::string_view text);

}  // namespace splitcw
