#include "splitcw/kexpr.hpp"

#include <cctype>
#include <map>
#include <set>

namespace splitcw {

namespace {

void check_label(int label) {
    if (label < 1) throw MalformedExpressionError("labels must be positive, got " + std::to_string(label));
}

}  // namespace

struct KExpression::Node {
    Kind kind;
    int a = 0;
    int b = 0;
    int vertices = 0;
    std::vector<KExpression> children;
};

KExpression::Kind KExpression::kind() const { return node_->kind; }
int KExpression::first() const { return node_->a; }
int KExpression::second() const { return node_->b; }
int KExpression::vertex_count() const { return node_->vertices; }

KExpression KExpression::create(int label) {
    check_label(label);
    return KExpression(std::make_shared<const Node>(Node{Kind::Create, label, 0, 1, {}}));
}

KExpression KExpression::disjoint_union(KExpression left, KExpression right) {
    const int vertices = left.vertex_count() + right.vertex_count();
    if (vertices > kMaxVertices) throw SizeLimitError("expression has more than 64 vertices");
    return KExpression(
        std::make_shared<const Node>(Node{Kind::Union, 0, 0, vertices, {std::move(left), std::move(right)}}));
}

KExpression KExpression::join(int i, int j, KExpression child) {
    check_label(i);
    check_label(j);
    if (i == j) throw MalformedExpressionError("join needs two distinct labels, got " + std::to_string(i) + " twice");
    const int vertices = child.vertex_count();
    return KExpression(std::make_shared<const Node>(Node{Kind::Join, i, j, vertices, {std::move(child)}}));
}

KExpression KExpression::rename(int from, int to, KExpression child) {
    check_label(from);
    check_label(to);
    const int vertices = child.vertex_count();
    return KExpression(std::make_shared<const Node>(Node{Kind::Rename, from, to, vertices, {std::move(child)}}));
}

const KExpression& KExpression::left() const {
    if (node_->children.empty()) throw std::logic_error("create node has no children");
    return node_->children[0];
}

const KExpression& KExpression::right() const {
    if (node_->children.size() < 2) throw std::logic_error("only union nodes have a right operand");
    return node_->children[1];
}

namespace {

struct Builder {
    std::vector<std::uint64_t> rows;
    std::vector<int> labels;

    // Builds e at vertex offset rows.size(); returns the vertex range as a mask.
    std::uint64_t build(const KExpression& e) {
        switch (e.kind()) {
            case KExpression::Kind::Create: {
                const int v = static_cast<int>(rows.size());
                rows.push_back(0);
                labels.push_back(e.first());
                return std::uint64_t{1} << v;
            }
            case KExpression::Kind::Union:
                return build(e.left()) | build(e.right());
            case KExpression::Kind::Join: {
                const std::uint64_t span = build(e.left());
                const std::uint64_t with_i = with_label(span, e.first());
                const std::uint64_t with_j = with_label(span, e.second());
                for (int v : VertexSet(with_i)) rows[v] |= with_j;
                for (int v : VertexSet(with_j)) rows[v] |= with_i;
                return span;
            }
            case KExpression::Kind::Rename: {
                const std::uint64_t span = build(e.left());
                for (int v : VertexSet(with_label(span, e.first()))) labels[v] = e.second();
                return span;
            }
        }
        throw std::logic_error("unknown expression node");
    }

    std::uint64_t with_label(std::uint64_t span, int label) const {
        std::uint64_t out = 0;
        for (int v : VertexSet(span)) {
            if (labels[v] == label) out |= std::uint64_t{1} << v;
        }
        return out;
    }
};

void collect_labels(const KExpression& e, std::set<int>& out) {
    switch (e.kind()) {
        case KExpression::Kind::Create:
            out.insert(e.first());
            return;
        case KExpression::Kind::Union:
            collect_labels(e.left(), out);
            collect_labels(e.right(), out);
            return;
        case KExpression::Kind::Join:
        case KExpression::Kind::Rename:
            out.insert(e.first());
            out.insert(e.second());
            collect_labels(e.left(), out);
            return;
    }
}

void write(const KExpression& e, std::string& out) {
    switch (e.kind()) {
        case KExpression::Kind::Create:
            out += "v(" + std::to_string(e.first()) + ")";
            return;
        case KExpression::Kind::Union:
            out += "u(";
            write(e.left(), out);
            out += ",";
            write(e.right(), out);
            out += ")";
            return;
        case KExpression::Kind::Join:
            out += "j(" + std::to_string(e.first()) + "," + std::to_string(e.second()) + ",";
            write(e.left(), out);
            out += ")";
            return;
        case KExpression::Kind::Rename:
            out += "r(" + std::to_string(e.first()) + ">" + std::to_string(e.second()) + ",";
            write(e.left(), out);
            out += ")";
            return;
    }
}

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    KExpression parse() {
        KExpression e = expr(0);
        skip();
        if (pos_ != text_.size()) error("trailing input");
        return e;
    }

private:
    KExpression expr(int depth) {
        if (depth > 4096) error("expression nested too deeply");
        skip();
        if (pos_ >= text_.size()) error("unexpected end of input");
        const char op = text_[pos_++];
        expect('(');
        switch (op) {
            case 'v': {
                const int i = label();
                expect(')');
                return KExpression::create(i);
            }
            case 'u': {
                KExpression l = expr(depth + 1);
                expect(',');
                KExpression r = expr(depth + 1);
                expect(')');
                return KExpression::disjoint_union(std::move(l), std::move(r));
            }
            case 'j': {
                const int i = label();
                expect(',');
                const int j = label();
                expect(',');
                KExpression c = expr(depth + 1);
                expect(')');
                return KExpression::join(i, j, std::move(c));
            }
            case 'r': {
                const int i = label();
                expect('>');
                const int j = label();
                expect(',');
                KExpression c = expr(depth + 1);
                expect(')');
                return KExpression::rename(i, j, std::move(c));
            }
            default:
                --pos_;
                error(std::string("unknown operation '") + op + "'");
        }
    }

    int label() {
        skip();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("expected a label");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_++] - '0');
            if (value > 1'000'000) error("label too large");
        }
        return static_cast<int>(value);
    }

    void expect(char c) {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c) error(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void error(const std::string& why) const {
        throw MalformedExpressionError("k-expression: " + why + " at position " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

LabelledGraph evaluate(const KExpression& e) {
    Builder b;
    b.build(e);
    return {Graph::from_rows(std::move(b.rows)), std::move(b.labels)};
}

int width(const KExpression& e) {
    std::set<int> labels;
    collect_labels(e, labels);
    return static_cast<int>(labels.size());
}

std::string to_string(const KExpression& e) {
    std::string out;
    write(e, out);
    return out;
}

KExpression parse_kexpression(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace splitcw
