#include "splitcw/catalog.hpp"

#include <cctype>
#include <stdexcept>

namespace splitcw {

namespace {

enum { a, b, c, d, e, f };

Graph k4_plus(int n, std::initializer_list<Edge> extra) {
    std::vector<Edge> edges{{a, b}, {a, c}, {a, d}, {b, c}, {b, d}, {c, d}};
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph(n, edges);
}

int param(std::span<const int> params, std::size_t i, const char* what) {
    if (params.size() <= i) throw std::invalid_argument(std::string("missing parameter for ") + what);
    return params[i];
}

void no_params(std::span<const int> params, const char* what) {
    if (!params.empty()) throw std::invalid_argument(std::string(what) + " takes no parameters");
}

}  // namespace

Graph catalog(Named name, std::span<const int> params) {
    switch (name) {
        case Named::Path: {
            const int r = param(params, 0, "P_r");
            if (r < 0) throw std::invalid_argument("P_r needs r >= 0");
            std::vector<Edge> edges;
            for (int i = 0; i + 1 < r; ++i) edges.emplace_back(i, i + 1);
            return Graph(r, edges);
        }
        case Named::Cycle: {
            const int r = param(params, 0, "C_r");
            if (r < 3) throw std::invalid_argument("C_r needs r >= 3");
            std::vector<Edge> edges;
            for (int i = 0; i < r; ++i) edges.emplace_back(i, (i + 1) % r);
            return Graph(r, edges);
        }
        case Named::Complete: {
            const int r = param(params, 0, "K_r");
            if (r < 0) throw std::invalid_argument("K_r needs r >= 0");
            return complement(Graph(r));
        }
        case Named::Star: {
            const int s = param(params, 0, "K_{1,s}");
            if (s < 0) throw std::invalid_argument("K_{1,s} needs s >= 0");
            std::vector<Edge> edges;
            for (int i = 1; i <= s; ++i) edges.emplace_back(0, i);
            return Graph(s + 1, edges);
        }
        case Named::SubdividedClaw: {
            const int h = param(params, 0, "S_{h,i,j}");
            const int i = param(params, 1, "S_{h,i,j}");
            const int j = param(params, 2, "S_{h,i,j}");
            if (params.size() != 3 || h < 1 || h > i || i > j) {
                throw std::invalid_argument("S_{h,i,j} needs 1 <= h <= i <= j");
            }
            std::vector<Edge> edges;
            int next = 1;
            for (int len : {h, i, j}) {
                int prev = 0;
                for (int step = 0; step < len; ++step, ++next) {
                    edges.emplace_back(prev, next);
                    prev = next;
                }
            }
            return Graph(next, edges);
        }
        case Named::Bull:
            no_params(params, "bull");
            return Graph(5, {{a, b}, {b, c}, {c, a}, {a, d}, {b, e}});
        case Named::Dart:
            no_params(params, "dart");
            return Graph(5, {{a, b}, {b, c}, {c, a}, {a, d}, {b, e}, {b, d}});
        case Named::F1:
            no_params(params, "F1");
            return k4_plus(6, {{e, a}, {f, d}});
        case Named::F2:
            no_params(params, "F2");
            return k4_plus(6, {{e, a}, {f, c}, {f, d}});
        case Named::F3: {
            no_params(params, "F3");
            constexpr int y = 4, z = 5;
            return k4_plus(6, {{z, a}, {z, b}, {y, b}});
        }
        case Named::Q: {
            no_params(params, "Q");
            constexpr int j1 = 0, j2 = 1, j3 = 2, i1 = 3, i2 = 4, i3 = 5;
            return Graph(6, {{j1, j2}, {j1, j3}, {j2, j3}, {i1, j1}, {i2, j2}, {i3, j2}, {i3, j3}});
        }
        case Named::F4: {
            no_params(params, "F4");
            constexpr int x = 4, y = 5;
            return Graph(7, {{a, b}, {b, d}, {d, c}, {c, a}, {a, d}, {y, a}, {x, d}});
        }
        case Named::F5: {
            no_params(params, "F5");
            constexpr int ff = 4, y = 5, z = 6;
            return k4_plus(7, {{z, a}, {z, b}, {y, b}, {ff, d}});
        }
    }
    throw std::invalid_argument("unknown catalog name");
}

namespace {

// expr := term ('+' term)* ; term := [count] atom ; atom := "co-" atom | "(" expr ")" | base
class NameParser {
public:
    explicit NameParser(std::string_view text) : text_(text) {}

    Graph parse() {
        Graph g = expr();
        if (pos_ != text_.size()) error("unexpected trailing input");
        return g;
    }

private:
    Graph expr() {
        Graph g = term();
        while (peek() == '+') {
            ++pos_;
            g = disjoint_union(g, term());
        }
        return g;
    }

    Graph term() {
        int count = 1;
        // A leading count only applies when followed by a letter or '(' ("2K2", "3P1").
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t save = pos_;
            int value = number();
            if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
                count = value;
            } else {
                pos_ = save;
                error("expected a graph name");
            }
        }
        Graph g = atom();
        return count == 1 ? g : multiple(count, g);
    }

    Graph atom() {
        if (text_.substr(pos_).starts_with("co-")) {
            pos_ += 3;
            return complement(atom());
        }
        if (peek() == '(') {
            ++pos_;
            Graph g = expr();
            if (peek() != ')') error("expected ')'");
            ++pos_;
            return g;
        }
        for (auto [word, named] : {std::pair{"bull", Named::Bull}, std::pair{"dart", Named::Dart}}) {
            if (text_.substr(pos_).starts_with(word)) {
                pos_ += std::string_view(word).size();
                return catalog(named);
            }
        }
        const char head = peek();
        ++pos_;
        switch (head) {
            case 'F': {
                const int i = number();
                static constexpr Named fs[] = {Named::F1, Named::F2, Named::F3, Named::F4, Named::F5};
                if (i < 1 || i > 5) error("F index must be 1..5");
                return catalog(fs[i - 1]);
            }
            case 'Q':
                return catalog(Named::Q);
            case 'P': {
                const int r = number();
                return catalog(Named::Path, std::vector<int>{r});
            }
            case 'C': {
                const int r = number();
                return catalog(Named::Cycle, std::vector<int>{r});
            }
            case 'K': {
                const int r = number();
                if (peek() == ',') {
                    ++pos_;
                    const int s = number();
                    if (r != 1) error("only stars K1,s are supported");
                    return catalog(Named::Star, std::vector<int>{s});
                }
                return catalog(Named::Complete, std::vector<int>{r});
            }
            case 'S': {
                std::vector<int> hij{number()};
                for (int k = 0; k < 2; ++k) {
                    if (peek() != ',') error("S needs three comma-separated lengths");
                    ++pos_;
                    hij.push_back(number());
                }
                return catalog(Named::SubdividedClaw, hij);
            }
            default:
                --pos_;
                error("unknown graph name");
        }
    }

    int number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected a number");
        int value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000) error("number too large");
            ++pos_;
        }
        return value;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void error(const std::string& why) const {
        throw std::invalid_argument("graph name \"" + std::string(text_) + "\": " + why + " at position " +
                                    std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph named_graph(std::string_view expression) {
    if (expression.starts_with('@')) expression.remove_prefix(1);
    return NameParser(expression).parse();
}

}  // namespace splitcw
