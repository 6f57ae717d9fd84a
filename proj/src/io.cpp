#include "splitcw/io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

namespace splitcw {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_order(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& why) {
    throw FormatError("graph6: " + why + " at byte " + std::to_string(pos) + " of \"" + std::string(text) + "\"");
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_order(out, static_cast<std::uint64_t>(n));
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    std::string_view body = text;
    if (body.starts_with(kHeader)) body.remove_prefix(kHeader.size());
    if (body.ends_with('\n')) body.remove_suffix(1);
    const std::size_t offset = text.size() - body.size() - (text.ends_with('\n') ? 1 : 0);
    if (body.empty()) fail(text, offset, "empty record");
    for (std::size_t i = 0; i < body.size(); ++i) {
        auto c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126) fail(text, offset + i, "byte " + std::to_string(c) + " outside 63..126");
    }

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto digit = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(body[i]) - 63); };
    if (body[0] != 126) {
        n = digit(0);
        pos = 1;
    } else if (body.size() >= 2 && body[1] != 126) {
        if (body.size() < 4) fail(text, offset, "truncated vertex count");
        n = (digit(1) << 12) | (digit(2) << 6) | digit(3);
        if (n <= 62) fail(text, offset, "non-canonical vertex count");
        pos = 4;
    } else {
        if (body.size() < 8) fail(text, offset, "truncated vertex count");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | digit(i);
        if (n <= 258047) fail(text, offset, "non-canonical vertex count");
        pos = 8;
    }

    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t expected = (pairs + 5) / 6;
    if (body.size() - pos != expected) {
        fail(text, offset + pos,
             "expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) + ", found " +
                 std::to_string(body.size() - pos));
    }
    if (n > static_cast<std::uint64_t>(kMaxVertices)) {
        throw SizeLimitError("graph6 record has " + std::to_string(n) + " vertices; limit is " +
                             std::to_string(kMaxVertices));
    }

    const int order = static_cast<int>(n);
    std::vector<std::uint64_t> rows(order, 0);
    std::uint64_t k = 0;
    for (int v = 1; v < order; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const std::uint64_t byte = digit(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1U) {
                rows[u] |= std::uint64_t{1} << v;
                rows[v] |= std::uint64_t{1} << u;
            }
        }
    }
    if (k % 6 != 0) {
        const std::uint64_t last = digit(body.size() - 1);
        const std::uint64_t padding_mask = (std::uint64_t{1} << (6 - k % 6)) - 1;
        if ((last & padding_mask) != 0) fail(text, offset + body.size() - 1, "non-zero padding bits");
    }
    return Graph::from_rows(std::move(rows));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string extra;
        if (n < 0) {
            if (!(fields >> n) || n < 0 || (fields >> extra)) {
                throw FormatError("edge list: line " + std::to_string(line_no) + ": expected a vertex count");
            }
            continue;
        }
        int u = 0;
        int v = 0;
        if (!(fields >> u >> v) || (fields >> extra)) {
            throw FormatError("edge list: line " + std::to_string(line_no) + ": expected \"u v\"");
        }
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
            throw FormatError("edge list: line " + std::to_string(line_no) + ": invalid edge " + std::to_string(u) +
                              " " + std::to_string(v));
        }
        edges.emplace_back(u, v);
    }
    if (n < 0) throw FormatError("edge list: missing vertex count");
    return Graph(n, edges);
}

}  // namespace splitcw
