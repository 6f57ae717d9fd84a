#include "splitcw/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>
#include <utility>

#include "splitcw/canonical.hpp"
#include "splitcw/modular.hpp"
#include "splitcw/split.hpp"
#include "splitcw/subgraph.hpp"

namespace splitcw {

namespace {

void check_n(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > kEnumerationLimit) {
        throw SizeLimitError("enumeration supports at most " + std::to_string(kEnumerationLimit) + " vertices");
    }
}

// Every graph on n vertices is a graph on n-1 vertices plus one vertex, so
// extending each class by every neighbourhood reaches every class. The same
// holds within any hereditary family such as split graphs.
std::vector<Graph> extend(const std::vector<Graph>& smaller, bool (*keep)(const Graph&)) {
    std::map<CanonicalCode, Graph> found;
    for (const Graph& g : smaller) {
        const std::uint64_t count = std::uint64_t{1} << g.order();
        for (std::uint64_t nbrs = 0; nbrs < count; ++nbrs) {
            Graph h = add_vertex(g, VertexSet(nbrs));
            if (keep && !keep(h)) continue;
            CanonicalCode code = canonical_code(h);
            if (!found.contains(code)) found.emplace(std::move(code), canonical_form(h));
        }
    }
    std::vector<Graph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

struct Memo {
    std::mutex mutex;
    std::vector<std::vector<Graph>> layers;
};

const std::vector<Graph>& memoised(Memo& memo, int n, bool (*keep)(const Graph&)) {
    check_n(n);
    std::lock_guard lock(memo.mutex);
    if (memo.layers.empty()) memo.layers.push_back({Graph(0)});
    while (static_cast<int>(memo.layers.size()) <= n) memo.layers.push_back(extend(memo.layers.back(), keep));
    return memo.layers[n];
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n) {
    static Memo memo;
    return memoised(memo, n, nullptr);
}

const std::vector<Graph>& enumerate_split_graphs(int n) {
    static Memo memo;
    return memoised(memo, n, [](const Graph& g) { return is_split(g); });
}

bool GraphFilter::accepts(const Graph& g) const {
    if (split && !is_split(g)) return false;
    if (star_forest && !is_star_forest(g)) return false;
    if (!is_free(g, free_of)) return false;
    if (prime && !is_prime(g)) return false;
    return true;
}

std::vector<Graph> enumerate_filtered(int n, const GraphFilter& filter) {
    const auto& source = filter.split ? enumerate_split_graphs(n) : enumerate_graphs(n);
    std::vector<Graph> out;
    for (const Graph& g : source) {
        if (filter.accepts(g)) out.push_back(g);
    }
    return out;
}

}  // namespace splitcw
