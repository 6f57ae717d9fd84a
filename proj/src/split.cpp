#include "splitcw/split.hpp"

#include <algorithm>


namespace splitcw {

bool is_valid_partition(const Graph& g, const SplitPartition& p) {
    return (p.clique | p.independent) == g.vertices() && !p.clique.intersects(p.independent) &&
           is_clique(g, p.clique) && is_independent(g, p.independent);
}

void check_partition(const Graph& g, const SplitPartition& p) {
    check_vertex_set(g, p.clique);
    check_vertex_set(g, p.independent);
    if (p.clique.intersects(p.independent)) throw InvalidPartitionError("K and I overlap");
    if ((p.clique | p.independent) != g.vertices()) throw InvalidPartitionError("K and I do not cover the vertices");
    if (!is_clique(g, p.clique)) throw InvalidPartitionError("K is not a clique");
    if (!is_independent(g, p.independent)) throw InvalidPartitionError("I is not independent");
}

bool is_split(const Graph& g) {
    static const Graph two_k2(4, {{0, 1}, {2, 3}});
    static const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    static const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const Graph forbidden[] = {two_k2, c4, c5};
    return is_free(g, forbidden);
}

std::vector<SplitPartition> split_partitions(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw SizeLimitError("split partition enumeration supports at most 24 vertices");
    std::vector<SplitPartition> out;
    const VertexSet all = g.vertices();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        SplitPartition p{VertexSet(mask), all - VertexSet(mask)};
        if (is_clique(g, p.clique) && is_independent(g, p.independent)) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const SplitPartition& a, const SplitPartition& b) {
        if (a.clique.size() != b.clique.size()) return a.clique.size() < b.clique.size();
        return a.clique.to_vector() < b.clique.to_vector();
    });
    return out;
}

bool partitions_isomorphic(const Graph& g, const SplitPartition& p, const SplitPartition& q) {
    check_partition(g, p);
    check_partition(g, q);
    if (p.clique.size() != q.clique.size()) return false;
    EmbeddingConstraints c;
    c.allowed.resize(g.order());
    for (int v = 0; v < g.order(); ++v) c.allowed[v] = p.clique.contains(v) ? q.clique : q.independent;
    return contains_induced(g, g, c).has_value();
}

bool partition_contains(const Graph& g, const SplitPartition& pg, const Graph& h, const SplitPartition& ph) {
    check_partition(g, pg);
    check_partition(h, ph);
    EmbeddingConstraints c;
    c.allowed.resize(h.order());
    for (int v = 0; v < h.order(); ++v) c.allowed[v] = ph.clique.contains(v) ? pg.clique : pg.independent;
    return contains_induced(g, h, c).has_value();
}

LabelledBipartiteGraph to_labelled_bipartite(const Graph& g, const SplitPartition& p, CliqueColour clique_colour) {
    check_partition(g, p);
    Graph bip = subgraph_complementation(g, p.clique);
    return LabelledBipartiteGraph(std::move(bip), clique_colour == CliqueColour::Black ? p.clique : p.independent);
}

std::pair<Graph, SplitPartition> from_labelled_bipartite(const LabelledBipartiteGraph& b, CliqueColour clique_colour) {
    const VertexSet clique = clique_colour == CliqueColour::Black ? b.black() : b.white();
    Graph g = subgraph_complementation(b.graph(), clique);
    return {std::move(g), SplitPartition{clique, b.graph().vertices() - clique}};
}

Graph key_lemma_extension(const Graph& h, const SplitPartition& p) {
    check_partition(h, p);
    return add_vertex(h, p.clique);
}

}  // namespace splitcw
