#include <gtest/gtest.h>

#include "oracles.hpp"
#include "splitcw/canonical.hpp"
#include "splitcw/catalog.hpp"
#include "splitcw/enumerate.hpp"
#include "splitcw/io.hpp"
#include "splitcw/split.hpp"
#include "splitcw/subgraph.hpp"

using namespace splitcw;

TEST(IsSplit, Examples) {
    EXPECT_FALSE(is_split(named_graph("C4")));
    EXPECT_FALSE(is_split(named_graph("2K2")));
    EXPECT_FALSE(is_split(named_graph("C5")));
    EXPECT_TRUE(is_split(named_graph("P4")));
    EXPECT_TRUE(is_split(catalog(Named::Bull)));
    EXPECT_TRUE(is_split(Graph(0)));
}

TEST(IsSplit, AgreesWithForbiddenSubgraphsAndPartitions) {
    const auto two_k2 = oracle::matrix(named_graph("2K2"));
    const auto c4 = oracle::matrix(named_graph("C4"));
    const auto c5 = oracle::matrix(named_graph("C5"));
    for (int n = 0; n <= 7; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const auto m = oracle::matrix(g);
            const bool free = !oracle::embeds(m, two_k2) && !oracle::embeds(m, c4) && !oracle::embeds(m, c5);
            EXPECT_EQ(is_split(g), free) << to_graph6(g);
            EXPECT_EQ(is_split(g), !split_partitions(g).empty()) << to_graph6(g);
        }
    }
}

TEST(SplitPartitions, Examples) {
    EXPECT_EQ(split_partitions(catalog(Named::Q)).size(), 1U);
    const SplitPartition q = split_partitions(catalog(Named::Q)).front();
    EXPECT_EQ(q.clique, (VertexSet{0, 1, 2}));
    EXPECT_EQ(split_partitions(named_graph("P3")),
              (std::vector<SplitPartition>{{VertexSet{1}, VertexSet{0, 2}},
                                           {VertexSet{0, 1}, VertexSet{2}},
                                           {VertexSet{1, 2}, VertexSet{0}}}));
    EXPECT_EQ(split_partitions(named_graph("K2")),
              (std::vector<SplitPartition>{{VertexSet{0}, VertexSet{1}},
                                           {VertexSet{1}, VertexSet{0}},
                                           {VertexSet{0, 1}, {}}}));
    EXPECT_EQ(split_partitions(Graph(0)), (std::vector<SplitPartition>{{{}, {}}}));
    EXPECT_TRUE(split_partitions(named_graph("C4")).empty());
}

TEST(SplitPartitions, MatchBruteForce) {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_split_graphs(n)) {
            std::vector<SplitPartition> brute;
            for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
                const VertexSet kk(k);
                const VertexSet ii = g.vertices() - kk;
                if (is_clique(g, kk) && is_independent(g, ii)) brute.push_back({kk, ii});
            }
            auto lib = split_partitions(g);
            EXPECT_EQ(lib.size(), brute.size());
            for (const auto& p : brute) EXPECT_NE(std::find(lib.begin(), lib.end(), p), lib.end());
            EXPECT_TRUE(std::is_sorted(lib.begin(), lib.end(), [](const SplitPartition& a, const SplitPartition& b) {
                if (a.clique.size() != b.clique.size()) return a.clique.size() < b.clique.size();
                return a.clique.to_vector() < b.clique.to_vector();
            }));
        }
    }
}

TEST(SplitPartitions, Validation) {
    const Graph p4 = named_graph("P4");
    EXPECT_TRUE(is_valid_partition(p4, {VertexSet{1, 2}, VertexSet{0, 3}}));
    EXPECT_FALSE(is_valid_partition(p4, {VertexSet{0, 1, 2}, VertexSet{3}}));
    EXPECT_THROW(check_partition(p4, {VertexSet{1, 2}, VertexSet{0}}), InvalidPartitionError);
    EXPECT_THROW(check_partition(p4, {VertexSet{1, 2}, VertexSet{0, 2, 3}}), InvalidPartitionError);
    EXPECT_THROW(check_partition(p4, {VertexSet{1}, VertexSet{0, 2, 3}}), InvalidPartitionError);
    EXPECT_THROW(check_partition(p4, {VertexSet{1, 2}, VertexSet{0, 3, 4}}), std::out_of_range);
}

TEST(PartitionsIsomorphic, Examples) {
    const Graph k2 = named_graph("K2");
    EXPECT_TRUE(partitions_isomorphic(k2, {VertexSet{0}, VertexSet{1}}, {VertexSet{1}, VertexSet{0}}));
    const Graph p3 = named_graph("P3");
    EXPECT_TRUE(partitions_isomorphic(p3, {VertexSet{0, 1}, VertexSet{2}}, {VertexSet{1, 2}, VertexSet{0}}));
    EXPECT_FALSE(partitions_isomorphic(p3, {VertexSet{1}, VertexSet{0, 2}}, {VertexSet{0, 1}, VertexSet{2}}));
    const Graph p4 = named_graph("P4");
    EXPECT_THROW(partitions_isomorphic(p4, {VertexSet{1}, VertexSet{0, 2, 3}}, {VertexSet{1, 2}, VertexSet{0, 3}}),
                 InvalidPartitionError);
}

TEST(PartitionContains, Examples) {
    const Graph bull = catalog(Named::Bull);
    const SplitPartition bp{VertexSet{0, 1, 2}, VertexSet{3, 4}};
    EXPECT_TRUE(partition_contains(bull, bp, bull, bp));
    EXPECT_TRUE(partition_contains(named_graph("P3"), {VertexSet{1}, VertexSet{0, 2}}, Graph(1), {VertexSet{0}, {}}));
    EXPECT_FALSE(partition_contains(named_graph("P3"), {VertexSet{1}, VertexSet{0, 2}}, named_graph("K2"),
                                    {VertexSet{0, 1}, {}}));
    // Q's triangle j1 j2 j3 with i1 on j1 and i2 on j2 is an induced bull respecting both partitions.
    const Graph q = catalog(Named::Q);
    EXPECT_TRUE(partition_contains(q, split_partitions(q).front(), bull, bp));
    EXPECT_EQ(induced_subgraph(q, VertexSet{0, 1, 2, 3, 4}), bull);
}

TEST(Bipartite, QIsP2PlusP4) {
    const Graph q = catalog(Named::Q);
    const SplitPartition p = split_partitions(q).front();
    const LabelledBipartiteGraph b = to_labelled_bipartite(q, p, CliqueColour::Black);
    EXPECT_EQ(b.black(), (VertexSet{0, 1, 2}));
    EXPECT_TRUE(is_independent(b.graph(), b.black()));
    EXPECT_EQ(b.graph().edges(), (std::vector<Edge>{{0, 3}, {1, 4}, {1, 5}, {2, 5}}));
    EXPECT_TRUE(labelled_isomorphic(b, black_maximal_labelling(named_graph("P2+P4"))));
    const auto [g, back] = from_labelled_bipartite(b, CliqueColour::Black);
    EXPECT_EQ(g, q);
    EXPECT_EQ(back, p);
}

TEST(Bipartite, Conventions) {
    const Graph k3 = named_graph("K3");
    const LabelledBipartiteGraph b = to_labelled_bipartite(k3, {k3.vertices(), {}}, CliqueColour::Black);
    EXPECT_EQ(b.graph(), Graph(3));
    EXPECT_EQ(b.black(), k3.vertices());
    EXPECT_TRUE(to_labelled_bipartite(k3, {k3.vertices(), {}}, CliqueColour::White).black().empty());
    const auto [g, p] = from_labelled_bipartite(LabelledBipartiteGraph(Graph(1), VertexSet{0}), CliqueColour::Black);
    EXPECT_EQ(g, Graph(1));
    EXPECT_EQ(p, (SplitPartition{VertexSet{0}, {}}));
    EXPECT_THROW(to_labelled_bipartite(named_graph("P4"), {VertexSet{0, 1}, VertexSet{2, 3}}, CliqueColour::Black),
                 InvalidPartitionError);
}

TEST(Bipartite, RoundTripOnEveryPartitionUpToSeven) {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerate_split_graphs(n)) {
            for (const SplitPartition& p : split_partitions(g)) {
                for (CliqueColour c : {CliqueColour::Black, CliqueColour::White}) {
                    const auto [back, q] = from_labelled_bipartite(to_labelled_bipartite(g, p, c), c);
                    EXPECT_EQ(back, g);
                    EXPECT_EQ(q, p);
                }
            }
        }
    }
}

TEST(ApexExtension, Examples) {
    EXPECT_EQ(key_lemma_extension(Graph(1), {VertexSet{0}, {}}), named_graph("K2"));
    EXPECT_EQ(key_lemma_extension(Graph(3), {{}, VertexSet{0, 1, 2}}), Graph(4));
    EXPECT_THROW(key_lemma_extension(named_graph("C4"), {VertexSet{0, 1}, VertexSet{2, 3}}), InvalidPartitionError);
}

TEST(ApexExtension, RebuildsF5AndF4) {
    const auto [q, qp] = from_labelled_bipartite(black_maximal_labelling(named_graph("P2+P4")), CliqueColour::Black);
    EXPECT_TRUE(are_isomorphic(q, catalog(Named::Q)));
    EXPECT_TRUE(are_isomorphic(key_lemma_extension(q, qp), catalog(Named::F5)));

    const LabelledBipartiteGraph bbar = opposite_labelling(black_maximal_labelling(named_graph("P1+P5")));
    const auto [h, hp] = from_labelled_bipartite(bbar, CliqueColour::Black);
    EXPECT_EQ(hp.clique.size(), 2);
    EXPECT_TRUE(are_isomorphic(key_lemma_extension(h, hp), catalog(Named::F4)));
}

TEST(Split, ComplementSwapsSidesUpToEight) {
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : enumerate_split_graphs(n)) {
            const Graph c = complement(g);
            ASSERT_TRUE(is_split(c)) << to_graph6(g);
            for (const SplitPartition& p : split_partitions(g)) EXPECT_TRUE(is_valid_partition(c, {p.independent, p.clique}));
        }
    }
}
