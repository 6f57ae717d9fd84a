#include "splitcw/claims.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

#include "splitcw/canonical.hpp"
#include "splitcw/catalog.hpp"
#include "splitcw/io.hpp"
#include "splitcw/kexpr.hpp"
#include "splitcw/modular.hpp"
#include "splitcw/subgraph.hpp"

namespace splitcw {

namespace {

struct Found {
    std::optional<SplitPartition> partition;
    NamedVertices witness;
    std::string detail;
};

struct GraphResult {
    ClaimCounts counts;
    std::optional<Found> found;
};

using Checker = std::function<GraphResult(const Graph&, bool negative)>;
using FamilyFn = std::function<std::vector<Graph>(int n, bool negative)>;

struct ClaimDef {
    ClaimInfo info;
    int min_n;
    FamilyFn family;
    Checker check;
};

std::vector<int> members(VertexSet s) { return s.to_vector(); }

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
    if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(count, 1)));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    }
}

std::vector<Graph> split_family(int n, const std::vector<Graph>& free_of, bool prime) {
    GraphFilter filter;
    filter.split = true;
    filter.free_of = free_of;
    filter.prime = prime;
    return enumerate_filtered(n, filter);
}

FamilyFn split_free_family(const char* pattern) {
    return [pattern](int n, bool negative) {
        if (negative) return split_family(n, {}, false);
        return split_family(n, {named_graph(pattern)}, false);
    };
}

// Runs body on each split partition of g in order, stopping at the first failure.
GraphResult over_partitions(const Graph& g, const std::function<std::optional<Found>(const SplitPartition&,
                                                                                      ClaimCounts&)>& body) {
    GraphResult result;
    result.counts.graphs = 1;
    for (const SplitPartition& p : split_partitions(g)) {
        if (auto f = body(p, result.counts)) {
            f->partition = p;
            result.found = std::move(f);
            break;
        }
    }
    return result;
}

bool comparable(VertexSet a, VertexSet b) { return a.subset_of(b) || b.subset_of(a); }

struct Special {
    VertexSet clique;
    VertexSet independent;
};

// Induced copies of pattern with the listed pattern vertices in p.clique and
// the rest in p.independent, deduplicated by vertex sets.
std::vector<Special> special_copies(const Graph& g, const SplitPartition& p, const Graph& pattern,
                                    VertexSet pattern_clique) {
    EmbeddingConstraints c;
    for (int v = 0; v < pattern.order(); ++v) c.allowed.push_back(pattern_clique.contains(v) ? p.clique : p.independent);
    std::vector<Special> out;
    for_each_induced_embedding(g, pattern, c, [&](const Embedding& e) {
        Special s;
        for (int v = 0; v < pattern.order(); ++v) {
            if (pattern_clique.contains(v)) s.clique = s.clique.with(e.map[v]);
            else s.independent = s.independent.with(e.map[v]);
        }
        auto same = [&](const Special& t) { return t.clique == s.clique && t.independent == s.independent; };
        if (std::none_of(out.begin(), out.end(), same)) out.push_back(s);
        return true;
    });
    return out;
}

std::vector<Special> special_bulls(const Graph& g, const SplitPartition& p) {
    return special_copies(g, p, named_graph("bull"), VertexSet{0, 1, 2});
}

std::vector<Special> special_darts(const Graph& g, const SplitPartition& p) {
    return special_copies(g, p, named_graph("dart"), VertexSet{0, 1, 2});
}

// Q copies as (j1, j2, j3, i1, i2, i3); Q has no non-trivial automorphism so
// embeddings and copies correspond one to one.
std::vector<std::vector<int>> q_copies(const Graph& g, const EmbeddingConstraints& c = {}) {
    std::vector<std::vector<int>> out;
    for_each_induced_embedding(g, named_graph("Q"), c, [&](const Embedding& e) {
        out.push_back(e.map);
        return true;
    });
    return out;
}

EmbeddingConstraints q_positioned(const SplitPartition& p) {
    return {{p.clique, p.clique, p.clique, p.independent, p.independent, p.independent}};
}

NamedVertices q_witness(const std::vector<int>& q) {
    return {{"j1", {q[0]}}, {"j2", {q[1]}}, {"j3", {q[2]}}, {"i1", {q[3]}}, {"i2", {q[4]}}, {"i3", {q[5]}}};
}

VertexSet nbrs(const Graph& g, int v) { return g.neighbours(v); }

Graph reduce(const Graph& g, const SplitPartition& p, bool skip_deletion) {
    std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
    VertexSet keep = g.vertices();
    VertexSet independent = p.independent;
    if (!skip_deletion) {
        for (int x : p.clique) {
            if ((nbrs(g, x) & independent).size() == 2) {
                const VertexSet gone = nbrs(g, x) & independent;
                keep = keep - gone;
                independent = independent - gone;
                break;
            }
        }
    }
    Graph h = induced_subgraph(g, keep);
    // Positions of the kept vertices in h.
    std::vector<int> at(g.order(), -1);
    int next = 0;
    for (int v : keep) at[v] = next++;
    VertexSet k_h, i_h;
    for (int v : p.clique) k_h = k_h.with(at[v]);
    for (int v : independent) i_h = i_h.with(at[v]);
    VertexSet heavy;
    for (int v : k_h) {
        if ((h.neighbours(v) & i_h).size() > 1) heavy = heavy.with(v);
    }
    h = bipartite_complementation(h, heavy, i_h);
    return subgraph_complementation(h, k_h);
}

// ---------------------------------------------------------------------------

GraphResult check_rp1_bound(const Graph& g, bool negative) {
    GraphResult r;
    r.counts.graphs = 1;
    const int alpha = independence_number(g);
    const int cw = cached_clique_width(g);
    const int bound = negative ? alpha : alpha + 2;
    ++r.counts.checks;
    if (cw > bound) {
        r.found = Found{std::nullopt, {},
                        "cw = " + std::to_string(cw) + " exceeds " + std::to_string(bound) + " at r = " +
                            std::to_string(alpha + 1)};
        return r;
    }
    const auto solved = cw_at_most(g, cw);
    if (!solved || width(*solved) > cw || !are_isomorphic(evaluate(*solved).graph, g)) {
        r.found = Found{std::nullopt, {}, "solver witness does not rebuild the graph"};
        return r;
    }
    for (const SplitPartition& p : split_partitions(g)) {
        ++r.counts.partitions;
        for (int rr = alpha + 1; rr <= g.order() + 1; ++rr) {
            ++r.counts.checks;
            const KExpression e = build_rp1_expression(g, p, rr);
            if (width(e) > rr + 1 || !are_isomorphic(evaluate(e).graph, g)) {
                r.found = Found{p, {}, "constructed expression fails at r = " + std::to_string(rr)};
                return r;
            }
        }
    }
    return r;
}

GraphResult check_lem2(const Graph& g, bool negative) {
    GraphResult r;
    r.counts.graphs = 1;
    ++r.counts.checks;
    const int cw = cached_clique_width(g);
    int best = 0;
    Graph arg;
    for (const Graph& h : prime_induced_subgraphs(g)) {
        if (negative && h.order() == g.order()) continue;
        const int c = cached_clique_width(h);
        if (c > best) {
            best = c;
            arg = h;
        }
    }
    if (best != cw) {
        r.found = Found{std::nullopt, {},
                        "cw = " + std::to_string(cw) + " but the largest over prime induced subgraphs is " +
                            std::to_string(best) + (arg.order() > 0 ? " (" + to_graph6(arg) + ")" : "")};
    }
    return r;
}

GraphResult check_keypart(const Graph& g, bool negative) {
    GraphResult r;
    r.counts.graphs = 1;
    const auto parts = split_partitions(g);
    r.counts.partitions = static_cast<long>(parts.size());
    for (const SplitPartition& p : parts) {
        for (const SplitPartition& q : parts) {
            if (p == q) continue;
            ++r.counts.checks;
            const int pq = (p.independent - q.independent).size();
            const int qp = (q.independent - p.independent).size();
            bool ok = negative ? pq == 0 : pq <= 1 && qp <= 1 && (pq != 1 || qp != 1 || partitions_isomorphic(g, p, q));
            if (!ok) {
                r.found = Found{p, {{"K'", members(q.clique)}, {"I'", members(q.independent)}},
                                "|I \\ I'| = " + std::to_string(pq) + ", |I' \\ I| = " + std::to_string(qp)};
                return r;
            }
        }
    }
    return r;
}

GraphResult check_f1_obs1(const Graph& g, bool) {
    return over_partitions(g, [&](const SplitPartition& p, ClaimCounts& c) -> std::optional<Found> {
        ++c.partitions;
        for (int s : p.independent) {
            for (int t : p.independent) {
                if (t <= s) continue;
                const VertexSet common = p.clique - nbrs(g, s) - nbrs(g, t);
                if (common.size() < 2) continue;
                ++c.checks;
                if (!comparable(nbrs(g, s), nbrs(g, t))) {
                    return Found{{}, {{"s", {s}}, {"t", {t}}, {"common non-neighbours", members(common)}},
                                 "neighbourhoods of s and t are incomparable"};
                }
            }
        }
        return std::nullopt;
    });
}

GraphResult check_f1_obs2(const Graph& g, bool) {
    return over_partitions(g, [&](const SplitPartition& p, ClaimCounts& c) -> std::optional<Found> {
        ++c.partitions;
        for (const Special& b : special_bulls(g, p)) {
            for (int x : p.independent) {
                ++c.checks;
                if (b.clique.subset_of(nbrs(g, x))) {
                    return Found{{}, {{"x", {x}}, {"J", members(b.clique)}, {"I_h", members(b.independent)}},
                                 "x is complete to the clique triple of a special bull"};
                }
            }
        }
        return std::nullopt;
    });
}

GraphResult check_f2_clm(const Graph& g, bool) {
    return over_partitions(g, [&](const SplitPartition& p, ClaimCounts& c) -> std::optional<Found> {
        ++c.partitions;
        for (int s : p.independent) {
            for (int t : p.independent) {
                if (t <= s) continue;
                const VertexSet ns = nbrs(g, s), nt = nbrs(g, t);
                if ((p.clique - ns - nt).empty() || comparable(ns, nt)) continue;
                ++c.checks;
                if ((ns - nt).size() != 1 || (nt - ns).size() != 1) {
                    return Found{{}, {{"s", {s}}, {"t", {t}}, {"N(s)\\N(t)", members(ns - nt)}, {"N(t)\\N(s)", members(nt - ns)}},
                                 "incomparable neighbourhoods differ by more than one vertex"};
                }
            }
        }
        return std::nullopt;
    });
}

// The three identities about an induced Q with (j1, j2, j3) in K and (i1, i2, i3) in I.
enum class QIdentity { Cover, Swap, AlmostCover };

Checker q_identity(QIdentity which) {
    return [which](const Graph& g, bool) {
        return over_partitions(g, [&](const SplitPartition& p, ClaimCounts& c) -> std::optional<Found> {
            ++c.partitions;
            for (const auto& q : q_copies(g, q_positioned(p))) {
                ++c.checks;
                const int j1 = q[0], j2 = q[1], i1 = q[3], i2 = q[4], i3 = q[5];
                bool ok = false;
                switch (which) {
                    case QIdentity::Cover: ok = (nbrs(g, i1) | nbrs(g, i3)) == p.clique; break;
                    case QIdentity::Swap: ok = nbrs(g, i1) == (nbrs(g, i2).without(j2)).with(j1); break;
                    case QIdentity::AlmostCover: ok = p.clique.without(j1).subset_of(nbrs(g, i2) | nbrs(g, i3)); break;
                }
                if (!ok) return Found{{}, q_witness(q), "identity fails for this copy of Q"};
            }
            return std::nullopt;
        });
    };
}

GraphResult check_f2_noqq(const Graph& g, bool negative) {
    GraphResult r;
    r.counts.graphs = 1;
    const auto copies = q_copies(g);
    for (std::size_t a = 0; a < copies.size(); ++a) {
        for (std::size_t b = a + 1; b < copies.size(); ++b) {
            ++r.counts.checks;
            const VertexSet va = VertexSet::from(copies[a]), vb = VertexSet::from(copies[b]);
            if (negative || !va.intersects(vb)) {
                r.found = Found{std::nullopt, {{"Q1", copies[a]}, {"Q2", copies[b]}},
                                negative ? "two distinct copies of Q" : "two vertex-disjoint copies of Q"};
                return r;
            }
        }
    }
    return r;
}

GraphResult check_f3_clm(const Graph& g, bool) {
    return over_partitions(g, [&](const SplitPartition& p, ClaimCounts& c) -> std::optional<Found> {
        ++c.partitions;
        const auto darts = special_darts(g, p);
        for (const Special& d : darts) {
            for (const Special& e : darts) {
                const bool same = d.clique == e.clique && d.independent == e.independent;
                if (!same && (d.clique | d.independent).intersects(e.clique | e.independent)) continue;
                for (int x : d.independent) {
                    ++c.checks;
                    const VertexSet seen = nbrs(g, x) & e.clique;
                    if (seen.empty() || seen == e.clique) {
                        return Found{{}, {{"x", {x}}, {"J_i", members(d.clique)}, {"J_j", members(e.clique)}},
                                     "x has no neighbour or no non-neighbour in J_j"};
                    }
                }
            }
            for (int x : p.independent) {
                ++c.checks;
                if (d.clique.subset_of(nbrs(g, x))) {
                    return Found{{}, {{"x", {x}}, {"J", members(d.clique)}, {"I_D", members(d.independent)}},
                                 "x in I is complete to the clique triple of a special dart"};
                }
            }
            for (int y : p.clique - d.clique) {
                ++c.checks;
                if (!nbrs(g, y).intersects(d.independent)) {
                    return Found{{}, {{"y", {y}}, {"J", members(d.clique)}, {"I_D", members(d.independent)}},
                                 "y in K outside the dart has no neighbour in its independent pair"};
                }
            }
        }
        return std::nullopt;
    });
}

GraphResult check_k13_deg(const Graph& g, bool) {
    return over_partitions(g, [&](const SplitPartition& p, ClaimCounts& c) -> std::optional<Found> {
        if (p.independent.size() < 6) return std::nullopt;
        ++c.partitions;
        for (int v : p.clique) {
            ++c.checks;
            const int in = (nbrs(g, v) & p.independent).size();
            const int out = p.independent.size() - in;
            if (in > 2 && out > 1) {
                return Found{{}, {{"v", {v}}, {"N(v)∩I", members(nbrs(g, v) & p.independent)}},
                             "v has " + std::to_string(in) + " neighbours and " + std::to_string(out) +
                                 " non-neighbours in I"};
            }
        }
        return std::nullopt;
    });
}

GraphResult check_star_reduction(const Graph& g, bool negative) {
    return over_partitions(g, [&](const SplitPartition& p, ClaimCounts& c) -> std::optional<Found> {
        if (p.independent.size() < 6) return std::nullopt;
        ++c.partitions;
        ++c.checks;
        const Graph out = reduce(g, p, negative);
        if (!is_star_forest(out)) return Found{{}, {}, "reduced graph " + to_graph6(out) + " is not a star forest"};
        return std::nullopt;
    });
}

GraphResult check_f1_clm1(const Graph& g, bool) {
    return over_partitions(g, [&](const SplitPartition& p, ClaimCounts& c) -> std::optional<Found> {
        ++c.partitions;
        for (int a : p.independent) {
            for (int b : p.independent) {
                if (a == b || comparable(nbrs(g, a), nbrs(g, b))) continue;
                VertexSet chain;
                for (int x : p.independent) {
                    if (nbrs(g, x).subset_of(nbrs(g, b))) chain = chain.with(x);
                }
                bool is_chain = true;
                for (int x : chain) {
                    for (int y : chain) is_chain = is_chain && comparable(nbrs(g, x), nbrs(g, y));
                }
                if (!is_chain) continue;
                ++c.checks;
                const VertexSet gain = nbrs(g, b) - nbrs(g, a);
                bool some_z = false;
                for (int z : p.clique) {
                    const VertexSet t = gain.without(z);
                    bool all_split = true;
                    for (int x : chain) {
                        const VertexSet seen = nbrs(g, x) & t;
                        all_split = all_split && (seen.empty() || seen == t);
                    }
                    if (all_split) {
                        some_z = true;
                        break;
                    }
                }
                if (!some_z) {
                    return Found{{}, {{"s_1", {a}}, {"s_i", {b}}, {"S_i", members(chain)}},
                                 "no z makes S_i homogeneous towards N(s_i) \\ (N(s_1) ∪ {z})"};
                }
            }
        }
        return std::nullopt;
    });
}

const std::vector<ClaimDef>& registry() {
    static const std::vector<ClaimDef> claims = [] {
        std::vector<ClaimDef> v;
        auto all_split = [](int n, bool) { return split_family(n, {}, false); };
        v.push_back({{"CLAIM-THM5",
                      "every split graph G with independence number below r has clique-width at most r+1, "
                      "and the constructed expression achieves it",
                      "split graphs", "bound replaced by the independence number", 2},
                     1, all_split, check_rp1_bound});
        v.push_back({{"CLAIM-LEM2", "cw(G) equals the largest cw over the prime induced subgraphs of G",
                      "all graphs for 2 <= n <= 6, split graphs for n >= 7",
                      "G itself excluded from its prime induced subgraphs", 2},
                     2,
                     [](int n, bool) {
                         return n <= 6 ? enumerate_graphs(n) : split_family(n, {}, false);
                     },
                     check_lem2});
        v.push_back({{"CLAIM-KEYPART",
                      "any two split partitions (K,I), (K',I') satisfy |I\\I'| <= 1 and |I'\\I| <= 1, and are "
                      "isomorphic when both are 1",
                      "split graphs", "require |I\\I'| = 0", 1},
                     1, all_split, check_keypart});
        v.push_back({{"CLAIM-F1-OBS1",
                      "in an F1-free split graph, two vertices of I with two common non-neighbours in K have "
                      "nested neighbourhoods",
                      "F1-free split graphs, every split partition", "F1-freeness not required", 6},
                     1, split_free_family("F1"), check_f1_obs1});
        v.push_back({{"CLAIM-F1-OBS2",
                      "in an F1-free split graph, every vertex of I has a non-neighbour in the clique triple of "
                      "every special bull",
                      "F1-free split graphs, every split partition", "F1-freeness not required", 6},
                     1, split_free_family("F1"), check_f1_obs2});
        v.push_back({{"CLAIM-F1-CLM1",
                      "in an F1-free split graph, for s_1, s_i in I with incomparable neighbourhoods such that "
                      "S_i = {x in I : N(x) within N(s_i)} is a chain, some z in K makes every vertex of S_i "
                      "complete or anti-complete to N(s_i) \\ (N(s_1) ∪ {z})",
                      "F1-free split graphs, every split partition", "F1-freeness not required", 8},
                     1, split_free_family("F1"), check_f1_clm1});
        v.push_back({{"CLAIM-F2-CLM",
                      "in an F2-free split graph, two vertices of I with a common non-neighbour in K and "
                      "incomparable neighbourhoods differ by exactly one vertex each way",
                      "F2-free split graphs, every split partition", "F2-freeness not required", 6},
                     1, split_free_family("F2"), check_f2_clm});
        v.push_back({{"CLAIM-F2-EQ1", "in an F2-free split graph, every induced Q satisfies N(i1) ∪ N(i3) = K",
                      "F2-free split graphs, every split partition", "F2-freeness not required", 7},
                     6, split_free_family("F2"), q_identity(QIdentity::Cover)});
        v.push_back({{"CLAIM-F2-EQ2",
                      "in an F2-free split graph, every induced Q satisfies N(i1) = (N(i2) \\ {j2}) ∪ {j1}",
                      "F2-free split graphs, every split partition", "F2-freeness not required", 7},
                     6, split_free_family("F2"), q_identity(QIdentity::Swap)});
        v.push_back({{"CLAIM-F2-EQ3",
                      "in an F2-free split graph, every induced Q satisfies K \\ {j1} within N(i2) ∪ N(i3)",
                      "F2-free split graphs, every split partition", "F2-freeness not required", 7},
                     6, split_free_family("F2"), q_identity(QIdentity::AlmostCover)});
        v.push_back({{"CLAIM-F2-NOQQ", "no prime F2-free split graph contains two vertex-disjoint copies of Q",
                      "prime F2-free split graphs",
                      "F2-freeness and primality not required, and any two distinct copies count", 7},
                     6,
                     [](int n, bool negative) {
                         if (negative) return split_family(n, {}, false);
                         return split_family(n, {named_graph("F2")}, true);
                     },
                     check_f2_noqq});
        v.push_back({{"CLAIM-F3-CLM",
                      "in an F3-free split graph, for special darts D_i, D_j that are equal or vertex-disjoint, "
                      "every vertex of I_i has a neighbour and a non-neighbour in J_j; moreover every vertex of I "
                      "has a non-neighbour in J_i and every vertex of K \\ J_i has a neighbour in I_i",
                      "F3-free split graphs, every split partition", "F3-freeness not required", 6},
                     5, split_free_family("F3"), check_f3_clm});
        v.push_back({{"CLAIM-K13-DEG",
                      "in a (K1,3+2P1)-free split graph with |I| >= 6, every vertex of K has at most two "
                      "neighbours or at most one non-neighbour in I",
                      "(K1,3+2P1)-free split graphs, split partitions with |I| >= 6",
                      "(K1,3+2P1)-freeness not required", 7},
                     7, split_free_family("K1,3+2P1"), check_k13_deg});
        v.push_back({{"CLAIM-THM7-STARS",
                      "in a (K1,3+2P1)-free split graph with |I| >= 6, the three-step reduction yields a "
                      "disjoint union of stars",
                      "(K1,3+2P1)-free split graphs, split partitions with |I| >= 6",
                      "the deletion step is skipped", 8},
                     7, split_free_family("K1,3+2P1"), check_star_reduction});
        return v;
    }();
    return claims;
}

const ClaimDef& find_claim(std::string_view id) {
    for (const ClaimDef& c : registry()) {
        if (c.info.id == id) return c;
    }
    throw UnknownClaimError("unknown claim '" + std::string(id) + "'");
}

}  // namespace

const std::vector<ClaimInfo>& registered_claims() {
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> out;
        for (const ClaimDef& c : registry()) out.push_back(c.info);
        return out;
    }();
    return infos;
}

const ClaimInfo& claim_info(std::string_view id) { return find_claim(id).info; }

ClaimReport verify_claim(std::string_view id, int max_n, VerifyOptions options) {
    const ClaimDef& def = find_claim(id);
    if (max_n > kEnumerationLimit) {
        throw SizeLimitError("claims are verified for at most " + std::to_string(kEnumerationLimit) + " vertices");
    }
    ClaimReport report;
    report.claim = def.info.id;
    report.max_n = max_n;
    report.family = def.info.family;
    report.negative_control = options.negative_control;
    for (int n = def.min_n; n <= max_n; ++n) {
        const std::vector<Graph> graphs = def.family(n, options.negative_control);
        std::vector<GraphResult> results(graphs.size());
        parallel_for(graphs.size(), options.jobs,
                     [&](std::size_t i) { results[i] = def.check(graphs[i], options.negative_control); });
        report.swept_to = n;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            report.counts += results[i].counts;
            if (results[i].found && !report.counterexample) {
                Found& f = *results[i].found;
                report.counterexample = Counterexample{to_graph6(graphs[i]), f.partition, std::move(f.witness),
                                                       std::move(f.detail)};
            }
        }
        if (report.counterexample) break;
    }
    report.holds = !report.counterexample;
    return report;
}

Graph thm7_reduce(const Graph& g, const SplitPartition& p) {
    using Reason = ReductionError::Reason;
    if (!is_split(g)) throw ReductionError(Reason::NotSplit, "graph is not split");
    check_partition(g, p);
    if (contains_induced(g, named_graph("K1,3+2P1"))) {
        throw ReductionError(Reason::NotFree, "graph contains an induced K1,3+2P1");
    }
    if (p.independent.size() < 6) {
        throw ReductionError(Reason::SmallIndependentSet,
                             "independent side has " + std::to_string(p.independent.size()) + " < 6 vertices");
    }
    return reduce(g, p, false);
}

int cached_clique_width(const Graph& g) {
    static std::shared_mutex mutex;
    static std::unordered_map<CanonicalCode, int, CanonicalCodeHash> cache;
    const CanonicalCode code = canonical_code(g);
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(code); it != cache.end()) return it->second;
    }
    const int cw = clique_width(g);
    std::unique_lock lock(mutex);
    cache.emplace(code, cw);
    return cw;
}

GrowthReport cw_growth_report(int max_n, const GraphFilter& family, int jobs) {
    GrowthReport report{{}, true};
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<Graph> graphs = enumerate_filtered(n, family);
        if (graphs.empty()) continue;
        std::vector<int> cw(graphs.size());
        parallel_for(graphs.size(), jobs, [&](std::size_t i) { cw[i] = cached_clique_width(graphs[i]); });
        const auto best = std::max_element(cw.begin(), cw.end());
        const GrowthRow row{n, static_cast<long>(graphs.size()), *best, to_graph6(graphs[best - cw.begin()])};
        if (!report.rows.empty() && row.max_cw < report.rows.back().max_cw) report.monotone = false;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace splitcw
