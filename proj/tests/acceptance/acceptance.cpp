// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "splitcw/canonical.hpp"
#include "splitcw/catalog.hpp"
#include "splitcw/classify.hpp"
#include "splitcw/claims.hpp"
#include "splitcw/cliquewidth.hpp"
#include "splitcw/enumerate.hpp"
#include "splitcw/io.hpp"
#include "splitcw/kexpr.hpp"
#include "splitcw/modular.hpp"
#include "splitcw/split.hpp"
#include "splitcw/subgraph.hpp"

using namespace splitcw;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
    long checked = 0;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

Result rp1_bound() {
    Result r;
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& g : enumerate_split_graphs(n)) {
            const int alpha = independence_number(g);
            const int cw = cached_clique_width(g);
            if (cw > alpha + 2) r.fail(to_graph6(g) + ": cw " + std::to_string(cw) + " > " + std::to_string(alpha + 2));
            for (const SplitPartition& p : split_partitions(g)) {
                for (int rr = alpha + 1; rr <= alpha + 2; ++rr) {
                    const KExpression e = build_rp1_expression(g, p, rr);
                    if (width(e) > rr + 1 || !are_isomorphic(evaluate(e).graph, g)) {
                        r.fail(to_graph6(g) + ": constructed expression for r=" + std::to_string(rr) + " is wrong");
                    }
                    ++r.checked;
                }
            }
        }
    }
    const ClaimReport claim = verify_claim("CLAIM-THM5", 8, {.jobs = 0});
    if (!claim.holds) r.fail("CLAIM-THM5 sweep found " + claim.counterexample->graph6);
    r.detail = r.pass ? "557 split graphs at n=8, " + std::to_string(r.checked) + " (graph, partition, r) expressions verified"
                      : r.detail;
    return r;
}

bool prime_max_holds(const Graph& g) {
    int best = 0;
    for (const Graph& h : prime_induced_subgraphs(g)) best = std::max(best, cached_clique_width(h));
    return best == cached_clique_width(g);
}

Result prime_max() {
    Result r;
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            if (!prime_max_holds(g)) r.fail(to_graph6(g));
            ++r.checked;
        }
    }
    for (const Graph& g : enumerate_split_graphs(7)) {
        if (!prime_max_holds(g)) r.fail(to_graph6(g));
        ++r.checked;
    }
    if (r.pass) r.detail = std::to_string(r.checked) + " graphs (all 2<=n<=6, split n=7)";
    return r;
}

Result calibration() {
    Result r;
    std::vector<oracle::CliqueWidthOracle> by_k;
    for (int k = 1; k <= 3; ++k) by_k.emplace_back(k, 5);
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::set<std::string>> reach;
        for (const auto& o : by_k) reach.push_back(o.graphs(n));
        for (const Graph& g : enumerate_graphs(n)) {
            const std::string key = oracle::canonical(g);
            int expected = 0;
            for (int k = 1; k <= 3 && expected == 0; ++k) {
                if (reach[k - 1].contains(key)) expected = k;
            }
            if (expected == 0 || clique_width(g) != expected) r.fail("disagreement on " + to_graph6(g));
            ++r.checked;
        }
    }
    const oracle::CliqueWidthOracle two(2, 6);
    const oracle::CliqueWidthOracle three(3, 5);
    auto spot = [&](const Graph& g, int expected) {
        const std::string key = oracle::canonical(g);
        const int n = g.order();
        int by_oracle = 0;
        if (n <= 5 && by_k[0].graphs(n).contains(key)) by_oracle = 1;
        else if (two.graphs(n).contains(key)) by_oracle = 2;
        else if (n <= 5 && three.graphs(n).contains(key)) by_oracle = 3;
        if (by_oracle != expected || clique_width(g) != expected) r.fail("spot value wrong for " + to_graph6(g));
    };
    spot(named_graph("P4"), 3);
    spot(named_graph("C5"), 3);
    for (int n = 2; n <= 6; ++n) spot(named_graph("K" + std::to_string(n)), 2);
    GraphFilter stars;
    stars.star_forest = true;
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_filtered(n, stars)) {
            if (g.size() > 0) spot(g, 2);
        }
    }
    for (const char* name : {"K1,6", "K1,9", "2K1,3", "3K1,2", "K1,4+K1,3+P1"}) {
        if (clique_width(named_graph(name)) != 2) r.fail(std::string("star forest ") + name);
    }
    if (r.pass) r.detail = std::to_string(r.checked) + " graphs n<=5 match the closure oracle; spot values match";
    return r;
}

Result golden() {
    Result r;
    std::ifstream in(std::string(SPLITCW_TEST_DATA) + "/classify_split_golden.tsv");
    if (!in) {
        r.fail("golden table missing");
        return r;
    }
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream f(line);
        std::string g6, n, outcome, clause, main_clause;
        std::getline(f, g6, '\t');
        std::getline(f, n, '\t');
        std::getline(f, outcome, '\t');
        std::getline(f, clause, '\t');
        std::getline(f, main_clause, '\t');
        const Graph h = from_graph6(g6);
        const Verdict v = classify_split(h);
        const Verdict m = classify_split_main(h);
        if (to_string(v.outcome) != outcome || (v.clauses.empty() ? "-" : v.clauses.front()) != clause ||
            (m.clauses.empty() ? "-" : m.clauses.front()) != main_clause) {
            r.fail("golden row differs: " + g6);
        }
        if (oracle::split_outcome(h) != outcome) r.fail("oracle disagrees with golden row " + g6);
        if (v.outcome != m.outcome) r.fail("formulations disagree on " + g6);
        ++r.checked;
    }
    long expected_rows = 0;
    for (int n = 0; n <= 7; ++n) expected_rows += static_cast<long>(enumerate_graphs(n).size());
    if (r.checked != expected_rows) r.fail("golden table has " + std::to_string(r.checked) + " rows");

    for (const char* name : {"bull+P1", "F1", "F2", "F3", "Q", "K1,3+2P1"}) {
        for (const Graph& g : {named_graph(name), complement(named_graph(name))}) {
            for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s) {
                if (classify_split(induced_subgraph(g, VertexSet(s))).outcome != Outcome::Bounded) {
                    r.fail(std::string("induced subgraph of ") + name + " not bounded");
                }
            }
        }
    }
    for (const Graph& g : {catalog(Named::F4), catalog(Named::F5)}) {
        if (classify_split(g).outcome != Outcome::Open || classify_split(complement(g)).outcome != Outcome::Open) {
            r.fail("F4/F5 or complement not open");
        }
    }
    for (const char* name : {"2K2", "C4", "C5", "P5"}) {
        if (classify_split(named_graph(name)).outcome != Outcome::Unbounded ||
            oracle::split_outcome(named_graph(name)) != "unbounded") {
            r.fail(std::string(name) + " not unbounded");
        }
    }
    if (r.pass) r.detail = std::to_string(r.checked) + " golden rows n<=7 match; both formulations agree";
    return r;
}

Result key_lemma() {
    Result r;
    const ClaimReport keypart = verify_claim("CLAIM-KEYPART", 8, {.jobs = 0});
    if (!keypart.holds) r.fail("CLAIM-KEYPART counterexample " + keypart.counterexample->graph6);
    if (split_partitions(catalog(Named::Q)).size() != 1) r.fail("Q does not have exactly one split partition");
    const auto [q, qp] = from_labelled_bipartite(black_maximal_labelling(named_graph("P2+P4")), CliqueColour::Black);
    if (!are_isomorphic(key_lemma_extension(q, qp), catalog(Named::F5))) r.fail("F5 not rebuilt from (P2+P4)^b");
    const auto [h, hp] =
        from_labelled_bipartite(opposite_labelling(black_maximal_labelling(named_graph("P1+P5"))), CliqueColour::Black);
    if (!are_isomorphic(key_lemma_extension(h, hp), catalog(Named::F4))) r.fail("F4 not rebuilt from (P1+P5)^b-bar");
    if (r.pass) {
        r.detail = "partition dichotomy over " + std::to_string(keypart.counts.partitions) +
                   " partitions n<=8; Q unique; F4, F5 rebuilt";
    }
    return r;
}

Result claim_suite() {
    Result r;
    int holds = 0;
    int controls = 0;
    for (const auto& c : registered_claims()) {
        const ClaimReport ok = verify_claim(c.id, 8, {.jobs = 0});
        if (!ok.holds) r.fail(c.id + " fails at " + ok.counterexample->graph6);
        else ++holds;
        const ClaimReport neg = verify_claim(c.id, 8, {.jobs = 0, .negative_control = true});
        if (neg.holds) r.fail(c.id + " negative control found no counterexample");
        else ++controls;
    }
    for (const char* id : {"CLAIM-F1-OBS1", "CLAIM-F1-OBS2", "CLAIM-F2-CLM", "CLAIM-F2-EQ1", "CLAIM-F2-NOQQ",
                           "CLAIM-F3-CLM", "CLAIM-K13-DEG", "CLAIM-THM7-STARS"}) {
        try {
            claim_info(id);
        } catch (const UnknownClaimError&) {
            r.fail(std::string(id) + " not registered");
        }
    }
    if (r.pass) {
        r.detail = std::to_string(holds) + " claims hold at n<=8; " + std::to_string(controls) +
                   " negative controls produce counterexamples";
    }
    return r;
}

Result symmetry() {
    Result r;
    for (int n = 0; n <= 7; ++n) {
        for (const Graph& h : enumerate_graphs(n)) {
            if (classify_split(h).outcome != classify_split(complement(h)).outcome) r.fail(to_graph6(h));
            ++r.checked;
        }
    }
    long split = 0;
    for (int n = 0; n <= 8; ++n) {
        for (const Graph& g : enumerate_split_graphs(n)) {
            if (!is_split(complement(g))) r.fail("complement of " + to_graph6(g) + " not split");
            ++split;
        }
    }
    if (r.pass) r.detail = std::to_string(r.checked) + " verdicts n<=7; " + std::to_string(split) + " split complements n<=8";
    return r;
}

Result graph6_round_trip() {
    Result r;
    for (int n = 0; n <= 7; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const std::string s = to_graph6(g);
            if (s != oracle::graph6(g) || from_graph6(s) != g || to_graph6(from_graph6(s)) != s) r.fail(s);
            ++r.checked;
        }
    }
    int rejected = 0;
    const std::vector<std::string> bad{"", "Dh", "Dhcc", "Dhd", "D c", ">>graph6<", "~?", "Dhc\n\n"};
    for (const std::string& b : bad) {
        try {
            from_graph6(b);
            r.fail("accepted malformed \"" + b + "\"");
        } catch (const FormatError& e) {
            if (std::string(e.what()).find("graph6:") == 0) ++rejected;
            else r.fail("diagnostic lacks context: " + std::string(e.what()));
        }
    }
    if (r.pass) {
        r.detail = std::to_string(r.checked) + " graphs byte-exact; " + std::to_string(rejected) +
                   " malformed inputs rejected with diagnostics";
    }
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"1 rP1-free bound on split graphs n<=8", rp1_bound},
        {"2 prime-subgraph clique-width equality", prime_max},
        {"3 solver calibration against closure oracle", calibration},
        {"4 split classification golden table", golden},
        {"5 split-partition structure", key_lemma},
        {"6 structural claim suite", claim_suite},
        {"7 complementation symmetry", symmetry},
        {"8 graph6 round trip", graph6_round_trip},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result res;
        try {
            res = run();
        } catch (const std::exception& e) {
            res.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %s: %s (%.2fs)\n", res.pass ? "PASS" : "FAIL", name.c_str(), res.detail.c_str(), secs);
        std::fflush(stdout);
        all = all && res.pass;
    }
    return all ? 0 : 1;
}
