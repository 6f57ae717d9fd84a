// Command-line front end: classification, clique-width, recognition,
// enumeration and claim sweeps.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "splitcw/canonical.hpp"
#include "splitcw/catalog.hpp"
#include "splitcw/claims.hpp"
#include "splitcw/classify.hpp"
#include "splitcw/cliquewidth.hpp"
#include "splitcw/enumerate.hpp"
#include "splitcw/io.hpp"
#include "splitcw/kexpr.hpp"
#include "splitcw/serialize.hpp"
#include "splitcw/split.hpp"

using namespace splitcw;

namespace {

Graph read_graph(const std::string& text) {
    // "@" alone is the graph6 encoding of K1.
    if (text.size() > 1 && text.front() == '@') return named_graph(text);
    return from_graph6(text);
}

// "@K1,3+2P1,@F1" -> {"@K1,3+2P1", "@F1"}; names may contain commas.
std::vector<std::string> split_names(const std::string& list) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t cut = list.find(",@", start);
        out.push_back(list.substr(start, cut == std::string::npos ? std::string::npos : cut - start));
        if (cut == std::string::npos) break;
        start = cut + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clique-width of H-free split graphs"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    int exit_code = 0;

    std::string family = "split", h_text, graph_text, partition_text, free_list, report, claim;
    int max_k = 0, n = 0, max_n = 8, jobs = 1;
    bool emit_expr = false, split_only = false, prime = false, star_forest = false, negative = false;

    auto* classify = app.add_subcommand("classify", "verdict for the class of H-free graphs in a family");
    classify->add_option("--family", family)->check(CLI::IsMember({"split", "chordal", "bipartite", "weakly-chordal"}));
    classify->add_option("--h", h_text, "graph6 or @name")->required();

    auto* classify_labelled = app.add_subcommand("classify-labelled", "verdict for weakly H-free bipartite graphs");
    classify_labelled->add_option("--h", h_text, "labelled bipartite graph as JSON")->required();

    auto* cw = app.add_subcommand("cw", "exact clique-width");
    cw->add_option("--graph", graph_text)->required();
    cw->add_option("--max-k", max_k, "give up above this width")->check(CLI::PositiveNumber);
    cw->add_flag("--emit-expr", emit_expr, "print a witness expression on a second line");

    auto* recognize = app.add_subcommand("recognize", "split test and all split partitions");
    recognize->add_option("--graph", graph_text)->required();

    auto* enumerate = app.add_subcommand("enumerate", "graphs on n vertices up to isomorphism, as TSV");
    enumerate->add_option("--n", n)->required()->check(CLI::Range(0, kEnumerationLimit));
    enumerate->add_flag("--split", split_only);
    enumerate->add_option("--free", free_list, "comma-separated @names");
    enumerate->add_flag("--prime", prime);
    enumerate->add_flag("--star-forest", star_forest);
    enumerate->add_option("--report", report, "cw: add a clique-width column; growth: max cw for each n up to N")
        ->check(CLI::IsMember({"cw", "growth"}));
    enumerate->add_option("--jobs", jobs)->check(CLI::NonNegativeNumber);

    auto* claims = app.add_subcommand("claims", "list registered claims");

    auto* verify = app.add_subcommand("verify", "exhaustive claim check; exit 1 on a counterexample");
    verify->add_option("--claim", claim)->required();
    verify->add_option("--max-n", max_n)->check(CLI::Range(0, kEnumerationLimit));
    verify->add_option("--jobs", jobs, "0 = one per hardware thread")->check(CLI::NonNegativeNumber);
    verify->add_flag("--negative-control", negative, "run the weakened variant, which must fail");

    auto* reduce = app.add_subcommand("reduce-thm7", "star-forest reduction of a (K1,3+2P1)-free split graph");
    reduce->add_option("--graph", graph_text)->required();
    reduce->add_option("--partition", partition_text, "{\"K\":[...],\"I\":[...]}")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify) {
            const Graph h = read_graph(h_text);
            if (family == "split") std::cout << split_verdict_json(h, 2) << "\n";
            else if (family == "chordal") std::cout << to_json(classify_chordal(h), 2) << "\n";
            else if (family == "bipartite") std::cout << to_json(classify_bipartite(h), 2) << "\n";
            else std::cout << to_json(classify_weakly_chordal(h), 2) << "\n";
        } else if (*classify_labelled) {
            std::cout << to_json(classify_weakly_bip(labelled_from_json(h_text)), 2) << "\n";
        } else if (*cw) {
            const Graph g = read_graph(graph_text);
            if (g.order() == 0) {
                std::cout << 0 << "\n";
                return 0;
            }
            std::optional<KExpression> e;
            int k = 1;
            for (; !max_k || k <= max_k; ++k) {
                if ((e = cw_at_most(g, k))) break;
            }
            if (!e) {
                std::cerr << "clique-width exceeds " << max_k << "\n";
                return 1;
            }
            std::cout << k << "\n";
            if (emit_expr) std::cout << to_string(*e) << "\n";
        } else if (*recognize) {
            const Graph g = read_graph(graph_text);
            std::cout << "{\"split\":" << (is_split(g) ? "true" : "false") << ",\"partitions\":[";
            const auto parts = split_partitions(g);
            for (std::size_t i = 0; i < parts.size(); ++i) std::cout << (i ? "," : "") << to_json(parts[i]);
            std::cout << "]}\n";
        } else if (*enumerate) {
            GraphFilter filter;
            filter.split = split_only;
            filter.prime = prime;
            filter.star_forest = star_forest;
            if (!free_list.empty()) {
                for (const std::string& name : split_names(free_list)) filter.free_of.push_back(read_graph(name));
            }
            if (report == "growth") {
                const GrowthReport r = cw_growth_report(n, filter, jobs);
                std::cout << "n\tgraphs\tmax_cw\twitness\n";
                for (const GrowthRow& row : r.rows) {
                    std::cout << row.n << "\t" << row.graphs << "\t" << row.max_cw << "\t" << row.witness_graph6 << "\n";
                }
            } else {
                std::cout << "graph6\tn\tedges" << (report == "cw" ? "\tcw" : "") << "\n";
                for (const Graph& g : enumerate_filtered(n, filter)) {
                    std::cout << to_graph6(g) << "\t" << g.order() << "\t" << g.size();
                    if (report == "cw") std::cout << "\t" << cached_clique_width(g);
                    std::cout << "\n";
                }
            }
        } else if (*claims) {
            for (const ClaimInfo& info : registered_claims()) std::cout << info.id << "\t" << info.statement << "\n";
        } else if (*verify) {
            const ClaimReport r = verify_claim(claim, max_n, {jobs, negative});
            std::cout << to_json(r, 2) << "\n";
            exit_code = r.holds ? 0 : 1;
        } else if (*reduce) {
            const Graph g = read_graph(graph_text);
            std::cout << to_graph6(thm7_reduce(g, partition_from_json(partition_text, g, false))) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
