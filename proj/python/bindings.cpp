#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitcw/canonical.hpp"
#include "splitcw/catalog.hpp"
#include "splitcw/claims.hpp"
#include "splitcw/classify.hpp"
#include "splitcw/cliquewidth.hpp"
#include "splitcw/enumerate.hpp"
#include "splitcw/io.hpp"
#include "splitcw/kexpr.hpp"
#include "splitcw/modular.hpp"
#include "splitcw/serialize.hpp"
#include "splitcw/split.hpp"

namespace py = pybind11;
using namespace splitcw;

namespace {

py::object loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

Graph graph_arg(const std::string& text) {
    // "@" alone is the graph6 encoding of K1.
    if (text.size() > 1 && text.front() == '@') return named_graph(text);
    return from_graph6(text);
}

py::tuple partition_tuple(const SplitPartition& p) {
    return py::make_tuple(p.clique.to_vector(), p.independent.to_vector());
}

SplitPartition partition_arg(const std::vector<int>& k, const std::vector<int>& i) {
    return {VertexSet::from(k), VertexSet::from(i)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Clique-width of H-free split graphs";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);
    py::register_exception<InvalidPartitionError>(m, "InvalidPartitionError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<UnknownClaimError>(m, "UnknownClaimError", PyExc_KeyError);

    // Graphs cross the boundary as graph6 strings; "@name" is also accepted.
    m.def("named", [](const std::string& name) { return to_graph6(named_graph(name)); }, py::arg("name"));
    m.def("from_edges", [](int n, const std::vector<Edge>& edges) { return to_graph6(Graph(n, edges)); },
          py::arg("n"), py::arg("edges"));
    m.def("edges", [](const std::string& g) { return graph_arg(g).edges(); }, py::arg("graph"));
    m.def("order", [](const std::string& g) { return graph_arg(g).order(); }, py::arg("graph"));
    m.def("complement", [](const std::string& g) { return to_graph6(complement(graph_arg(g))); }, py::arg("graph"));
    m.def("canonical_code", [](const std::string& g) { return py::bytes(canonical_code(graph_arg(g)).bytes); },
          py::arg("graph"));
    m.def("are_isomorphic",
          [](const std::string& g, const std::string& h) { return are_isomorphic(graph_arg(g), graph_arg(h)); },
          py::arg("g"), py::arg("h"));

    m.def("is_split", [](const std::string& g) { return is_split(graph_arg(g)); }, py::arg("graph"));
    m.def("split_partitions",
          [](const std::string& g) {
              py::list out;
              for (const auto& p : split_partitions(graph_arg(g))) out.append(partition_tuple(p));
              return out;
          },
          py::arg("graph"), "List of (K, I) vertex lists.");
    m.def("is_prime", [](const std::string& g) { return is_prime(graph_arg(g)); }, py::arg("graph"));

    m.def("clique_width", [](const std::string& g) { return clique_width(graph_arg(g)); }, py::arg("graph"),
          py::call_guard<py::gil_scoped_release>());
    m.def("cw_expression",
          [](const std::string& g, int k) -> std::optional<std::string> {
              auto e = cw_at_most(graph_arg(g), k);
              if (!e) return std::nullopt;
              return to_string(*e);
          },
          py::arg("graph"), py::arg("k"), "A k-expression for the graph, or None if its clique-width exceeds k.");
    m.def("rp1_expression",
          [](const std::string& g, const std::vector<int>& k, const std::vector<int>& i, int r) {
              return to_string(build_rp1_expression(graph_arg(g), partition_arg(k, i), r));
          },
          py::arg("graph"), py::arg("K"), py::arg("I"), py::arg("r"));
    m.def("evaluate",
          [](const std::string& expr) {
              const LabelledGraph lg = evaluate(parse_kexpression(expr));
              return py::make_tuple(to_graph6(lg.graph), lg.labels);
          },
          py::arg("expression"), "(graph6, labels) of the evaluated expression.");

    m.def("classify",
          [](const std::string& family, const std::string& g) {
              const Graph h = graph_arg(g);
              if (family == "split") return loads(split_verdict_json(h));
              if (family == "chordal") return loads(to_json(classify_chordal(h)));
              if (family == "bipartite") return loads(to_json(classify_bipartite(h)));
              if (family == "weakly-chordal") return loads(to_json(classify_weakly_chordal(h)));
              throw py::value_error("unknown family '" + family + "'");
          },
          py::arg("family"), py::arg("graph"));
    m.def("classify_labelled",
          [](const std::string& json) { return loads(to_json(classify_weakly_bip(labelled_from_json(json)))); },
          py::arg("labelled_json"));

    m.def("enumerate",
          [](int n, bool split) {
              std::vector<std::string> out;
              for (const Graph& g : split ? enumerate_split_graphs(n) : enumerate_graphs(n)) out.push_back(to_graph6(g));
              return out;
          },
          py::arg("n"), py::arg("split") = false);
    m.def("claims", [] {
        std::vector<std::string> out;
        for (const auto& info : registered_claims()) out.push_back(info.id);
        return out;
    });
    m.def("verify_claim",
          [](const std::string& id, int max_n, int jobs, bool negative_control) {
              ClaimReport r;
              {
                  py::gil_scoped_release release;
                  r = verify_claim(id, max_n, {jobs, negative_control});
              }
              return loads(to_json(r));
          },
          py::arg("claim"), py::arg("max_n"), py::arg("jobs") = 1, py::arg("negative_control") = false);
    m.def("thm7_reduce",
          [](const std::string& g, const std::vector<int>& k, const std::vector<int>& i) {
              return to_graph6(thm7_reduce(graph_arg(g), partition_arg(k, i)));
          },
          py::arg("graph"), py::arg("K"), py::arg("I"));
}
