#include "splitcw/serialize.hpp"

#include <json.hpp>

#include "splitcw/io.hpp"

namespace splitcw {

namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

std::vector<int> int_list(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_array()) throw FormatError(std::string("\"") + key + "\" must be an array");
    std::vector<int> out;
    for (const Json& x : v) {
        if (!x.is_number_integer()) throw FormatError(std::string("\"") + key + "\" must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

VertexSet set_of(const std::vector<int>& members, int n, const char* key) {
    VertexSet s;
    for (int v : members) {
        if (v < 0 || v >= n) throw FormatError(std::string("\"") + key + "\" mentions non-vertex " + std::to_string(v));
        if (s.contains(v)) throw FormatError(std::string("\"") + key + "\" repeats vertex " + std::to_string(v));
        s = s.with(v);
    }
    return s;
}

std::string dump(const Json& j, int indent) { return j.dump(indent < 0 ? -1 : indent); }

Json partition_json(const SplitPartition& p) {
    return Json{{"K", p.clique.to_vector()}, {"I", p.independent.to_vector()}};
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["outcome"] = to_string(v.outcome);
    j["clauses"] = v.clauses;
    if (v.witness) {
        j["witness"] = Json{{"relation", v.witness->relation},
                            {"subject", v.witness->subject},
                            {"target", v.witness->target},
                            {"map", v.witness->map}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace

SplitPartition partition_from_json(std::string_view text, const Graph& g, bool validate) {
    const Json j = parse(text);
    SplitPartition p{set_of(int_list(j, "K"), g.order(), "K"), set_of(int_list(j, "I"), g.order(), "I")};
    if (validate) check_partition(g, p);
    return p;
}

std::string to_json(const SplitPartition& p, int indent) { return dump(partition_json(p), indent); }

LabelledBipartiteGraph labelled_from_json(std::string_view text) {
    const Json j = parse(text);
    const auto black = int_list(j, "black");
    const auto white = int_list(j, "white");
    const int n = static_cast<int>(black.size() + white.size());
    if (n > kMaxVertices) throw SizeLimitError("labelled graph has more than 64 vertices");
    const VertexSet b = set_of(black, n, "black");
    const VertexSet w = set_of(white, n, "white");
    if (b.intersects(w)) throw FormatError("a vertex is both black and white");
    if (!j.contains("edges") || !j.at("edges").is_array()) throw FormatError("missing array \"edges\"");
    std::vector<Edge> edges;
    for (const Json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw FormatError("each edge must be a pair of integers");
        }
        const int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge mentions a non-vertex");
        if (u == v) throw FormatError("self-loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
    }
    return LabelledBipartiteGraph(Graph(n, edges), b);
}

std::string to_json(const LabelledBipartiteGraph& h, int indent) {
    Json edges = Json::array();
    for (auto [u, v] : h.graph().edges()) edges.push_back({u, v});
    return dump(Json{{"black", h.black().to_vector()}, {"white", h.white().to_vector()}, {"edges", edges}}, indent);
}

std::string to_json(const Verdict& v, int indent) { return dump(verdict_json(v), indent); }

std::string split_verdict_json(const Graph& h, int indent) {
    Json j = verdict_json(classify_split(h));
    j["main_clauses"] = classify_split_main(h).clauses;
    return dump(j, indent);
}

std::string to_json(const ClaimReport& r, int indent) {
    Json j;
    j["claim"] = r.claim;
    j["max_n"] = r.max_n;
    j["family"] = r.family;
    j["negative_control"] = r.negative_control;
    j["outcome"] = r.holds ? "holds" : "counterexample";
    if (r.counterexample) {
        const Counterexample& c = *r.counterexample;
        Json witness = Json::object();
        for (const auto& [name, vertices] : c.witness) witness[name] = vertices;
        j["counterexample"] = Json{{"graph6", c.graph6},
                                   {"partition", c.partition ? partition_json(*c.partition) : Json(nullptr)},
                                   {"witness", witness},
                                   {"detail", c.detail}};
    } else {
        j["counterexample"] = nullptr;
    }
    j["counts"] = Json{{"graphs", r.counts.graphs}, {"partitions", r.counts.partitions}, {"checks", r.counts.checks}};
    j["swept_to"] = r.swept_to;
    return dump(j, indent);
}

std::string to_json(const GrowthReport& r, int indent) {
    Json rows = Json::array();
    for (const GrowthRow& row : r.rows) {
        rows.push_back(Json{{"n", row.n}, {"graphs", row.graphs}, {"max_cw", row.max_cw}, {"witness", row.witness_graph6}});
    }
    return dump(Json{{"rows", rows}, {"monotone", r.monotone}}, indent);
}

}  // namespace splitcw
