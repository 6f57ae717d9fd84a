#include "splitcw/classify.hpp"

#include <functional>
#include <numeric>

#include "splitcw/canonical.hpp"
#include "splitcw/catalog.hpp"

namespace splitcw {

namespace {

const std::string kH = "H";
const std::string kHBar = "H̄";

std::vector<int> identity(int n) {
    std::vector<int> out(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

// Collects matching clauses in order, remembering the witness of the first.
class Clauses {
public:
    void add(std::string clause, Witness witness) {
        if (!verdict_.witness) verdict_.witness = std::move(witness);
        verdict_.clauses.push_back(std::move(clause));
    }

    bool any() const { return !verdict_.clauses.empty(); }

    Verdict finish(Outcome if_any, Outcome otherwise) {
        verdict_.outcome = any() ? if_any : otherwise;
        return std::move(verdict_);
    }

private:
    Verdict verdict_;
};

void induced_clause(Clauses& out, const Graph& subject, const std::string& subject_name, const std::string& target) {
    if (auto e = contains_induced(named_graph(target), subject)) {
        out.add(subject_name + " ⊆_i " + target, {"induced", subject_name, target, e->map});
    }
}

// "H or H̄ ⊆_i target": both are tried and both recorded when they hold.
void either_induced(Clauses& out, const Graph& h, const Graph& hbar, const std::string& target) {
    induced_clause(out, h, kH, target);
    induced_clause(out, hbar, kHBar, target);
}

void either_edgeless(Clauses& out, const Graph& h, const Graph& hbar) {
    if (h.order() == 0) return;
    if (h.size() == 0) out.add("H ≅ rP1", {"isomorphic", kH, std::to_string(h.order()) + "P1", identity(h.order())});
    if (hbar.size() == 0) {
        out.add("H̄ ≅ rP1", {"isomorphic", kHBar, std::to_string(h.order()) + "P1", identity(h.order())});
    }
}

void isomorphic_clause(Clauses& out, const Graph& subject, const std::string& subject_name, const std::string& target) {
    const Graph t = named_graph(target);
    if (subject.order() != t.order() || !are_isomorphic(subject, t)) return;
    auto e = contains_induced(t, subject);
    out.add(subject_name + " ≅ " + target, {"isomorphic", subject_name, target, e->map});
}

std::optional<Verdict> split_open(const Graph& h, const Graph& hbar) {
    Clauses open;
    for (const char* target : {"F4", "F5"}) {
        isomorphic_clause(open, h, kH, target);
        isomorphic_clause(open, hbar, kHBar, target);
    }
    if (open.any()) return open.finish(Outcome::Open, Outcome::Open);
    return std::nullopt;
}

}  // namespace

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Bounded: return "bounded";
        case Outcome::Unbounded: return "unbounded";
        case Outcome::Open: return "open";
    }
    return "unknown";
}

Verdict classify_split(const Graph& h) {
    const Graph hbar = complement(h);
    if (auto open = split_open(h, hbar)) return *open;
    Clauses out;
    either_edgeless(out, h, hbar);
    either_induced(out, h, hbar, "F4");
    either_induced(out, h, hbar, "F5");
    return out.finish(Outcome::Bounded, Outcome::Unbounded);
}

Verdict classify_split_main(const Graph& h) {
    const Graph hbar = complement(h);
    if (auto open = split_open(h, hbar)) return *open;
    Clauses out;
    either_edgeless(out, h, hbar);
    for (const char* target : {"bull+P1", "F1", "F2", "F3", "Q", "K1,3+2P1"}) either_induced(out, h, hbar, target);
    return out.finish(Outcome::Bounded, Outcome::Unbounded);
}

Verdict classify_chordal(const Graph& h) {
    Clauses open;
    isomorphic_clause(open, h, kH, "F1");
    isomorphic_clause(open, h, kH, "F2");
    if (open.any()) return open.finish(Outcome::Open, Outcome::Open);

    Clauses out;
    if (h.order() > 0 && complement(h).size() == 0) {
        out.add("H = K_r", {"isomorphic", kH, "K" + std::to_string(h.order()), identity(h.order())});
    }
    for (const char* target : {"bull", "P1+P4", "co-(P1+P4)", "co-(K1,3+2P1)", "P1+co-(P1+P3)", "P1+co-(2P1+P2)",
                               "co-(S1,1,2)"}) {
        induced_clause(out, h, kH, target);
    }
    return out.finish(Outcome::Bounded, Outcome::Unbounded);
}

Verdict classify_bipartite(const Graph& h) {
    Clauses out;
    if (h.order() > 0 && h.size() == 0) {
        out.add("H = sP1", {"isomorphic", kH, std::to_string(h.order()) + "P1", identity(h.order())});
    }
    for (const char* target : {"K1,3+3P1", "K1,3+P2", "P1+S1,1,3", "S1,2,3"}) induced_clause(out, h, kH, target);
    return out.finish(Outcome::Bounded, Outcome::Unbounded);
}

Verdict classify_weakly_chordal(const Graph& h) {
    Clauses out;
    induced_clause(out, h, kH, "P4");
    return out.finish(Outcome::Bounded, Outcome::Unbounded);
}

Verdict classify_weakly_bip(const LabelledBipartiteGraph& h, WeaklyBipartiteOptions options) {
    const LabelledBipartiteGraph hbar = opposite_labelling(h);
    const std::string kL = "H^ℓ";
    const std::string kLBar = "H^ℓ̄";
    Clauses out;

    auto labelled_clause = [&](const LabelledBipartiteGraph& subject, const std::string& name, const std::string& target,
                               const LabelledBipartiteGraph& t) {
        if (auto e = labelled_embedding(t, subject)) {
            out.add(name + " ⊆_li (" + target + ")^b", {"labelled-induced", name, "(" + target + ")^b", e->map});
        }
    };

    if (h.order() > 0 && h.graph().size() == 0) {
        const auto target = black_maximal_labelling(h.graph());
        for (const auto& [subject, name] : {std::pair{h, kL}, std::pair{hbar, kLBar}}) {
            if (subject == target) {
                out.add(name + " = (sP1)^b", {"isomorphic", name, "(" + std::to_string(h.order()) + "P1)^b",
                                               identity(h.order())});
            }
        }
    }
    const auto p1p5 = black_maximal_labelling(named_graph("P1+P5"));
    labelled_clause(h, kL, "P1+P5", p1p5);
    labelled_clause(hbar, kLBar, "P1+P5", p1p5);
    for (const char* target : {"P2+P4", "P6"}) {
        const auto t = black_maximal_labelling(named_graph(target));
        labelled_clause(h, kL, target, t);
        if (options.opposite_for_all) labelled_clause(hbar, kLBar, target, t);
    }
    return out.finish(Outcome::Bounded, Outcome::Unbounded);
}

}  // namespace splitcw
