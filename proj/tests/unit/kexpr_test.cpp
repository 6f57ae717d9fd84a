#include <gtest/gtest.h>

#include "splitcw/catalog.hpp"
#include "splitcw/kexpr.hpp"

using namespace splitcw;

namespace {

using E = KExpression;

E k2() { return E::join(1, 2, E::disjoint_union(E::create(1), E::create(2))); }

}  // namespace

TEST(KExpression, Evaluate) {
    const LabelledGraph one = evaluate(E::create(1));
    EXPECT_EQ(one.graph, Graph(1));
    EXPECT_EQ(one.labels, (std::vector<int>{1}));

    const LabelledGraph two = evaluate(k2());
    EXPECT_EQ(two.graph, named_graph("K2"));
    EXPECT_EQ(two.labels, (std::vector<int>{1, 2}));

    const E merged = E::disjoint_union(E::rename(2, 1, k2()), E::create(3));
    EXPECT_EQ(evaluate(E::join(2, 3, merged)).graph, Graph(3, {{0, 1}}));
    const LabelledGraph lg = evaluate(E::join(1, 3, merged));
    EXPECT_EQ(lg.graph, named_graph("K3"));
    EXPECT_EQ(lg.labels, (std::vector<int>{1, 1, 3}));

    const E star = E::join(1, 2, E::disjoint_union(E::create(1), E::disjoint_union(E::create(2), E::create(2))));
    EXPECT_EQ(evaluate(star).graph, named_graph("K1,2"));
}

TEST(KExpression, JoinAddsOnlyMissingEdges) {
    const E twice = E::join(1, 2, k2());
    EXPECT_EQ(evaluate(twice).graph, named_graph("K2"));
    EXPECT_EQ(evaluate(E::join(1, 3, k2())).graph, named_graph("K2"));
}

TEST(KExpression, Width) {
    EXPECT_EQ(width(E::create(1)), 1);
    EXPECT_EQ(width(k2()), 2);
    EXPECT_EQ(width(E::rename(2, 5, k2())), 3);
    EXPECT_EQ(E::disjoint_union(k2(), k2()).vertex_count(), 4);
}

TEST(KExpression, Accessors) {
    const E e = E::rename(2, 1, k2());
    EXPECT_EQ(e.kind(), E::Kind::Rename);
    EXPECT_EQ(e.first(), 2);
    EXPECT_EQ(e.second(), 1);
    EXPECT_EQ(e.left().kind(), E::Kind::Join);
    EXPECT_EQ(e.left().left().kind(), E::Kind::Union);
    EXPECT_EQ(e.left().left().right().first(), 2);
}

TEST(KExpression, Malformed) {
    EXPECT_THROW(E::create(0), MalformedExpressionError);
    EXPECT_THROW(E::create(-2), MalformedExpressionError);
    EXPECT_THROW(E::join(1, 1, E::create(1)), MalformedExpressionError);
    EXPECT_THROW(E::rename(0, 1, E::create(1)), MalformedExpressionError);
}

TEST(KExpressionText, Serialise) {
    EXPECT_EQ(to_string(E::create(1)), "v(1)");
    EXPECT_EQ(to_string(k2()), "j(1,2,u(v(1),v(2)))");
    EXPECT_EQ(to_string(E::rename(12, 3, k2())), "r(12>3,j(1,2,u(v(1),v(2))))");
}

TEST(KExpressionText, ParseRoundTrip) {
    for (const char* text : {"v(1)", "j(1,2,u(v(1),v(2)))", "r(2>1,j(1,2,u(v(1),v(2))))",
                             "u(u(v(3),v(3)),j(10,3,u(v(10),v(3))))"}) {
        EXPECT_EQ(to_string(parse_kexpression(text)), text);
    }
    EXPECT_EQ(to_string(parse_kexpression(" j ( 1 , 2 ,\n u( v(1) , v( 2 ) ) ) ")), "j(1,2,u(v(1),v(2)))");
}

TEST(KExpressionText, ParseErrors) {
    for (const char* bad : {"", "v()", "v(0)", "v(1", "x(1)", "u(v(1))", "j(1,1,v(1))", "r(1,2,v(1))", "v(1)v(2)",
                            "j(1,2)", "v(-1)", "v(99999999999999999999)"}) {
        EXPECT_THROW(parse_kexpression(bad), MalformedExpressionError) << bad;
    }
}
