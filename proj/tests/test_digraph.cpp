#include <doctest.h>

#include <random>

#include "naive.hpp"
#include "oramsey/arc_list.hpp"
#include "oramsey/constructions.hpp"
#include "oramsey/digraph.hpp"
#include "oramsey/errors.hpp"

using namespace oramsey;

TEST_CASE("new_graph sizes") {
    OrientedGraph g = new_graph(3);
    CHECK(g.order() == 3);
    CHECK(arc_count(g) == 0);
    CHECK_NOTHROW(new_graph(64));
    CHECK_THROWS_AS(new_graph(65), SizeError);
    CHECK_THROWS_AS(new_graph(0), SizeError);
}

TEST_CASE("add_arc") {
    OrientedGraph g{3};
    g.add_arc(0, 1);
    CHECK(g.has_arc(0, 1));
    CHECK_FALSE(g.has_arc(1, 0));
    CHECK(g.in(1).contains(0));

    SUBCASE("reversal is rejected") {
        OrientedGraph h{3};
        h.add_arc(1, 0);
        CHECK_THROWS_AS(h.add_arc(0, 1), AntisymmetryError);
    }
    SUBCASE("loops are rejected") { CHECK_THROWS_AS(g.add_arc(2, 2), LoopError); }
    SUBCASE("out of range") { CHECK_THROWS_AS(g.add_arc(0, 3), SizeError); }
    SUBCASE("duplicate is idempotent") {
        g.add_arc(0, 1);
        CHECK(arc_count(g) == 1);
    }
}

TEST_CASE("neighbourhoods") {
    auto w8 = witness(WitnessName::w8);
    auto nb = neighborhoods(w8, 0);
    CHECK(nb.out == VertexSet{1, 6});
    CHECK(nb.in == VertexSet{2, 7});
    CHECK(nb.indep == VertexSet{3, 4, 5});

    auto e = neighborhoods(OrientedGraph{5}, 0);
    CHECK(e.out.empty());
    CHECK(e.in.empty());
    CHECK(e.indep == VertexSet{1, 2, 3, 4});

    auto one = neighborhoods(OrientedGraph{1}, 0);
    CHECK(one.out.empty());
    CHECK(one.in.empty());
    CHECK(one.indep.empty());
}

TEST_CASE("induced_subgraph") {
    auto w8 = witness(WitnessName::w8);
    CHECK(induced_subgraph(w8, w8.vertices()) == w8);

    auto pair = induced_subgraph(w8, VertexSet{0, 1});
    CHECK(pair.order() == 2);
    CHECK(pair.arcs() == std::vector<Arc>{{0, 1}});

    auto single = induced_subgraph(w8, VertexSet{5});
    CHECK(single.order() == 1);
    CHECK(arc_count(single) == 0);

    CHECK_THROWS_AS(induced_subgraph(w8, VertexSet{}), ArgumentError);
}

TEST_CASE("arc counts") {
    CHECK(arc_count(witness(WitnessName::w8)) == 16);
    CHECK(arc_count(witness(WitnessName::w14)) == 42);
    CHECK(arc_count(OrientedGraph{9}) == 0);
}

TEST_CASE("property: neighbourhoods partition and antisymmetry under random arc streams") {
    std::mt19937_64 rng{11};
    for (int trial = 0; trial < 200; ++trial) {
        int order = 1 + static_cast<int>(rng() % 20);
        OrientedGraph g{order};
        for (int step = 0; step < 3 * order; ++step) {
            Vertex u = static_cast<Vertex>(rng() % order), v = static_cast<Vertex>(rng() % order);
            try {
                g.add_arc(u, v);
            } catch (const LoopError &) {
                CHECK(u == v);
            } catch (const AntisymmetryError &) {
                CHECK(g.has_arc(v, u));
            }
        }
        for (Vertex v = 0; v < order; ++v) {
            CHECK_FALSE(g.out(v).contains(v));
            CHECK((g.out(v) & g.in(v)).empty());
            for (Vertex w : g.out(v))
                CHECK(g.in(w).contains(v));
            auto nb = neighborhoods(g, v);
            VertexSet self = VertexSet::single(v);
            CHECK((nb.out | nb.in | nb.indep | self) == g.vertices());
            CHECK(nb.out.size() + nb.in.size() + nb.indep.size() + 1 == order);
        }
    }
}

TEST_CASE("property: induced_subgraph composes") {
    std::mt19937_64 rng{12};
    for (int trial = 0; trial < 200; ++trial) {
        int order = 2 + static_cast<int>(rng() % 15);
        auto g = naive::random_graph(rng, order);
        VertexSet s(static_cast<std::uint64_t>(rng()) & g.vertices().bits());
        if (s.empty())
            s.insert(0);
        auto members = s.to_vector();
        VertexSet t(static_cast<std::uint64_t>(rng()) & VertexSet::first_n(s.size()).bits());
        if (t.empty())
            t.insert(0);
        VertexSet mapped;
        for (Vertex i : t)
            mapped.insert(members[static_cast<std::size_t>(i)]);
        CHECK(induced_subgraph(induced_subgraph(g, s), t) == induced_subgraph(g, mapped));
    }
}

TEST_CASE("arc list format") {
    OrientedGraph g{3};
    g.add_arc(2, 0);
    g.add_arc(0, 1);
    CHECK(to_arc_list(g) == "n 3\n0 1\n2 0\n");
    CHECK(parse_arc_list("n 3\n0 1\n2 0\n") == g);
    CHECK(parse_arc_list("n 3\n0 1\n2 0") == g);
    CHECK(parse_arc_list("n 4\n").order() == 4);

    auto line_of = [](const char *text) {
        try {
            parse_arc_list(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("n 3\n0 1\n1 0\n") == 3);
    CHECK(line_of("n 3\n1 1\n") == 2);
    CHECK(line_of("n 3\n0 3\n") == 2);
    CHECK(line_of("n 3\n1 2\n0 1\n") == 3);
    CHECK(line_of("n 3\n0 1\n0 1\n") == 3);
    CHECK(line_of("n 3\n0  1\n") == 2);
    CHECK(line_of("n 3\n0 1 \n") == 2);
    CHECK(line_of("n 3\r\n0 1\n") == 1);
    CHECK(line_of("n 65\n") == 1);
    CHECK(line_of("x 3\n") == 1);
    CHECK(line_of("") == 1);
    CHECK(line_of("n 3\n01 2\n") == 2);
}

TEST_CASE("property: arc list round trip") {
    std::mt19937_64 rng{13};
    for (int trial = 0; trial < 200; ++trial) {
        auto g = naive::random_graph(rng, 1 + static_cast<int>(rng() % 30));
        auto text = to_arc_list(g);
        CHECK(parse_arc_list(text) == g);
        CHECK(to_arc_list(parse_arc_list(text)) == text);
    }
}
