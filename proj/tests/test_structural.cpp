#include <doctest.h>

#include <random>

#include "naive.hpp"
#include "oramsey/constructions.hpp"
#include "oramsey/structural.hpp"

using namespace oramsey;

TEST_CASE("neighbourhood lemma on witnesses") {
    CHECK(check_neighborhood_lemma(witness(WitnessName::w8), 3, 3).passed());
    CHECK(check_neighborhood_lemma(witness(WitnessName::w14), 4, 3).passed());
    CHECK(check_neighborhood_lemma(witness(WitnessName::w22), 5, 3).passed());

    auto tt = graph_from_arcs(3, std::vector<Arc>{{0, 1}, {1, 2}, {0, 2}});
    auto r = check_neighborhood_lemma(tt, 2, 3);
    CHECK_FALSE(r.applicable);
    CHECK_FALSE(r.passed());
}

TEST_CASE("degree bound") {
    auto w14 = check_l3_degree_bound(witness(WitnessName::w14), 4);
    CHECK(w14.passed());
    CHECK(w14.min_out == 3);
    CHECK(w14.max_out == 3);
    CHECK(w14.min_in == 3);
    CHECK(w14.max_in == 3);

    auto w8 = check_l3_degree_bound(witness(WitnessName::w8), 3);
    CHECK(w8.passed());
    CHECK(w8.max_out == 2);
    CHECK(w8.max_in == 2);

    auto w22 = check_l3_degree_bound(witness(WitnessName::w22), 5);
    CHECK(w22.passed());
    CHECK(w22.min_out == 4);
    CHECK(w22.max_in == 4);
}

TEST_CASE("eight vertex properties") {
    auto w8 = witness(WitnessName::w8);
    auto r = check_eight_vertex_properties(w8);
    CHECK(r.passed());
    CHECK(r.parts.size() == 6);

    std::mt19937_64 rng{41};
    for (int i = 0; i < 20; ++i)
        CHECK(check_eight_vertex_properties(w8.relabeled(naive::random_permutation(rng, 8))).passed());

    auto empty = check_eight_vertex_properties(OrientedGraph{8});
    CHECK_FALSE(empty.applicable);
}

TEST_CASE("eight vertex checks can fail") {
    // W8 reversed is isomorphic to W8, so the checks must pass there too
    CHECK(check_eight_vertex_properties(witness(WitnessName::w8).reversed()).passed());
    // a (3,3)-free 7-vertex graph is rejected for its order
    auto seven = induced_subgraph(witness(WitnessName::w8), VertexSet::first_n(7));
    CHECK_FALSE(check_eight_vertex_properties(seven).applicable);
}
