#include <doctest.h>

#include <random>

#include "naive.hpp"
#include "oramsey/canonical.hpp"
#include "oramsey/constructions.hpp"
#include "oramsey/errors.hpp"

using namespace oramsey;

namespace {

bool naive_isomorphic(const OrientedGraph &a, const OrientedGraph &b) {
    if (a.order() != b.order())
        return false;
    std::vector<Vertex> p(static_cast<std::size_t>(a.order()));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (a.relabeled(p) == b)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

OrientedGraph cycle3() {
    OrientedGraph g{3};
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    g.add_arc(2, 0);
    return g;
}

OrientedGraph transitive3() {
    OrientedGraph g{3};
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    g.add_arc(0, 2);
    return g;
}

} // namespace

TEST_CASE("canonical code examples") {
    auto w8 = witness(WitnessName::w8);
    std::vector<Vertex> perm{3, 7, 0, 5, 1, 6, 2, 4};
    CHECK(canonical_code(w8) == canonical_code(w8.relabeled(perm)));

    OrientedGraph a{2}, b{2};
    a.add_arc(0, 1);
    b.add_arc(1, 0);
    CHECK(canonical_code(a) == canonical_code(b));

    CHECK(canonical_code(cycle3()) != canonical_code(transitive3()));
    CHECK_THROWS_AS(canonical_code(OrientedGraph{canonical_order_limit + 1}), SizeError);
}

TEST_CASE("code layout") {
    auto code = encode_labeled(transitive3());
    CHECK(code.bytes == std::vector<std::uint8_t>{3, 1, 1, 1});
    CHECK(decode(code) == transitive3());
    auto c = canonicalize(cycle3());
    CHECK(decode(c.code) == canonical_form(cycle3()));
    CHECK(cycle3().relabeled(c.labeling) == canonical_form(cycle3()));
}

TEST_CASE("property: invariance under 100 random relabelings") {
    std::mt19937_64 rng{21};
    for (int trial = 0; trial < 40; ++trial) {
        int order = 1 + static_cast<int>(rng() % 8);
        auto g = naive::random_graph(rng, order, 0.3 + 0.1 * (trial % 5));
        auto code = canonical_code(g);
        CHECK(decode(code) == canonical_form(g));
        for (int r = 0; r < 100; ++r)
            CHECK(canonical_code(g.relabeled(naive::random_permutation(rng, order))) == code);
    }
}

TEST_CASE("property: equal codes iff isomorphic") {
    std::mt19937_64 rng{22};
    for (int trial = 0; trial < 400; ++trial) {
        int order = 2 + static_cast<int>(rng() % 5);
        auto a = naive::random_graph(rng, order);
        // half the time b is a relabelled copy with one pair perturbed
        auto b = a.relabeled(naive::random_permutation(rng, order));
        if (trial % 2) {
            Vertex u = static_cast<Vertex>(rng() % order), v = (u + 1) % order;
            if (b.has_arc(u, v))
                b.remove_arc(u, v);
            else if (!b.has_arc(v, u))
                b.add_arc(u, v);
        }
        CHECK((canonical_code(a) == canonical_code(b)) == naive_isomorphic(a, b));
    }
}

TEST_CASE("regular graphs canonicalize consistently") {
    // vertex-transitive inputs give the refinement nothing to split
    auto w8 = witness(WitnessName::w8);
    std::mt19937_64 rng{23};
    auto code = canonical_code(w8);
    for (int r = 0; r < 100; ++r)
        CHECK(canonical_code(w8.relabeled(naive::random_permutation(rng, 8))) == code);
    auto c12 = build_circulant(CirculantSpec::make(12, {1, 3, -4}));
    auto code12 = canonical_code(c12);
    for (int r = 0; r < 20; ++r)
        CHECK(canonical_code(c12.relabeled(naive::random_permutation(rng, 12))) == code12);
}
