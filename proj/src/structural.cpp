#include "oramsey/structural.hpp"

#include <algorithm>
#include <string>

#include "oramsey/canonical.hpp"
#include "oramsey/constructions.hpp"
#include "oramsey/detectors.hpp"

namespace oramsey {

namespace {

bool set_is_free(const OrientedGraph &g, VertexSet s, int m, int n) {
    if (s.empty())
        return true;
    return is_free(induced_subgraph(g, s), m, n).free;
}

std::string set_text(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        if (!first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

bool has_triangle(const OrientedGraph &g, VertexSet s) {
    for (Vertex a : s)
        for (Vertex b : g.adjacent(a) & s)
            if (b > a && !(g.adjacent(a) & g.adjacent(b) & s).empty())
                return true;
    return false;
}

bool is_c5(const OrientedGraph &g, VertexSet s) {
    if (s.size() != 5)
        return false;
    for (Vertex v : s)
        if ((g.adjacent(v) & s).size() != 2)
            return false;
    // a 2-regular simple graph on 5 vertices is a single cycle
    return true;
}

template <typename F>
void for_each_subset_of_size(int order, int k, F &&f) {
    auto rec = [&](auto &self, int start, int depth, VertexSet s) -> bool {
        if (depth == k)
            return f(s);
        for (Vertex v = start; v <= order - (k - depth); ++v) {
            VertexSet t = s;
            t.insert(v);
            if (!self(self, v + 1, depth + 1, t))
                return false;
        }
        return true;
    };
    rec(rec, 0, 0, VertexSet{});
}

} // namespace

LemmaReport check_neighborhood_lemma(const OrientedGraph &g, int m, int n) {
    LemmaReport r;
    if (m < 2 || n < 2) {
        r.reason = "requires m, n >= 2";
        return r;
    }
    auto verdict = is_free(g, m, n);
    if (!verdict.free) {
        r.reason = "graph is not (I_" + std::to_string(m) + ", L_" + std::to_string(n) + ")-free";
        return r;
    }
    r.applicable = true;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = neighborhoods(g, v);
        if (!set_is_free(g, nb.out, m, n - 1))
            r.violations.push_back("out-neighbourhood of " + std::to_string(v) + " " +
                                   set_text(nb.out) + " is not (I_m, L_{n-1})-free");
        if (!set_is_free(g, nb.in, m, n - 1))
            r.violations.push_back("in-neighbourhood of " + std::to_string(v) + " " +
                                   set_text(nb.in) + " is not (I_m, L_{n-1})-free");
        if (!set_is_free(g, nb.indep, m - 1, n))
            r.violations.push_back("non-neighbourhood of " + std::to_string(v) + " " +
                                   set_text(nb.indep) + " is not (I_{m-1}, L_n)-free");
    }
    return r;
}

DegreeReport check_l3_degree_bound(const OrientedGraph &g, int m) {
    DegreeReport r;
    if (m < 1) {
        r.reason = "requires m >= 1";
        return r;
    }
    if (!is_free(g, m, 3).free) {
        r.reason = "graph is not (I_" + std::to_string(m) + ", L_3)-free";
        return r;
    }
    r.applicable = true;
    r.min_out = r.min_in = g.order();
    for (Vertex v = 0; v < g.order(); ++v) {
        int dout = g.out_degree(v), din = g.in_degree(v);
        r.min_out = std::min(r.min_out, dout);
        r.max_out = std::max(r.max_out, dout);
        r.min_in = std::min(r.min_in, din);
        r.max_in = std::max(r.max_in, din);
        if (dout > m - 1 || din > m - 1)
            r.violations.push_back("vertex " + std::to_string(v) + " has degrees (out " +
                                   std::to_string(dout) + ", in " + std::to_string(din) +
                                   ") above m-1 = " + std::to_string(m - 1));
        for (Vertex a : g.out(v))
            if (!(g.adjacent(a) & g.out(v)).empty()) {
                r.violations.push_back("out-neighbourhood of " + std::to_string(v) +
                                       " is not independent");
                break;
            }
        for (Vertex a : g.in(v))
            if (!(g.adjacent(a) & g.in(v)).empty()) {
                r.violations.push_back("in-neighbourhood of " + std::to_string(v) +
                                       " is not independent");
                break;
            }
    }
    return r;
}

EightVertexReport check_eight_vertex_properties(const OrientedGraph &g) {
    EightVertexReport r;
    if (g.order() != 8) {
        r.reason = "requires exactly 8 vertices";
        return r;
    }
    if (!is_free(g, 3, 3).free) {
        r.reason = "graph is not (I_3, L_3)-free";
        return r;
    }
    r.applicable = true;

    bool regular = true;
    for (Vertex v = 0; v < 8; ++v)
        regular = regular && g.adjacent(v).size() == 4;
    r.parts.emplace_back("4-regular", regular);

    bool triples = true;
    for_each_subset_of_size(8, 3, [&](VertexSet s) {
        bool edge = false;
        for (Vertex v : s)
            edge = edge || !(g.adjacent(v) & s).empty();
        triples = triples && edge;
        return triples;
    });
    r.parts.emplace_back("every triple spans an edge", triples);

    bool non_nbhd = true;
    for (Vertex v = 0; v < 8; ++v) {
        VertexSet ind = g.non_adjacent(v);
        non_nbhd = non_nbhd && ind.size() == 3 && has_triangle(g, ind);
    }
    r.parts.emplace_back("every non-neighbourhood induces a triangle", non_nbhd);

    bool fives = true;
    for_each_subset_of_size(8, 5, [&](VertexSet s) {
        fives = fives && (has_triangle(g, s) || is_c5(g, s));
        return fives;
    });
    r.parts.emplace_back("every 5-set contains a triangle or induces C_5", fives);

    bool sixes = true;
    for_each_subset_of_size(8, 6, [&](VertexSet s) {
        sixes = sixes && has_triangle(g, s);
        return sixes;
    });
    r.parts.emplace_back("every 6-set contains a triangle", sixes);

    bool unique = canonical_code(g) == canonical_code(witness(WitnessName::w8));
    r.parts.emplace_back("isomorphic to W8", unique);

    for (const auto &[name, ok] : r.parts)
        if (!ok)
            r.violations.push_back(name);
    return r;
}

} // namespace oramsey
