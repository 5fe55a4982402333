#pragma once

#include <string>
#include <vector>

#include "oramsey/digraph.hpp"

namespace oramsey {

/// Outcome of running one of the structural lemma checks on a concrete graph.
struct LemmaReport {
    /// False when the graph does not satisfy the check's hypothesis.
    bool applicable = false;
    std::string reason; ///< why the check was inapplicable
    std::vector<std::string> violations;

    bool passed() const { return applicable && violations.empty(); }
};

/// For an (I_m, L_n)-free g: both oriented neighbourhoods of every vertex
/// induce (I_m, L_{n-1})-free graphs and every non-neighbourhood induces an
/// (I_{m-1}, L_n)-free graph.
LemmaReport check_neighborhood_lemma(const OrientedGraph &g, int m, int n);

struct DegreeReport : LemmaReport {
    int min_out = 0, max_out = 0, min_in = 0, max_in = 0;
};

/// For an (I_m, L_3)-free g: every out- and in-neighbourhood is independent,
/// so both oriented degrees are at most m-1.
DegreeReport check_l3_degree_bound(const OrientedGraph &g, int m);

struct EightVertexReport : LemmaReport {
    /// Six named parts in order; each entry is (description, holds).
    std::vector<std::pair<std::string, bool>> parts;
};

/// The six properties of every (I_3, L_3)-free graph on eight vertices:
/// 4-regular; every triple spans an edge; every non-neighbourhood is a
/// triangle; every 5-set has a triangle or is a C_5; every 6-set has a
/// triangle; isomorphic to W8. Orientation is ignored in parts 2 to 5.
EightVertexReport check_eight_vertex_properties(const OrientedGraph &g);

} // namespace oramsey
