#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oramsey/digraph.hpp"

namespace oramsey {

struct Certificate {
    enum class Kind { independent_set, transitive_tournament };

    Kind kind;
    /// For a transitive tournament the vertices are in dominance order:
    /// every vertex has an arc to each later one.
    std::vector<Vertex> vertices;
};

/// True iff the certificate's claim holds in g.
bool certificate_valid(const OrientedGraph &g, const Certificate &c);

/// Independent set of exactly m vertices, or nullopt if none exists.
std::optional<Certificate> find_independent_set(const OrientedGraph &g, int m);

/// Transitive tournament L_n in dominance order, or nullopt if none exists.
std::optional<Certificate> find_transitive_tournament(const OrientedGraph &g, int n);

/// Searches restricted to vertex subsets. `pool` limits the candidates.
std::optional<std::vector<Vertex>> independent_set_within(const OrientedGraph &g, VertexSet pool,
                                                          int size);
std::optional<std::vector<Vertex>> transitive_tournament_within(const OrientedGraph &g,
                                                                VertexSet pool, int size);

/// An independent m-set that contains v and otherwise uses only `pool`.
std::optional<std::vector<Vertex>> independent_set_through(const OrientedGraph &g, Vertex v, int m,
                                                           VertexSet pool);

/// A transitive tournament on n vertices that contains v, in dominance
/// order. Only arcs present in g are considered.
std::optional<std::vector<Vertex>> transitive_tournament_through(const OrientedGraph &g, Vertex v,
                                                                 int n);

struct FreenessVerdict {
    bool free = true;
    std::optional<Certificate> certificate;
};

/// (I_m, L_n)-freeness. The independent set is looked for first.
FreenessVerdict is_free(const OrientedGraph &g, int m, int n);

std::int64_t count_transitive_triangles(const OrientedGraph &g);

int independence_number(const OrientedGraph &g);

} // namespace oramsey
