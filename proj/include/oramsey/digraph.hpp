#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "oramsey/vertex_set.hpp"

namespace oramsey {

using Arc = std::pair<Vertex, Vertex>;

/// Loop-free digraph with at most one arc between any two vertices.
///
/// Both the out- and in-adjacency are stored so that every neighbourhood
/// query is a single word read.
class OrientedGraph {
  public:
    /// Throws SizeError unless 1 <= order <= 64.
    explicit OrientedGraph(int order);

    int order() const { return order_; }
    VertexSet vertices() const { return VertexSet::first_n(order_); }

    VertexSet out(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
    VertexSet in(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
    /// Vertices joined to v by an arc in either direction.
    VertexSet adjacent(Vertex v) const { return out(v) | in(v); }
    /// Vertices other than v not joined to v.
    VertexSet non_adjacent(Vertex v) const {
        return vertices() - adjacent(v) - VertexSet::single(v);
    }

    bool has_arc(Vertex u, Vertex v) const { return out(u).contains(v); }
    bool adjacent(Vertex u, Vertex v) const { return adjacent(u).contains(v); }

    int out_degree(Vertex v) const { return out(v).size(); }
    int in_degree(Vertex v) const { return in(v).size(); }

    /// Adds u->v. A repeated arc is accepted silently.
    /// Throws LoopError for u == v, AntisymmetryError when v->u exists,
    /// SizeError for an index outside the graph.
    void add_arc(Vertex u, Vertex v);

    /// Removes u->v if present.
    void remove_arc(Vertex u, Vertex v);

    /// All arcs sorted by (tail, head).
    std::vector<Arc> arcs() const;

    /// Graph on the same vertices where vertex v becomes perm[v].
    OrientedGraph relabeled(std::span<const Vertex> perm) const;

    /// Same graph with every arc reversed.
    OrientedGraph reversed() const;

    bool operator==(const OrientedGraph &other) const;

  private:
    void check_vertex(Vertex v) const;

    int order_;
    std::array<VertexSet, max_order> out_{};
    std::array<VertexSet, max_order> in_{};
};

inline OrientedGraph new_graph(int order) { return OrientedGraph{order}; }

/// Builds a graph from an arc list; errors as in add_arc.
OrientedGraph graph_from_arcs(int order, std::span<const Arc> arcs);

struct Neighbourhoods {
    VertexSet out;   ///< heads of arcs leaving v
    VertexSet in;    ///< tails of arcs entering v
    VertexSet indep; ///< everything else except v itself
};

Neighbourhoods neighborhoods(const OrientedGraph &g, Vertex v);

/// Subgraph induced on s, relabelled 0..|s|-1 in ascending original order.
/// Throws ArgumentError for an empty s.
OrientedGraph induced_subgraph(const OrientedGraph &g, VertexSet s);

int arc_count(const OrientedGraph &g);

} // namespace oramsey
