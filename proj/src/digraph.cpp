#include "oramsey/digraph.hpp"

#include <string>

#include "oramsey/errors.hpp"

namespace oramsey {

OrientedGraph::OrientedGraph(int order) : order_{order} {
    if (order < 1 || order > max_order)
        throw SizeError("graph order must be in 1..64, got " + std::to_string(order));
}

void OrientedGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order_)
        throw SizeError("vertex " + std::to_string(v) + " outside graph of order " +
                        std::to_string(order_));
}

void OrientedGraph::add_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw LoopError("loop at vertex " + std::to_string(u));
    if (has_arc(v, u))
        throw AntisymmetryError("arc " + std::to_string(u) + "->" + std::to_string(v) +
                                " would form a 2-cycle with " + std::to_string(v) + "->" +
                                std::to_string(u));
    out_[static_cast<std::size_t>(u)].insert(v);
    in_[static_cast<std::size_t>(v)].insert(u);
}

void OrientedGraph::remove_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    out_[static_cast<std::size_t>(u)].erase(v);
    in_[static_cast<std::size_t>(v)].erase(u);
}

std::vector<Arc> OrientedGraph::arcs() const {
    std::vector<Arc> result;
    for (Vertex u = 0; u < order_; ++u)
        for (Vertex v : out(u))
            result.emplace_back(u, v);
    return result;
}

OrientedGraph OrientedGraph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != order_)
        throw ArgumentError("permutation size does not match graph order");
    VertexSet seen;
    for (Vertex p : perm) {
        check_vertex(p);
        if (seen.contains(p))
            throw ArgumentError("relabelling is not a permutation");
        seen.insert(p);
    }
    OrientedGraph g{order_};
    for (Vertex u = 0; u < order_; ++u)
        for (Vertex v : out(u))
            g.add_arc(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return g;
}

OrientedGraph OrientedGraph::reversed() const {
    OrientedGraph g{order_};
    g.out_ = in_;
    g.in_ = out_;
    return g;
}

bool OrientedGraph::operator==(const OrientedGraph &other) const {
    if (order_ != other.order_)
        return false;
    for (Vertex v = 0; v < order_; ++v)
        if (out(v) != other.out(v))
            return false;
    return true;
}

OrientedGraph graph_from_arcs(int order, std::span<const Arc> arcs) {
    OrientedGraph g{order};
    for (auto [u, v] : arcs)
        g.add_arc(u, v);
    return g;
}

Neighbourhoods neighborhoods(const OrientedGraph &g, Vertex v) {
    if (v < 0 || v >= g.order())
        throw SizeError("vertex " + std::to_string(v) + " outside graph");
    return {g.out(v), g.in(v), g.non_adjacent(v)};
}

OrientedGraph induced_subgraph(const OrientedGraph &g, VertexSet s) {
    if (s.empty())
        throw ArgumentError("induced subgraph on an empty vertex set");
    if (!s.is_subset_of(g.vertices()))
        throw SizeError("vertex set exceeds graph order");

    std::array<Vertex, max_order> index{};
    int k = 0;
    for (Vertex v : s)
        index[static_cast<std::size_t>(v)] = k++;

    OrientedGraph sub{k};
    for (Vertex u : s)
        for (Vertex v : g.out(u) & s)
            sub.add_arc(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    return sub;
}

int arc_count(const OrientedGraph &g) {
    int total = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        total += g.out_degree(v);
    return total;
}

} // namespace oramsey
