#include "oramsey/detectors.hpp"

#include <algorithm>
#include <array>

#include "oramsey/errors.hpp"

namespace oramsey {

namespace {

// Branch and bound on the non-adjacency relation: branch on the pool vertex
// with the most neighbours inside the pool, include first, then exclude.
bool independent_rec(const OrientedGraph &g, VertexSet pool, int need, std::vector<Vertex> &chosen) {
    while (true) {
        if (need == 0)
            return true;
        if (pool.size() < need)
            return false;

        Vertex pivot = pool.front();
        int pivot_degree = -1;
        for (Vertex v : pool) {
            int d = (g.adjacent(v) & pool).size();
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        if (pivot_degree == 0) {
            for (int i = 0; i < need; ++i)
                chosen.push_back(pool.pop_front());
            return true;
        }

        chosen.push_back(pivot);
        VertexSet with = pool - g.adjacent(pivot);
        with.erase(pivot);
        if (independent_rec(g, with, need - 1, chosen))
            return true;
        chosen.pop_back();
        pool.erase(pivot);
    }
}

struct ChainSearch {
    const OrientedGraph &g;
    std::array<Vertex, max_order> by_out_degree{};
    int count = 0;

    explicit ChainSearch(const OrientedGraph &graph) : g{graph} {
        count = g.order();
        for (Vertex v = 0; v < count; ++v)
            by_out_degree[static_cast<std::size_t>(v)] = v;
        std::stable_sort(by_out_degree.begin(), by_out_degree.begin() + count,
                         [&](Vertex a, Vertex b) { return g.out_degree(a) > g.out_degree(b); });
    }

    // Every vertex of pool is beaten by all of chain; extend in dominance order.
    bool extend(VertexSet pool, int need, std::vector<Vertex> &chain) const {
        if (need == 0)
            return true;
        if (pool.size() < need)
            return false;
        for (int i = 0; i < count; ++i) {
            Vertex u = by_out_degree[static_cast<std::size_t>(i)];
            if (!pool.contains(u))
                continue;
            VertexSet next = pool & g.out(u);
            if (next.size() < need - 1)
                continue;
            chain.push_back(u);
            if (extend(next, need - 1, chain))
                return true;
            chain.pop_back();
        }
        return false;
    }

    // chain ends in vertices beating v; in_pool are further candidates before
    // v, out_pool candidates after v.
    bool through(Vertex v, VertexSet in_pool, VertexSet out_pool, int remaining,
                 std::vector<Vertex> &chain) const {
        std::vector<Vertex> tail;
        if (extend(out_pool, remaining, tail)) {
            chain.push_back(v);
            chain.insert(chain.end(), tail.begin(), tail.end());
            return true;
        }
        if (remaining == 0)
            return false;
        for (Vertex u : in_pool) {
            chain.push_back(u);
            if (through(v, in_pool & g.out(u), out_pool & g.out(u), remaining - 1, chain))
                return true;
            chain.pop_back();
        }
        return false;
    }
};

void require_positive(int k, const char *what) {
    if (k < 1)
        throw ArgumentError(std::string(what) + " must be at least 1");
}

} // namespace

bool certificate_valid(const OrientedGraph &g, const Certificate &c) {
    VertexSet seen;
    for (Vertex v : c.vertices) {
        if (v < 0 || v >= g.order() || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < c.vertices.size(); ++j) {
            Vertex a = c.vertices[i], b = c.vertices[j];
            if (c.kind == Certificate::Kind::independent_set ? g.adjacent(a, b) : !g.has_arc(a, b))
                return false;
        }
    return true;
}

std::optional<std::vector<Vertex>> independent_set_within(const OrientedGraph &g, VertexSet pool,
                                                          int size) {
    std::vector<Vertex> chosen;
    if (size <= 0)
        return chosen;
    if (!independent_rec(g, pool & g.vertices(), size, chosen))
        return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::optional<std::vector<Vertex>> transitive_tournament_within(const OrientedGraph &g,
                                                                VertexSet pool, int size) {
    std::vector<Vertex> chain;
    if (size <= 0)
        return chain;
    if (!ChainSearch{g}.extend(pool & g.vertices(), size, chain))
        return std::nullopt;
    return chain;
}

std::optional<std::vector<Vertex>> independent_set_through(const OrientedGraph &g, Vertex v, int m,
                                                           VertexSet pool) {
    if (m <= 0)
        return std::vector<Vertex>{};
    auto rest = independent_set_within(g, g.non_adjacent(v) & pool, m - 1);
    if (!rest)
        return std::nullopt;
    rest->push_back(v);
    std::sort(rest->begin(), rest->end());
    return rest;
}

std::optional<std::vector<Vertex>> transitive_tournament_through(const OrientedGraph &g, Vertex v,
                                                                 int n) {
    if (n <= 0)
        return std::vector<Vertex>{};
    std::vector<Vertex> chain;
    if (!ChainSearch{g}.through(v, g.in(v), g.out(v), n - 1, chain))
        return std::nullopt;
    return chain;
}

std::optional<Certificate> find_independent_set(const OrientedGraph &g, int m) {
    require_positive(m, "independent set size");
    auto found = independent_set_within(g, g.vertices(), m);
    if (!found)
        return std::nullopt;
    return Certificate{Certificate::Kind::independent_set, std::move(*found)};
}

std::optional<Certificate> find_transitive_tournament(const OrientedGraph &g, int n) {
    require_positive(n, "tournament size");
    auto found = transitive_tournament_within(g, g.vertices(), n);
    if (!found)
        return std::nullopt;
    return Certificate{Certificate::Kind::transitive_tournament, std::move(*found)};
}

FreenessVerdict is_free(const OrientedGraph &g, int m, int n) {
    require_positive(m, "m");
    require_positive(n, "n");
    if (auto c = find_independent_set(g, m))
        return {false, std::move(c)};
    if (auto c = find_transitive_tournament(g, n))
        return {false, std::move(c)};
    return {true, std::nullopt};
}

std::int64_t count_transitive_triangles(const OrientedGraph &g) {
    std::int64_t total = 0;
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b : g.out(a))
            total += (g.out(a) & g.out(b)).size();
    return total;
}

int independence_number(const OrientedGraph &g) {
    int alpha = 1;
    while (alpha < g.order() && independent_set_within(g, g.vertices(), alpha + 1))
        ++alpha;
    return alpha;
}

} // namespace oramsey
