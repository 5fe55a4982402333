#include "oramsey/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <tuple>

#include "oramsey/errors.hpp"

namespace oramsey {

namespace {

constexpr std::size_t pair_index(int i, int j) {
    // column j holds the j pairs (0, j), ..., (j-1, j)
    return 1 + static_cast<std::size_t>(j * (j - 1) / 2 + i);
}

std::uint8_t relation(const OrientedGraph &g, Vertex a, Vertex b) {
    if (g.has_arc(a, b))
        return 1;
    if (g.has_arc(b, a))
        return 2;
    return 0;
}

/// Colour refinement seeded by (out-degree, in-degree). Colours are ranks of
/// signatures, so they depend only on the isomorphism type of the vertex.
std::vector<int> refined_colours(const OrientedGraph &g) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n));
    {
        std::map<std::pair<int, int>, int> rank;
        for (Vertex v = 0; v < n; ++v)
            rank[{g.out_degree(v), g.in_degree(v)}] = 0;
        int next = 0;
        for (auto &[key, r] : rank)
            r = next++;
        for (Vertex v = 0; v < n; ++v)
            colour[static_cast<std::size_t>(v)] = rank[{g.out_degree(v), g.in_degree(v)}];
    }

    int classes = 0;
    for (int c : colour)
        classes = std::max(classes, c + 1);

    for (;;) {
        using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
        std::vector<Signature> sig(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> outs, ins;
            for (Vertex w : g.out(v))
                outs.push_back(colour[static_cast<std::size_t>(w)]);
            for (Vertex w : g.in(v))
                ins.push_back(colour[static_cast<std::size_t>(w)]);
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            sig[static_cast<std::size_t>(v)] = {colour[static_cast<std::size_t>(v)], std::move(outs),
                                                std::move(ins)};
        }
        std::vector<Signature> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (static_cast<int>(distinct.size()) == classes)
            return colour;
        classes = static_cast<int>(distinct.size());
        for (Vertex v = 0; v < n; ++v)
            colour[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) -
                distinct.begin());
    }
}

class Minimizer {
  public:
    explicit Minimizer(const OrientedGraph &g) : g_{g}, n_{g.order()} {
        std::vector<int> colour = refined_colours(g);
        std::vector<Vertex> by_colour(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v)
            by_colour[static_cast<std::size_t>(v)] = v;
        std::stable_sort(by_colour.begin(), by_colour.end(), [&](Vertex a, Vertex b) {
            return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
        });
        for (int p = 0; p < n_; ++p) {
            int c = colour[static_cast<std::size_t>(by_colour[static_cast<std::size_t>(p)])];
            VertexSet cell;
            for (Vertex v = 0; v < n_; ++v)
                if (colour[static_cast<std::size_t>(v)] == c)
                    cell.insert(v);
            cell_at_[static_cast<std::size_t>(p)] = cell;
        }
        cur_.assign(1 + static_cast<std::size_t>(n_ * (n_ - 1) / 2), 0);
        cur_[0] = static_cast<std::uint8_t>(n_);
    }

    CanonicalResult run() {
        search(0, VertexSet{}, true);
        CanonicalResult r;
        r.code.bytes = best_;
        r.labeling.assign(static_cast<std::size_t>(n_), 0);
        for (int p = 0; p < n_; ++p)
            r.labeling[static_cast<std::size_t>(best_perm_[static_cast<std::size_t>(p)])] = p;
        return r;
    }

  private:
    // below: the fixed columns 0..p-1 are strictly smaller than best's.
    void search(int p, VertexSet used, bool below) {
        if (p == n_) {
            if (below) {
                best_ = cur_;
                best_perm_ = placed_;
                ++version_;
            }
            return;
        }
        const unsigned long entry_version = version_;
        for (Vertex v : cell_at_[static_cast<std::size_t>(p)] - used) {
            // a best found inside this subtree shares our prefix
            bool smaller = version_ == entry_version ? below : false;
            int cmp = 0;
            for (int i = 0; i < p; ++i) {
                std::uint8_t rel = relation(g_, placed_[static_cast<std::size_t>(i)], v);
                std::size_t at = pair_index(i, p);
                cur_[at] = rel;
                if (!smaller && cmp == 0 && rel != best_[at])
                    cmp = rel < best_[at] ? -1 : 1;
            }
            if (cmp > 0)
                continue;
            placed_[static_cast<std::size_t>(p)] = v;
            VertexSet next = used;
            next.insert(v);
            search(p + 1, next, smaller || cmp < 0);
        }
    }

    const OrientedGraph &g_;
    int n_;
    std::array<VertexSet, canonical_order_limit> cell_at_{};
    std::array<Vertex, canonical_order_limit> placed_{};
    std::array<Vertex, canonical_order_limit> best_perm_{};
    std::vector<std::uint8_t> cur_;
    std::vector<std::uint8_t> best_;
    unsigned long version_ = 0;
};

} // namespace

CanonicalResult canonicalize(const OrientedGraph &g) {
    if (g.order() > canonical_order_limit)
        throw SizeError("canonical_code supports order <= " + std::to_string(canonical_order_limit) +
                        ", got " + std::to_string(g.order()));
    return Minimizer{g}.run();
}

OrientedGraph canonical_form(const OrientedGraph &g) {
    CanonicalResult r = canonicalize(g);
    return g.relabeled(r.labeling);
}

CanonicalCode encode_labeled(const OrientedGraph &g) {
    if (g.order() > 255)
        throw SizeError("order too large to encode");
    const int n = g.order();
    CanonicalCode code;
    code.bytes.assign(1 + static_cast<std::size_t>(n * (n - 1) / 2), 0);
    code.bytes[0] = static_cast<std::uint8_t>(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            code.bytes[pair_index(i, j)] = relation(g, i, j);
    return code;
}

OrientedGraph decode(const CanonicalCode &code) {
    if (code.bytes.empty())
        throw ArgumentError("empty canonical code");
    const int n = code.bytes[0];
    if (code.bytes.size() != 1 + static_cast<std::size_t>(n * (n - 1) / 2))
        throw ArgumentError("canonical code length does not match its order");
    OrientedGraph g{n};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            switch (code.bytes[pair_index(i, j)]) {
            case 0: break;
            case 1: g.add_arc(i, j); break;
            case 2: g.add_arc(j, i); break;
            default: throw ArgumentError("invalid pair entry in canonical code");
            }
        }
    return g;
}

} // namespace oramsey
