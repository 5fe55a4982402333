#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "oramsey/digraph.hpp"

namespace oramsey {

/// Largest order canonical_code accepts.
inline constexpr int canonical_order_limit = 12;

/// Relabelling-invariant encoding of an oriented graph.
///
/// Byte 0 is the order. The remaining bytes list the pairs (i, j), i < j,
/// column by column (j ascending, then i ascending), each as 0 (no arc),
/// 1 (i->j) or 2 (j->i). Codes compare lexicographically.
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalCode &) const = default;
    bool operator==(const CanonicalCode &) const = default;

    int order() const { return bytes.empty() ? 0 : bytes.front(); }
};

struct CanonicalResult {
    CanonicalCode code;
    /// labeling[v] is the canonical position of vertex v.
    std::vector<Vertex> labeling;
};

/// Minimum code over all relabellings that list vertices in refined
/// degree-class order. Throws SizeError above canonical_order_limit.
CanonicalResult canonicalize(const OrientedGraph &g);

inline CanonicalCode canonical_code(const OrientedGraph &g) { return canonicalize(g).code; }

/// The graph relabelled into canonical position order.
OrientedGraph canonical_form(const OrientedGraph &g);

/// Encoding of g under its current labels, in the CanonicalCode layout.
CanonicalCode encode_labeled(const OrientedGraph &g);

/// Inverse of encode_labeled; canonical codes decode to canonical forms.
OrientedGraph decode(const CanonicalCode &code);

} // namespace oramsey
