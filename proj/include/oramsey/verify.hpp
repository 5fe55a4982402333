#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "oramsey/search.hpp"

namespace oramsey {

enum class VerdictStatus {
    exact,
    lower_side_unknown, ///< no witness of order claimed-1 available
    witness_not_free,   ///< a witness of the right order exists but fails
    upper_mismatch,     ///< no derived upper bound equals the claim
};

std::string to_string(VerdictStatus s);

struct RamseyVerdict {
    int m = 0;
    int n = 0;
    std::uint64_t claimed = 0;
    VerdictStatus status = VerdictStatus::lower_side_unknown;
    /// e.g. "W14 is (I_4, L_3)-free on 14 vertices"
    std::string lower_evidence;
    /// e.g. "quadratic: r <= 15" or "complete search: order 9 is empty"
    std::string upper_evidence;
    /// Best upper bound found, if any source covers (m, n).
    std::optional<std::uint64_t> upper;

    bool exact() const { return status == VerdictStatus::exact; }
};

/// Lower side: a named witness of order claimed-1, else a representative at
/// order claimed-1 from `search`, must pass is_free. Upper side: a completed
/// search with r = claimed, else a best_bounds upper equal to the claim from
/// some source other than the literature table.
RamseyVerdict verify_ramsey_value(int m, int n, std::uint64_t claimed,
                                  const std::optional<SearchReport> &search = std::nullopt);

std::string verdict_text(const RamseyVerdict &v);

} // namespace oramsey
