#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oramsey/canonical.hpp"
#include "oramsey/constructions.hpp"
#include "oramsey/digraph.hpp"

namespace oramsey {

inline constexpr int search_order_limit = 10;

enum class SearchMode {
    count_classes, ///< every level exhaustively
    find_any,      ///< stop at the first free graph of max_order
    prove_empty,   ///< like find_any; success means nothing was found
};

std::optional<SearchMode> parse_search_mode(std::string_view text);
std::string to_string(SearchMode mode);

struct LevelProgress {
    int order = 0;
    std::uint64_t classes;
    double seconds;
};

struct SearchConfig {
    int m = 3;
    int n = 3;
    int max_order = 9;
    SearchMode mode = SearchMode::count_classes;
    int worker_count = 1;
    /// Bound both oriented degrees by m-1 while extending; only used for n = 3.
    bool degree_cap_enabled = true;
    /// A level whose class set grows past this aborts the search.
    std::size_t class_cap = 10'000'000;
    std::function<void(const LevelProgress &)> on_level;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes_independence = 0;
    std::uint64_t prunes_tournament = 0;
    std::uint64_t prunes_degree_cap = 0;
    std::uint64_t prunes_canonical = 0;
};

struct LevelCount {
    int order = 0;
    std::uint64_t classes;
    /// False when the level was cut short (find-any / prove-empty, or guard).
    bool exhaustive;
};

struct SearchReport {
    int m = 0;
    int n = 0;
    int max_order = 0;
    SearchMode mode = SearchMode::count_classes;
    std::vector<LevelCount> per_order;
    /// Largest order with at least one free graph (0 if none).
    int extremal_order = 0;
    /// True when some level came out empty, so extremal_order + 1 is the
    /// Ramsey number r(I_m, L_n).
    bool complete = false;
    /// Canonical forms at extremal_order, sorted by canonical code.
    std::vector<CanonicalCode> representatives;
    /// Canonical codes of every retained level, index 0 holding order 1.
    std::vector<std::vector<CanonicalCode>> levels;
    SearchStats stats;

    std::optional<int> ramsey_number() const {
        if (!complete)
            return std::nullopt;
        return extremal_order + 1;
    }
};

/// Thrown when a level exceeds the class cap; carries the levels completed
/// before the abort.
class SearchGuardError : public std::runtime_error {
  public:
    SearchGuardError(const std::string &what, SearchReport partial)
        : std::runtime_error(what), partial_{std::move(partial)} {}

    const SearchReport &partial() const { return partial_; }

  private:
    SearchReport partial_;
};

/// Level-by-level isomorph-free generation of (I_m, L_n)-free oriented
/// graphs. Each representative of order k is extended by a new vertex with
/// a choice of {no arc, new->old, old->new} per old vertex (old vertices
/// ascending, choices in that order); a child is kept if it is still free,
/// respects the degree caps when enabled, and its canonical code is new.
/// Throws ArgumentError on an invalid configuration.
SearchReport extremal_search(const SearchConfig &config);

/// Extremality condition for an (I_m, L_n)-free graph of order
/// 2 r(I_m, L_{n-1}) + r(I_{m-1}, L_n) - 2: both oriented degrees equal
/// r(I_m, L_{n-1}) - 1 and the non-neighbourhood has r(I_{m-1}, L_n) - 1
/// vertices. Uses the exact sub-values supplied by the caller. Only a
/// post-hoc filter; it must not be used to prune intermediate levels.
bool satisfies_equality_condition(const OrientedGraph &g, int r_m_nminus1, int r_mminus1_n);

struct CayleyScanReport {
    GroupKind group = GroupKind::cyclic;
    int order = 0;
    int m = 0;
    int n = 0;
    long long scanned = 0;
    long long free_count = 0;
    std::vector<std::string> free_connection_sets;
};

/// Runs is_free on every oriented Cayley digraph of the group.
CayleyScanReport cayley_scan(GroupKind group, int order, int m, int n);

std::string search_report_json(const SearchReport &report);
std::string search_report_text(const SearchReport &report);
std::string cayley_report_json(const CayleyScanReport &report);
std::string cayley_report_text(const CayleyScanReport &report);

} // namespace oramsey
