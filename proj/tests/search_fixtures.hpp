#pragma once

// Frozen output of tests/oracle/search_oracle.py (brute-force freeness,
// networkx isomorphism dedup, no degree cap).

#include <cstdint>
#include <vector>

namespace fixtures {

struct ClassCounts {
    int m;
    int n;
    std::vector<std::uint64_t> per_order; ///< index 0 is order 1
};

inline const std::vector<ClassCounts> class_counts = {
    {2, 3, {1, 1, 1, 0}},
    {2, 4, {1, 1, 2, 3, 3, 1, 1, 0}},
    {3, 3, {1, 2, 5, 13, 25, 31, 7, 1, 0}},
    {4, 3, {1, 2, 6, 21, 108, 798}},
    {3, 4, {1, 2, 6, 32, 325}},
};

struct LabeledCounts {
    int m;
    int n;
    std::vector<long long> per_order; ///< orders 1..5
};

inline const std::vector<LabeledCounts> labeled_counts = {
    {2, 3, {1, 2, 2, 0, 0}},
    {2, 4, {1, 2, 8, 40, 184}},
    {3, 3, {1, 3, 20, 224, 2554}},
    {4, 3, {1, 3, 21, 316, 9354}},
    {3, 4, {1, 3, 26, 612, 35488}},
};

} // namespace fixtures
