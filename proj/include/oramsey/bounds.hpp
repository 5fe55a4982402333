#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oramsey {

using BigInt = boost::multiprecision::cpp_int;

// Throughout, "ld" is the base-2 logarithm.

/// Where a bound came from.
enum class Source {
    known_value,
    witness,
    recurrence,
    quadratic,
    exponential,
    appendix_formula,
    asymptotic_l3,
    asymptotic_general,
    classical_sandwich,
};

std::string to_string(Source s);

/// Exactly known oriented values r(I_m, L_n) from the literature, plus the
/// two values established by the witnesses and the quadratic bound.
struct KnownValue {
    int m;
    int n;
    std::uint64_t value;
    const char *citation;
};

const std::vector<KnownValue> &known_directed_values();
std::optional<std::uint64_t> known_directed_value(int m, int n);

/// Classical undirected r(I_m, K_n) where tabulated (symmetric in m, n).
/// Covers r(2, n) = n, r(m, 2) = m, the K_3 column for m = 2..9,
/// r(4, 4) = 18 and r(4, 5) = 25.
std::optional<std::uint64_t> classical_ramsey(int m, std::uint64_t n);

/// 2 * sub_upper(m, n-1) + sub_upper(m-1, n) - 1. Requires m >= 2, n >= 3;
/// the n = 2 row is the base r(I_m, L_2) = m.
BigInt recurrence_upper(int m, int n, const std::function<BigInt(int, int)> &sub_upper);

/// m^2 - m + 3 for m >= 3.
std::uint64_t quadratic_upper(int m);

/// 2^(n-1) for 1 <= n <= 62.
std::uint64_t exponential_upper(int n);

/// Binomial coefficient, zero when b < 0, a < 0 or b > a.
BigInt binomial(long long a, long long b);

/// sum_{i=0}^{n-2} C(i+m-1, i+1) 2^i - C(m+n-6, m-4) 2^(n-3) + 1 for
/// m >= 2, n >= 3.
BigInt appendix_v(int m, int n);

/// v ld(d) / (160 d ld(r+1)); a floating-point diagnostic.
double alon_lower_independence(double v, double d, double r);

/// Average-degree variant: v ld(2d) / (640 d ld(r+1)).
double alon_average_lower_independence(double v, double d, double r);

/// 2^-16 eps (v/d) ld(d) for graphs with few transitive triangles.
double sparse_lower_independence(double v, double d, double eps);

/// ceil(2^9 m^2 / ld m) for m >= 2.
BigInt asymptotic_upper_l3(int m);

/// ceil(2^(19 n) m^(n-1) / (ld m)^(n-2)) for m, n >= 2.
BigInt asymptotic_upper_general(int m, int n);

struct Sandwich {
    std::optional<std::uint64_t> lower; ///< r(I_m, K_n)
    std::optional<std::uint64_t> upper; ///< r(I_m, K_{2^(n-1)})
};

Sandwich classical_sandwich(int m, int n);

/// (m^2 - m + 2)(2m - 3) / 2 for m >= 3.
std::uint64_t edge_minimum(int m);

struct BoundEntry {
    int m = 0;
    int n = 0;
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    bool exact = false;
    std::vector<Source> lower_sources; ///< all sources attaining `lower`
    std::vector<Source> upper_sources; ///< all sources attaining `upper`
};

/// Sources joined with '+', e.g. "known-value+quadratic".
std::string sources_text(const std::vector<Source> &sources);

inline constexpr int bounds_grid_limit = 20;

/// Best lower and upper bounds for 2 <= m <= max_m, 2 <= n <= max_n, built
/// bottom-up so that the recurrence sees the best sub-bounds.
class BoundsTable {
  public:
    /// Throws ArgumentError outside 2..bounds_grid_limit.
    BoundsTable(int max_m, int max_n);

    const BoundEntry &at(int m, int n) const;
    int max_m() const { return max_m_; }
    int max_n() const { return max_n_; }

    /// Row-major by m, then n.
    std::vector<BoundEntry> entries() const;

  private:
    BoundEntry compute(int m, int n) const;
    BigInt upper_of(int m, int n) const;

    int max_m_;
    int max_n_;
    std::vector<BoundEntry> cells_;
};

BoundEntry best_bounds(int m, int n);

/// Header `m,n,lower,upper,exact,lower_src,upper_src`, one row per entry.
std::string bounds_csv(const std::vector<BoundEntry> &entries);
/// Array of objects with the same fields as the CSV.
std::string bounds_json(const std::vector<BoundEntry> &entries);
/// Aligned plain-text table.
std::string bounds_text(const std::vector<BoundEntry> &entries);

} // namespace oramsey
