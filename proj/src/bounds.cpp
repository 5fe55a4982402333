#include "oramsey/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <json.hpp>

#include "oramsey/constructions.hpp"
#include "oramsey/errors.hpp"

namespace oramsey {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;

BigInt pow2(unsigned e) { return BigInt{1} << e; }

BigInt ceil_div(const BigInt &num, const BigInt &den) { return (num + den - 1) / den; }

BigInt ceil_real(const Real &x) {
    Real c = boost::multiprecision::ceil(x);
    return c.convert_to<BigInt>();
}

/// k if m = 2^k, otherwise nothing.
std::optional<int> exact_log2(int m) {
    if (m <= 0 || (m & (m - 1)) != 0)
        return std::nullopt;
    int k = 0;
    while ((1 << k) != m)
        ++k;
    return k;
}

std::uint64_t to_u64(const BigInt &x) {
    if (x < 0 || x > BigInt{std::numeric_limits<std::uint64_t>::max()})
        throw SizeError("bound does not fit in 64 bits");
    return x.convert_to<std::uint64_t>();
}

} // namespace

std::string to_string(Source s) {
    switch (s) {
    case Source::known_value: return "known-value";
    case Source::witness: return "witness";
    case Source::recurrence: return "recurrence";
    case Source::quadratic: return "quadratic";
    case Source::exponential: return "exponential";
    case Source::appendix_formula: return "appendix-formula";
    case Source::asymptotic_l3: return "asymptotic-L3";
    case Source::asymptotic_general: return "asymptotic-general";
    case Source::classical_sandwich: return "classical-sandwich";
    }
    return "unknown";
}

const std::vector<KnownValue> &known_directed_values() {
    static const std::vector<KnownValue> values = {
        {2, 3, 4, "Erdos and Rado 1956"},
        {2, 4, 8, "Erdos and Moser 1964"},
        {2, 5, 14, "Reid and Parker 1970"},
        {2, 6, 28, "Reid and Parker 1970"},
        {3, 3, 9, "Bermond 1974"},
        {4, 3, 15, "W14 witness with m^2 - m + 3"},
        {5, 3, 23, "W22 witness with m^2 - m + 3"},
    };
    return values;
}

std::optional<std::uint64_t> known_directed_value(int m, int n) {
    for (const auto &k : known_directed_values())
        if (k.m == m && k.n == n)
            return k.value;
    return std::nullopt;
}

std::optional<std::uint64_t> classical_ramsey(int m, std::uint64_t n) {
    std::uint64_t a = static_cast<std::uint64_t>(std::max(m, 0)), b = n;
    if (a > b)
        std::swap(a, b);
    if (a == 0)
        return std::nullopt;
    if (a == 1)
        return 1;
    if (a == 2)
        return b;
    if (a == 3) {
        // r(3, k) for k = 3..9
        static constexpr std::array<std::uint64_t, 7> k3 = {6, 9, 14, 18, 23, 28, 36};
        if (b <= 9)
            return k3[b - 3];
        return std::nullopt;
    }
    if (a == 4 && b == 4)
        return 18;
    if (a == 4 && b == 5)
        return 25;
    return std::nullopt;
}

BigInt recurrence_upper(int m, int n, const std::function<BigInt(int, int)> &sub_upper) {
    if (m < 2 || n < 3)
        throw ArgumentError("recurrence needs m >= 2 and n >= 3 (n = 2 is the base r(I_m, L_2) = m)");
    return 2 * sub_upper(m, n - 1) + sub_upper(m - 1, n) - 1;
}

std::uint64_t quadratic_upper(int m) {
    if (m < 3)
        throw ArgumentError("quadratic bound needs m >= 3");
    auto mm = static_cast<std::uint64_t>(m);
    return mm * mm - mm + 3;
}

std::uint64_t exponential_upper(int n) {
    if (n < 1)
        throw ArgumentError("exponential bound needs n >= 1");
    if (n > 62)
        throw SizeError("2^(n-1) overflows for n > 62");
    return std::uint64_t{1} << (n - 1);
}

BigInt binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a)
        return 0;
    b = std::min(b, a - b);
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i)
        r = r * (a - b + i) / i;
    return r;
}

BigInt appendix_v(int m, int n) {
    if (m < 2 || n < 3)
        throw ArgumentError("appendix formula is defined for m >= 2, n >= 3");
    BigInt sum = 0;
    for (int i = 0; i <= n - 2; ++i)
        sum += binomial(i + m - 1, i + 1) * pow2(static_cast<unsigned>(i));
    return sum - binomial(m + n - 6, m - 4) * pow2(static_cast<unsigned>(n - 3)) + 1;
}

double alon_lower_independence(double v, double d, double r) {
    if (d < 1 || r < 1 || v < 1)
        throw ArgumentError("need v, d, r >= 1");
    return v * std::log2(d) / (160.0 * d * std::log2(r + 1));
}

double alon_average_lower_independence(double v, double d, double r) {
    if (d < 1 || r < 1 || v < 1)
        throw ArgumentError("need v, d, r >= 1");
    return v * std::log2(2 * d) / (640.0 * d * std::log2(r + 1));
}

double sparse_lower_independence(double v, double d, double eps) {
    if (d < 1 || v < 1 || eps <= 0)
        throw ArgumentError("need v, d >= 1 and eps > 0");
    return std::ldexp(eps, -16) * (v / d) * std::log2(d);
}

BigInt asymptotic_upper_l3(int m) {
    if (m < 2)
        throw ArgumentError("asymptotic L_3 bound needs m >= 2");
    BigInt num = BigInt{512} * m * m;
    if (auto k = exact_log2(m))
        return ceil_div(num, *k);
    return ceil_real(Real{num} / boost::multiprecision::log2(Real{m}));
}

BigInt asymptotic_upper_general(int m, int n) {
    if (m < 2 || n < 2)
        throw ArgumentError("asymptotic bound needs m, n >= 2");
    BigInt num = pow2(static_cast<unsigned>(19 * n)) * boost::multiprecision::pow(BigInt{m}, static_cast<unsigned>(n - 1));
    if (auto k = exact_log2(m))
        return ceil_div(num, boost::multiprecision::pow(BigInt{*k}, static_cast<unsigned>(n - 2)));
    Real ld = boost::multiprecision::log2(Real{m});
    return ceil_real(Real{num} / boost::multiprecision::pow(ld, n - 2));
}

Sandwich classical_sandwich(int m, int n) {
    Sandwich s;
    if (m < 1 || n < 1)
        return s;
    s.lower = classical_ramsey(m, static_cast<std::uint64_t>(n));
    if (n - 1 < 63)
        s.upper = classical_ramsey(m, std::uint64_t{1} << (n - 1));
    return s;
}

std::uint64_t edge_minimum(int m) {
    if (m < 3)
        throw ArgumentError("edge minimum needs m >= 3");
    auto mm = static_cast<std::uint64_t>(m);
    std::uint64_t numerator = (mm * mm - mm + 2) * (2 * mm - 3);
    if (numerator % 2 != 0)
        throw Error("edge minimum numerator is odd"); // m^2 - m + 2 is always even
    return numerator / 2;
}

std::string sources_text(const std::vector<Source> &sources) {
    std::string out;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        if (i)
            out += '+';
        out += to_string(sources[i]);
    }
    return out;
}

BoundsTable::BoundsTable(int max_m, int max_n) : max_m_{max_m}, max_n_{max_n} {
    if (max_m < 2 || max_n < 2 || max_m > bounds_grid_limit || max_n > bounds_grid_limit)
        throw ArgumentError("bounds grid must lie within 2.." + std::to_string(bounds_grid_limit));
    cells_.resize(static_cast<std::size_t>((max_m - 1) * (max_n - 1)));
    // every cell depends only on cells with smaller m or smaller n
    for (int m = 2; m <= max_m; ++m)
        for (int n = 2; n <= max_n; ++n)
            cells_[static_cast<std::size_t>((m - 2) * (max_n - 1) + (n - 2))] = compute(m, n);
}

const BoundEntry &BoundsTable::at(int m, int n) const {
    if (m < 2 || n < 2 || m > max_m_ || n > max_n_)
        throw ArgumentError("cell outside bounds table");
    return cells_[static_cast<std::size_t>((m - 2) * (max_n_ - 1) + (n - 2))];
}

std::vector<BoundEntry> BoundsTable::entries() const { return cells_; }

BigInt BoundsTable::upper_of(int m, int n) const {
    if (m == 1 || n == 1)
        return 1; // degenerate: a single vertex is both I_1 and L_1
    return BigInt{at(m, n).upper};
}

BoundEntry BoundsTable::compute(int m, int n) const {
    std::vector<std::pair<Source, BigInt>> lows, ups;

    if (n == 2) {
        lows.emplace_back(Source::known_value, m);
        ups.emplace_back(Source::known_value, m);
    }
    if (auto k = known_directed_value(m, n)) {
        lows.emplace_back(Source::known_value, *k);
        ups.emplace_back(Source::known_value, *k);
    }
    for (const auto &w : named_witnesses())
        if (w.m <= m && w.n <= n)
            lows.emplace_back(Source::witness, w.spec.modulus + 1);
    Sandwich sw = classical_sandwich(m, n);
    if (sw.lower)
        lows.emplace_back(Source::classical_sandwich, *sw.lower);
    if (sw.upper)
        ups.emplace_back(Source::classical_sandwich, *sw.upper);

    if (n >= 3) {
        ups.emplace_back(Source::recurrence,
                         recurrence_upper(m, n, [this](int a, int b) { return upper_of(a, b); }));
        ups.emplace_back(Source::appendix_formula, appendix_v(m, n));
    }
    if (n == 3 && m >= 3)
        ups.emplace_back(Source::quadratic, quadratic_upper(m));
    if (m == 2 && n <= 62)
        ups.emplace_back(Source::exponential, exponential_upper(n));
    if (n == 3)
        ups.emplace_back(Source::asymptotic_l3, asymptotic_upper_l3(m));
    ups.emplace_back(Source::asymptotic_general, asymptotic_upper_general(m, n));

    auto pick = [](std::vector<std::pair<Source, BigInt>> &cands, bool want_max) {
        BigInt best = cands.front().second;
        for (const auto &[s, v] : cands)
            if (want_max ? v > best : v < best)
                best = v;
        std::vector<Source> winners;
        for (const auto &[s, v] : cands)
            if (v == best && std::find(winners.begin(), winners.end(), s) == winners.end())
                winners.push_back(s);
        std::sort(winners.begin(), winners.end());
        return std::pair{best, winners};
    };

    BoundEntry e;
    e.m = m;
    e.n = n;
    if (lows.empty())
        lows.emplace_back(Source::classical_sandwich, 2); // unreachable for m, n >= 2
    auto [lo, lo_src] = pick(lows, true);
    auto [hi, hi_src] = pick(ups, false);
    e.lower = to_u64(lo);
    e.upper = to_u64(hi);
    e.lower_sources = std::move(lo_src);
    e.upper_sources = std::move(hi_src);
    e.exact = e.lower == e.upper;
    return e;
}

BoundEntry best_bounds(int m, int n) { return BoundsTable{m, n}.at(m, n); }

std::string bounds_csv(const std::vector<BoundEntry> &entries) {
    std::ostringstream out;
    out << "m,n,lower,upper,exact,lower_src,upper_src\n";
    for (const auto &e : entries)
        out << e.m << ',' << e.n << ',' << e.lower << ',' << e.upper << ','
            << (e.exact ? "true" : "false") << ',' << sources_text(e.lower_sources) << ','
            << sources_text(e.upper_sources) << '\n';
    return out.str();
}

std::string bounds_json(const std::vector<BoundEntry> &entries) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &e : entries) {
        nlohmann::ordered_json row;
        row["m"] = e.m;
        row["n"] = e.n;
        row["lower"] = e.lower;
        row["upper"] = e.upper;
        row["exact"] = e.exact;
        row["lower_src"] = sources_text(e.lower_sources);
        row["upper_src"] = sources_text(e.upper_sources);
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

std::string bounds_text(const std::vector<BoundEntry> &entries) {
    std::ostringstream out;
    out << std::left << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(20) << "lower"
        << std::setw(20) << "upper" << std::setw(7) << "exact"
        << "sources (lower / upper)\n";
    for (const auto &e : entries)
        out << std::left << std::setw(4) << e.m << std::setw(4) << e.n << std::setw(20) << e.lower
            << std::setw(20) << e.upper << std::setw(7) << (e.exact ? "yes" : "no")
            << sources_text(e.lower_sources) << " / " << sources_text(e.upper_sources) << '\n';
    return out.str();
}

} // namespace oramsey
