#include "oramsey/verify.hpp"

#include <algorithm>
#include <sstream>

#include "oramsey/bounds.hpp"
#include "oramsey/constructions.hpp"
#include "oramsey/detectors.hpp"
#include "oramsey/errors.hpp"

namespace oramsey {

namespace {

std::string pair_text(int m, int n) {
    return "(I_" + std::to_string(m) + ", L_" + std::to_string(n) + ")";
}

} // namespace

std::string to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::exact: return "exact";
    case VerdictStatus::lower_side_unknown: return "lower-side-unknown";
    case VerdictStatus::witness_not_free: return "witness-not-free";
    case VerdictStatus::upper_mismatch: return "upper-mismatch";
    }
    return "unknown";
}

RamseyVerdict verify_ramsey_value(int m, int n, std::uint64_t claimed,
                                  const std::optional<SearchReport> &search) {
    if (m < 1 || n < 1 || claimed < 1)
        throw ArgumentError("m, n and the claimed value must be at least 1");
    RamseyVerdict v;
    v.m = m;
    v.n = n;
    v.claimed = claimed;
    const std::uint64_t order = claimed - 1;
    const bool search_matches = search && search->m == m && search->n == n;

    bool lower_found = false;
    bool lower_ok = false;
    for (const auto &w : named_witnesses()) {
        if (static_cast<std::uint64_t>(w.spec.modulus) != order)
            continue;
        lower_found = true;
        if (is_free(witness(w.name), m, n).free) {
            lower_ok = true;
            v.lower_evidence = w.label + " is " + pair_text(m, n) + "-free on " +
                               std::to_string(order) + " vertices";
            break;
        }
        v.lower_evidence = w.label + " is not " + pair_text(m, n) + "-free";
    }
    if (!lower_ok && search_matches && static_cast<std::uint64_t>(search->extremal_order) == order &&
        !search->representatives.empty()) {
        lower_found = true;
        if (is_free(decode(search->representatives.front()), m, n).free) {
            lower_ok = true;
            v.lower_evidence = "search representative is " + pair_text(m, n) + "-free on " +
                               std::to_string(order) + " vertices";
        }
    }
    if (order == 0) {
        lower_found = lower_ok = true;
        v.lower_evidence = "trivial";
    }

    bool upper_ok = false;
    if (search_matches && search->complete) {
        v.upper = static_cast<std::uint64_t>(*search->ramsey_number());
        v.upper_evidence = "complete search: no " + pair_text(m, n) + "-free graph on " +
                           std::to_string(*v.upper) + " vertices";
        upper_ok = *v.upper == claimed;
    }
    if (!upper_ok && m >= 2 && n >= 2 && m <= bounds_grid_limit && n <= bounds_grid_limit) {
        BoundEntry b = best_bounds(m, n);
        v.upper = b.upper;
        std::vector<Source> derived;
        std::copy_if(b.upper_sources.begin(), b.upper_sources.end(), std::back_inserter(derived),
                     [](Source s) { return s != Source::known_value; });
        if (b.upper == claimed && !derived.empty()) {
            upper_ok = true;
            v.upper_evidence = sources_text(derived) + ": r <= " + std::to_string(b.upper);
        } else if (v.upper_evidence.empty()) {
            v.upper_evidence = "best upper bound " + std::to_string(b.upper) + " from " +
                               sources_text(b.upper_sources);
        }
    }

    if (!lower_found)
        v.status = VerdictStatus::lower_side_unknown;
    else if (!lower_ok)
        v.status = VerdictStatus::witness_not_free;
    else if (!upper_ok)
        v.status = VerdictStatus::upper_mismatch;
    else
        v.status = VerdictStatus::exact;
    return v;
}

std::string verdict_text(const RamseyVerdict &v) {
    std::ostringstream out;
    out << "r" << pair_text(v.m, v.n) << " = " << v.claimed << ": " << to_string(v.status) << '\n';
    out << "  lower (computed): " << (v.lower_evidence.empty() ? "none" : v.lower_evidence)
        << '\n';
    out << "  upper: " << (v.upper_evidence.empty() ? "none" : v.upper_evidence) << '\n';
    return out.str();
}

} // namespace oramsey
