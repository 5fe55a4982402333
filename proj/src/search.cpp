#include "oramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "oramsey/arc_list.hpp"
#include "oramsey/detectors.hpp"
#include "oramsey/errors.hpp"

namespace oramsey {

namespace {

enum class Choice { none, forward, backward };

/// Extends parents by one vertex. One instance per worker; nothing shared
/// except the stop flag.
class Extender {
  public:
    Extender(const SearchConfig &cfg, bool stop_on_first, std::atomic<bool> &stop)
        : cfg_{cfg}, cap_{cfg.degree_cap_enabled && cfg.n == 3}, stop_on_first_{stop_on_first},
          stop_{stop} {}

    void extend(const OrientedGraph &parent) {
        const int k = parent.order();
        OrientedGraph g{k + 1};
        for (auto [u, v] : parent.arcs())
            g.add_arc(u, v);
        descend(g, k, 0);
    }

    std::set<CanonicalCode> found;
    SearchStats stats;
    std::uint64_t free_children = 0;
    bool over_cap = false;

  private:
    void descend(OrientedGraph &g, int k, int j) {
        if (stop_.load(std::memory_order_relaxed))
            return;
        if (j == k) {
            ++free_children;
            found.insert(canonical_code(g));
            if (found.size() > cfg_.class_cap) {
                over_cap = true;
                stop_.store(true);
            }
            if (stop_on_first_)
                stop_.store(true);
            return;
        }
        for (Choice c : {Choice::none, Choice::forward, Choice::backward}) {
            ++stats.nodes;
            if (c == Choice::forward)
                g.add_arc(k, j);
            else if (c == Choice::backward)
                g.add_arc(j, k);

            if (admissible(g, k, j, c))
                descend(g, k, j + 1);

            if (c == Choice::forward)
                g.remove_arc(k, j);
            else if (c == Choice::backward)
                g.remove_arc(j, k);
        }
    }

    // Only structures through the new vertex k can be new; unassigned old
    // vertices (index > j) are not yet joined to k and are excluded.
    bool admissible(const OrientedGraph &g, int k, int j, Choice c) {
        if (c == Choice::none) {
            VertexSet pool = VertexSet::first_n(j) & g.non_adjacent(k) & g.non_adjacent(j);
            if (independent_set_within(g, pool, cfg_.m - 2)) {
                ++stats.prunes_independence;
                return false;
            }
            return true;
        }
        if (cap_) {
            const int limit = cfg_.m - 1;
            if (g.out_degree(k) > limit || g.in_degree(k) > limit || g.out_degree(j) > limit ||
                g.in_degree(j) > limit) {
                ++stats.prunes_degree_cap;
                return false;
            }
        }
        if (transitive_tournament_through(g, k, cfg_.n)) {
            ++stats.prunes_tournament;
            return false;
        }
        return true;
    }

    const SearchConfig &cfg_;
    bool cap_;
    bool stop_on_first_;
    std::atomic<bool> &stop_;
};

void add_stats(SearchStats &into, const SearchStats &s) {
    into.nodes += s.nodes;
    into.prunes_independence += s.prunes_independence;
    into.prunes_tournament += s.prunes_tournament;
    into.prunes_degree_cap += s.prunes_degree_cap;
    into.prunes_canonical += s.prunes_canonical;
}

void validate(const SearchConfig &cfg) {
    if (cfg.m < 1 || cfg.n < 1)
        throw ArgumentError("m and n must be at least 1");
    if (cfg.max_order < 1 || cfg.max_order > search_order_limit)
        throw ArgumentError("max order must be in 1.." + std::to_string(search_order_limit));
    if (cfg.worker_count < 1)
        throw ArgumentError("worker count must be at least 1");
}

} // namespace

std::optional<SearchMode> parse_search_mode(std::string_view text) {
    if (text == "count-classes")
        return SearchMode::count_classes;
    if (text == "find-any")
        return SearchMode::find_any;
    if (text == "prove-empty")
        return SearchMode::prove_empty;
    return std::nullopt;
}

std::string to_string(SearchMode mode) {
    switch (mode) {
    case SearchMode::count_classes: return "count-classes";
    case SearchMode::find_any: return "find-any";
    case SearchMode::prove_empty: return "prove-empty";
    }
    return "unknown";
}

SearchReport extremal_search(const SearchConfig &cfg) {
    validate(cfg);
    using clock = std::chrono::steady_clock;

    SearchReport report;
    report.m = cfg.m;
    report.n = cfg.n;
    report.max_order = cfg.max_order;
    report.mode = cfg.mode;

    auto finish_level = [&](int order, std::vector<CanonicalCode> codes, bool exhaustive,
                            clock::time_point started) {
        report.per_order.push_back({order, codes.size(), exhaustive});
        if (!codes.empty()) {
            report.extremal_order = order;
            report.representatives = codes;
        } else if (exhaustive) {
            report.complete = true;
        }
        if (cfg.on_level)
            cfg.on_level({order, codes.size(),
                          std::chrono::duration<double>(clock::now() - started).count()});
        report.levels.push_back(std::move(codes));
    };

    {
        auto started = clock::now();
        std::vector<CanonicalCode> first;
        if (cfg.m >= 2 && cfg.n >= 2)
            first.push_back(canonical_code(OrientedGraph{1}));
        finish_level(1, std::move(first), true, started);
    }

    for (int order = 2; order <= cfg.max_order && !report.levels.back().empty(); ++order) {
        auto started = clock::now();
        const bool last = order == cfg.max_order;
        const bool stop_on_first = last && cfg.mode != SearchMode::count_classes;

        std::vector<OrientedGraph> parents;
        parents.reserve(report.levels.back().size());
        for (const auto &code : report.levels.back())
            parents.push_back(decode(code));

        std::atomic<bool> stop{false};
        std::atomic<std::size_t> next{0};
        const int workers =
            std::max(1, std::min(cfg.worker_count, static_cast<int>(parents.size())));
        std::vector<Extender> extenders;
        extenders.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            extenders.emplace_back(cfg, stop_on_first, stop);

        auto work = [&](Extender &ex) {
            for (std::size_t i; (i = next.fetch_add(1)) < parents.size() && !stop.load();)
                ex.extend(parents[i]);
        };
        if (workers == 1) {
            work(extenders.front());
        } else {
            std::vector<std::thread> threads;
            for (auto &ex : extenders)
                threads.emplace_back(work, std::ref(ex));
            for (auto &t : threads)
                t.join();
        }

        // sorted union of the worker-local sets
        std::set<CanonicalCode> merged;
        std::uint64_t free_children = 0;
        bool over_cap = false;
        for (auto &ex : extenders) {
            merged.merge(ex.found);
            free_children += ex.free_children;
            add_stats(report.stats, ex.stats);
            over_cap = over_cap || ex.over_cap;
        }
        over_cap = over_cap || merged.size() > cfg.class_cap;
        if (over_cap) {
            report.per_order.push_back({order, merged.size(), false});
            throw SearchGuardError("level " + std::to_string(order) + " exceeded the class cap of " +
                                       std::to_string(cfg.class_cap),
                                   std::move(report));
        }
        report.stats.prunes_canonical += free_children - merged.size();
        const bool exhaustive = !stop.load();
        finish_level(order, std::vector<CanonicalCode>(merged.begin(), merged.end()), exhaustive,
                     started);
    }
    return report;
}

bool satisfies_equality_condition(const OrientedGraph &g, int r_m_nminus1, int r_mminus1_n) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.out_degree(v) != r_m_nminus1 - 1 || g.in_degree(v) != r_m_nminus1 - 1)
            return false;
        if (g.non_adjacent(v).size() != r_mminus1_n - 1)
            return false;
    }
    return true;
}

CayleyScanReport cayley_scan(GroupKind group, int order, int m, int n) {
    CayleyEnumerator stream{group, order};
    CayleyScanReport report;
    report.group = group;
    report.order = order;
    report.m = m;
    report.n = n;
    while (auto d = stream.next()) {
        ++report.scanned;
        if (is_free(d->graph, m, n).free) {
            ++report.free_count;
            report.free_connection_sets.push_back(d->description);
        }
    }
    return report;
}

std::string search_report_json(const SearchReport &r) {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["max_order"] = r.max_order;
    j["mode"] = to_string(r.mode);
    j["per_order"] = nlohmann::ordered_json::array();
    for (const auto &level : r.per_order)
        j["per_order"].push_back(
            {{"order", level.order}, {"classes", level.classes}, {"exhaustive", level.exhaustive}});
    j["extremal_order"] = r.extremal_order;
    j["complete"] = r.complete;
    if (auto rn = r.ramsey_number())
        j["ramsey_number"] = *rn;
    else
        j["ramsey_number"] = nullptr;
    j["representatives"] = nlohmann::ordered_json::array();
    for (const auto &code : r.representatives)
        j["representatives"].push_back(to_arc_list(decode(code)));
    j["stats"] = {{"nodes", r.stats.nodes},
                  {"prunes",
                   {{"independence", r.stats.prunes_independence},
                    {"tournament", r.stats.prunes_tournament},
                    {"degree_cap", r.stats.prunes_degree_cap},
                    {"canonical", r.stats.prunes_canonical}}}};
    return j.dump(2) + "\n";
}

std::string search_report_text(const SearchReport &r) {
    std::ostringstream out;
    out << "search (I_" << r.m << ", L_" << r.n << ")-free up to order " << r.max_order << " ["
        << to_string(r.mode) << "]\n";
    for (const auto &level : r.per_order)
        out << "  order " << level.order << ": " << level.classes << " classes"
            << (level.exhaustive ? "" : " (not exhaustive)") << '\n';
    out << "extremal order: " << r.extremal_order << '\n';
    if (auto rn = r.ramsey_number())
        out << "r(I_" << r.m << ", L_" << r.n << ") = " << *rn << '\n';
    else
        out << "search did not reach an empty level\n";
    out << "nodes " << r.stats.nodes << ", prunes: independence " << r.stats.prunes_independence
        << ", tournament " << r.stats.prunes_tournament << ", degree cap "
        << r.stats.prunes_degree_cap << ", canonical " << r.stats.prunes_canonical << '\n';
    if (r.representatives.size() <= 8)
        for (std::size_t i = 0; i < r.representatives.size(); ++i)
            out << "representative " << i + 1 << ":\n" << to_arc_list(decode(r.representatives[i]));
    else
        out << r.representatives.size() << " representatives (use --format json to list them)\n";
    return out.str();
}

std::string cayley_report_json(const CayleyScanReport &r) {
    nlohmann::ordered_json j;
    j["group"] = to_string(r.group);
    j["order"] = r.order;
    j["m"] = r.m;
    j["n"] = r.n;
    j["scanned"] = r.scanned;
    j["free"] = r.free_count;
    j["free_connection_sets"] = r.free_connection_sets;
    return j.dump(2) + "\n";
}

std::string cayley_report_text(const CayleyScanReport &r) {
    std::ostringstream out;
    out << to_string(r.group) << " group of order " << r.order << ": " << r.scanned
        << " oriented Cayley digraphs scanned, " << r.free_count << " (I_" << r.m << ", L_" << r.n
        << ")-free\n";
    for (const auto &s : r.free_connection_sets)
        out << "  free: S = " << s << '\n';
    return out.str();
}

} // namespace oramsey
