// oramsey: command-line front end for the oriented Ramsey toolkit.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "oramsey/arc_list.hpp"
#include "oramsey/bounds.hpp"
#include "oramsey/constructions.hpp"
#include "oramsey/detectors.hpp"
#include "oramsey/errors.hpp"
#include "oramsey/search.hpp"
#include "oramsey/structural.hpp"
#include "oramsey/verify.hpp"

using namespace oramsey;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, property_fails = 1, usage = 2, guard = 3 };

struct Common {
    std::string format = "text";
    std::string out;
    int threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
};

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "Write the report to this file instead of stdout");
    cmd->add_option("--threads", c.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void emit(const Common &c, const std::string &text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f{c.out};
    if (!f)
        throw ArgumentError("cannot open " + c.out + " for writing");
    f << text;
}

std::string csv_row(std::initializer_list<std::string> cells) {
    std::string row;
    for (const auto &cell : cells) {
        if (!row.empty())
            row += ',';
        if (cell.find_first_of(",\"\n") == std::string::npos) {
            row += cell;
            continue;
        }
        row += '"';
        for (char ch : cell)
            row += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        row += '"';
    }
    return row + '\n';
}

std::string degree_list(const OrientedGraph &g, bool out) {
    std::string s;
    for (Vertex v = 0; v < g.order(); ++v)
        s += (v ? " " : "") + std::to_string(out ? g.out_degree(v) : g.in_degree(v));
    return s;
}

// ---- verify ---------------------------------------------------------------

struct WitnessCheck {
    const NamedWitness *info = nullptr;
    OrientedGraph graph{1};
    FreenessVerdict verdict;
    int alpha = 0;
    LemmaReport lemma;
    DegreeReport degrees;
    std::optional<EightVertexReport> eight;

    bool passed() const {
        return verdict.free && lemma.passed() && degrees.passed() && (!eight || eight->passed());
    }
};

WitnessCheck check_witness(const NamedWitness &w) {
    WitnessCheck c;
    c.info = &w;
    c.graph = witness(w.name);
    c.verdict = is_free(c.graph, w.m, w.n);
    c.alpha = independence_number(c.graph);
    c.lemma = check_neighborhood_lemma(c.graph, w.m, w.n);
    c.degrees = check_l3_degree_bound(c.graph, w.m);
    if (c.graph.order() == 8)
        c.eight = check_eight_vertex_properties(c.graph);
    return c;
}

std::string lemma_status(const LemmaReport &r) {
    if (!r.applicable)
        return "not applicable (" + r.reason + ")";
    if (r.violations.empty())
        return "pass";
    std::string s = "FAIL";
    for (const auto &v : r.violations)
        s += "; " + v;
    return s;
}

std::string verify_text(const std::vector<WitnessCheck> &checks) {
    std::ostringstream out;
    for (const auto &c : checks) {
        const auto &w = *c.info;
        out << "== " << w.label << " (" << format_circulant_spec(w.spec) << ")\n";
        out << "  (I_" << w.m << ", L_" << w.n << ")-free: " << (c.verdict.free ? "yes" : "NO");
        if (c.verdict.certificate) {
            out << ", found";
            for (Vertex v : c.verdict.certificate->vertices)
                out << ' ' << v;
        }
        out << '\n';
        out << "  vertices: " << c.graph.order() << ", arcs: " << arc_count(c.graph) << '\n';
        out << "  out-degrees: " << degree_list(c.graph, true) << '\n';
        out << "  in-degrees:  " << degree_list(c.graph, false) << '\n';
        out << "  independence number: " << c.alpha << '\n';
        out << "  neighbourhood lemma: " << lemma_status(c.lemma) << '\n';
        out << "  degrees <= m-1 with independent neighbourhoods: " << lemma_status(c.degrees)
            << '\n';
        if (c.eight) {
            out << "  eight-vertex properties: " << lemma_status(*c.eight) << '\n';
            for (const auto &[name, holds] : c.eight->parts)
                out << "    " << (holds ? "ok   " : "FAIL ") << name << '\n';
        }
        out << "  result: " << (c.passed() ? "PASS" : "FAIL") << '\n';
    }
    return out.str();
}

json lemma_json(const LemmaReport &r) {
    return {{"applicable", r.applicable}, {"passed", r.passed()}, {"violations", r.violations}};
}

std::string verify_json(const std::vector<WitnessCheck> &checks) {
    json arr = json::array();
    for (const auto &c : checks) {
        std::vector<int> outs, ins;
        for (Vertex v = 0; v < c.graph.order(); ++v) {
            outs.push_back(c.graph.out_degree(v));
            ins.push_back(c.graph.in_degree(v));
        }
        json j;
        j["witness"] = c.info->label;
        j["spec"] = format_circulant_spec(c.info->spec);
        j["m"] = c.info->m;
        j["n"] = c.info->n;
        j["vertices"] = c.graph.order();
        j["arcs"] = arc_count(c.graph);
        j["free"] = c.verdict.free;
        j["out_degrees"] = outs;
        j["in_degrees"] = ins;
        j["independence_number"] = c.alpha;
        j["neighbourhood_lemma"] = lemma_json(c.lemma);
        j["degree_bound"] = lemma_json(c.degrees);
        if (c.eight) {
            json parts = json::array();
            for (const auto &[name, holds] : c.eight->parts)
                parts.push_back({{"property", name}, {"holds", holds}});
            j["eight_vertex_properties"] = parts;
        }
        j["passed"] = c.passed();
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string verify_csv(const std::vector<WitnessCheck> &checks) {
    std::string s = "witness,m,n,vertices,arcs,free,independence_number,neighbourhood_lemma,"
                    "degree_bound,passed\n";
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    for (const auto &c : checks)
        s += csv_row({c.info->label, std::to_string(c.info->m), std::to_string(c.info->n),
                      std::to_string(c.graph.order()), std::to_string(arc_count(c.graph)),
                      b(c.verdict.free), std::to_string(c.alpha), b(c.lemma.passed()),
                      b(c.degrees.passed()), b(c.passed())});
    return s;
}

int run_verify(const std::string &target, const Common &c) {
    std::vector<WitnessCheck> checks;
    if (target == "all") {
        for (const auto &w : named_witnesses())
            checks.push_back(check_witness(w));
    } else if (auto name = parse_witness_name(target)) {
        checks.push_back(check_witness(witness_info(*name)));
    } else {
        std::cerr << "unknown witness '" << target << "' (expected w8, w14, w22 or all)\n";
        return usage;
    }
    emit(c, c.format == "json"  ? verify_json(checks)
            : c.format == "csv" ? verify_csv(checks)
                                : verify_text(checks));
    bool all = std::all_of(checks.begin(), checks.end(), [](auto &x) { return x.passed(); });
    return all ? ok : property_fails;
}

// ---- check ----------------------------------------------------------------

int run_check(const std::string &file, int m, int n, const Common &c) {
    OrientedGraph g = read_arc_list_file(file);
    FreenessVerdict v = is_free(g, m, n);
    std::string kind;
    std::vector<Vertex> vertices;
    if (v.certificate) {
        kind = v.certificate->kind == Certificate::Kind::independent_set ? "independent-set"
                                                                           : "transitive-tournament";
        vertices = v.certificate->vertices;
    }
    std::string verts;
    for (Vertex x : vertices)
        verts += (verts.empty() ? "" : " ") + std::to_string(x);

    if (c.format == "json") {
        json j;
        j["file"] = file;
        j["m"] = m;
        j["n"] = n;
        j["order"] = g.order();
        j["arcs"] = arc_count(g);
        j["free"] = v.free;
        if (v.certificate)
            j["certificate"] = {{"kind", kind}, {"vertices", vertices}};
        else
            j["certificate"] = nullptr;
        emit(c, j.dump(2) + "\n");
    } else if (c.format == "csv") {
        emit(c, "file,m,n,order,arcs,free,certificate_kind,certificate_vertices\n" +
                    csv_row({file, std::to_string(m), std::to_string(n), std::to_string(g.order()),
                             std::to_string(arc_count(g)), v.free ? "true" : "false", kind,
                             verts}));
    } else if (v.free) {
        emit(c, "free\n");
    } else {
        emit(c, "not free: " + kind + " of size " + std::to_string(vertices.size()) + ": " +
                    verts + "\n");
    }
    return v.free ? ok : property_fails;
}

// ---- construct ------------------------------------------------------------

int run_construct(const std::string &target, const std::string &spec_text, const Common &c) {
    CirculantSpec spec;
    std::string label;
    if (!spec_text.empty()) {
        spec = parse_circulant_spec(spec_text);
        label = "circulant";
    } else if (auto name = parse_witness_name(target)) {
        spec = witness_info(*name).spec;
        label = witness_info(*name).label;
    } else {
        std::cerr << "construct needs a witness name (w8, w14, w22) or --spec\n";
        return usage;
    }
    OrientedGraph g = build_circulant(spec);
    if (c.format == "json") {
        json arcs = json::array();
        for (auto [u, v] : g.arcs())
            arcs.push_back({u, v});
        json j;
        j["name"] = label;
        j["spec"] = format_circulant_spec(spec);
        j["order"] = g.order();
        j["arcs"] = arcs;
        emit(c, j.dump(2) + "\n");
    } else if (c.format == "csv") {
        std::string s = "u,v\n";
        for (auto [u, v] : g.arcs())
            s += std::to_string(u) + "," + std::to_string(v) + "\n";
        emit(c, s);
    } else {
        emit(c, to_arc_list(g));
    }
    return ok;
}

// ---- bounds ---------------------------------------------------------------

int run_bounds(int m_max, int n_max, const Common &c) {
    BoundsTable table{m_max, n_max};
    auto entries = table.entries();
    emit(c, c.format == "json"  ? bounds_json(entries)
            : c.format == "csv" ? bounds_csv(entries)
                                : bounds_text(entries));
    return ok;
}

// ---- search / cayley ------------------------------------------------------

std::string search_csv(const SearchReport &r) {
    std::string s = "order,classes,exhaustive\n";
    for (const auto &level : r.per_order)
        s += std::to_string(level.order) + "," + std::to_string(level.classes) + "," +
             (level.exhaustive ? "true" : "false") + "\n";
    return s;
}

std::string render_search(const SearchReport &r, const Common &c) {
    return c.format == "json"  ? search_report_json(r)
           : c.format == "csv" ? search_csv(r)
                               : search_report_text(r);
}

int run_search(SearchConfig cfg, const Common &c) {
    cfg.worker_count = c.threads;
    cfg.on_level = [](const LevelProgress &p) {
        std::cerr << "order " << p.order << ": " << p.classes << " classes (" << p.seconds
                  << " s)\n";
    };
    SearchReport report;
    try {
        report = extremal_search(cfg);
    } catch (const SearchGuardError &e) {
        std::cerr << "search aborted: " << e.what() << '\n';
        emit(c, render_search(e.partial(), c));
        return guard;
    }
    emit(c, render_search(report, c));
    const bool found = report.extremal_order == cfg.max_order;
    switch (cfg.mode) {
    case SearchMode::find_any: return found ? ok : property_fails;
    case SearchMode::prove_empty: return found ? property_fails : ok;
    case SearchMode::count_classes: break;
    }
    return ok;
}

int run_cayley(GroupKind group, int order, int m, int n, const Common &c) {
    CayleyScanReport r = cayley_scan(group, order, m, n);
    if (c.format == "json") {
        emit(c, cayley_report_json(r));
    } else if (c.format == "csv") {
        emit(c, "group,order,m,n,scanned,free\n" +
                    csv_row({to_string(r.group), std::to_string(r.order), std::to_string(r.m),
                             std::to_string(r.n), std::to_string(r.scanned),
                             std::to_string(r.free_count)}));
    } else {
        emit(c, cayley_report_text(r));
    }
    return ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Oriented Ramsey numbers r(I_m, L_n): witnesses, bounds and exhaustive search"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "oramsey 1.0");

    Common common;

    std::string verify_target;
    auto *verify = app.add_subcommand("verify", "Check the named witnesses W8, W14, W22");
    verify->add_option("witness", verify_target, "w8, w14, w22 or all")->required();
    add_common(verify, common);

    std::string check_file;
    int check_m = 0, check_n = 0;
    auto *check = app.add_subcommand("check", "Test an arc-list file for (I_m, L_n)-freeness");
    check->add_option("file", check_file, "Arc-list file")->required();
    check->add_option("--m", check_m, "Independent set size")->required()->check(CLI::PositiveNumber);
    check->add_option("--n", check_n, "Transitive tournament size")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(check, common);

    std::string construct_target, construct_spec;
    auto *construct = app.add_subcommand("construct", "Print a witness or circulant as an arc list");
    construct->add_option("witness", construct_target, "w8, w14 or w22");
    construct->add_option("--spec", construct_spec,
                          "Circulant rules, e.g. \"k=14; all=+1,-2; even=+4; odd=-6\"");
    add_common(construct, common);

    int m_max = 5, n_max = 5;
    auto *bounds = app.add_subcommand("bounds", "Table of best known bounds with provenance");
    bounds->add_option("--m-max", m_max, "Largest m")
        ->check(CLI::Range(2, bounds_grid_limit))
        ->capture_default_str();
    bounds->add_option("--n-max", n_max, "Largest n")
        ->check(CLI::Range(2, bounds_grid_limit))
        ->capture_default_str();
    add_common(bounds, common);

    SearchConfig cfg;
    std::string mode_text = "count-classes";
    bool no_cap = false;
    auto *search = app.add_subcommand("search", "Exhaustive isomorph-free generation");
    search->add_option("--m", cfg.m, "Independent set size")->required()->check(CLI::PositiveNumber);
    search->add_option("--n", cfg.n, "Transitive tournament size")
        ->required()
        ->check(CLI::PositiveNumber);
    search->add_option("--max-order", cfg.max_order, "Largest order generated")
        ->check(CLI::Range(1, search_order_limit))
        ->capture_default_str();
    search->add_option("--mode", mode_text, "count-classes, find-any or prove-empty")
        ->check(CLI::IsMember({"count-classes", "find-any", "prove-empty"}))
        ->capture_default_str();
    search->add_flag("--no-degree-cap", no_cap, "Disable the degree cap for n = 3");
    search->add_option("--class-cap", cfg.class_cap, "Abort a level beyond this many classes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(search, common);

    std::string group_text = "cyclic";
    int cayley_order = 0, cayley_m = 0, cayley_n = 0;
    auto *cayley = app.add_subcommand("cayley", "Scan all oriented Cayley digraphs of a group");
    cayley->add_option("--group", group_text, "cyclic or dihedral")
        ->check(CLI::IsMember({"cyclic", "dihedral"}))
        ->capture_default_str();
    cayley->add_option("--order", cayley_order, "Group order")->required()->check(CLI::Range(1, 24));
    cayley->add_option("--m", cayley_m, "Independent set size")
        ->required()
        ->check(CLI::PositiveNumber);
    cayley->add_option("--n", cayley_n, "Transitive tournament size")
        ->required()
        ->check(CLI::PositiveNumber);
    add_common(cayley, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*verify)
            return run_verify(verify_target, common);
        if (*check)
            return run_check(check_file, check_m, check_n, common);
        if (*construct)
            return run_construct(construct_target, construct_spec, common);
        if (*bounds)
            return run_bounds(m_max, n_max, common);
        if (*search) {
            cfg.mode = *parse_search_mode(mode_text);
            cfg.degree_cap_enabled = !no_cap;
            return run_search(cfg, common);
        }
        if (*cayley)
            return run_cayley(*parse_group_kind(group_text), cayley_order, cayley_m, cayley_n,
                              common);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
