#include "oramsey/arc_list.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "oramsey/errors.hpp"

namespace oramsey {

namespace {

std::optional<int> parse_decimal(std::string_view s) {
    if (s.empty() || s.size() > 9)
        return std::nullopt;
    if (s.size() > 1 && s.front() == '0')
        return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return value;
}

/// Splits "a b" on exactly one space.
std::optional<std::pair<std::string_view, std::string_view>> split_pair(std::string_view line) {
    auto sp = line.find(' ');
    if (sp == std::string_view::npos || line.find(' ', sp + 1) != std::string_view::npos)
        return std::nullopt;
    return std::pair{line.substr(0, sp), line.substr(sp + 1)};
}

} // namespace

std::string to_arc_list(const OrientedGraph &g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.arcs())
        out << u << ' ' << v << '\n';
    return out.str();
}

OrientedGraph parse_arc_list(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos < text.size();) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (lines.empty())
        throw ParseError(1, "empty input, expected 'n <order>'");

    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].find('\r') != std::string_view::npos)
            throw ParseError(static_cast<int>(i + 1), "carriage return; lines must end in LF only");

    auto header = split_pair(lines[0]);
    if (!header || header->first != "n")
        throw ParseError(1, "expected header 'n <order>'");
    auto order = parse_decimal(header->second);
    if (!order || *order < 1 || *order > max_order)
        throw ParseError(1, "order must be a decimal in 1..64");

    OrientedGraph g{*order};
    std::optional<Arc> previous;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i + 1);
        auto fields = split_pair(lines[i]);
        if (!fields)
            throw ParseError(line_no, "expected '<u> <v>'");
        auto u = parse_decimal(fields->first);
        auto v = parse_decimal(fields->second);
        if (!u || !v)
            throw ParseError(line_no, "vertices must be plain decimals");
        if (*u >= *order || *v >= *order)
            throw ParseError(line_no, "vertex out of range for order " + std::to_string(*order));
        if (*u == *v)
            throw ParseError(line_no, "loop at vertex " + std::to_string(*u));
        Arc arc{*u, *v};
        if (previous && arc <= *previous)
            throw ParseError(line_no, previous && arc == *previous
                                          ? "duplicate arc"
                                          : "arc lines must be sorted ascending by (u, v)");
        if (g.has_arc(*v, *u))
            throw ParseError(line_no, "arc " + std::to_string(*u) + " " + std::to_string(*v) +
                                          " reverses an earlier arc (2-cycle)");
        g.add_arc(*u, *v);
        previous = arc;
    }
    return g;
}

OrientedGraph read_arc_list_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_arc_list(buf.str());
}

void write_arc_list_file(const std::filesystem::path &path, const OrientedGraph &g) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    out << to_arc_list(g);
}

} // namespace oramsey
