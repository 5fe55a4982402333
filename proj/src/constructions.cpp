#include "oramsey/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "oramsey/errors.hpp"

namespace oramsey {

namespace {

constexpr int max_cayley_order = 24;

std::vector<int> normalise(int k, const std::vector<int> &residues) {
    std::vector<int> out;
    for (int r : residues) {
        int n = ((r % k) + k) % k;
        if (n == 0)
            throw ArgumentError("residue " + std::to_string(r) + " is 0 mod " + std::to_string(k));
        out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

int parse_signed(std::string_view s) {
    s = trim(s);
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ArgumentError("malformed residue '" + std::string(s) + "'");
    return negative ? -value : value;
}

std::vector<int> parse_list(std::string_view s) {
    std::vector<int> out;
    s = trim(s);
    if (s.empty())
        return out;
    for (;;) {
        auto comma = s.find(',');
        out.push_back(parse_signed(s.substr(0, comma)));
        if (comma == std::string_view::npos)
            break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::string join(const std::vector<int> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char &c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

CirculantSpec CirculantSpec::make(int modulus, const std::vector<int> &global,
                                  const std::vector<int> &even, const std::vector<int> &odd) {
    if (modulus < 2 || modulus > max_order)
        throw ArgumentError("modulus must be in 2..64, got " + std::to_string(modulus));
    CirculantSpec s;
    s.modulus = modulus;
    s.global_residues = normalise(modulus, global);
    s.even_residues = normalise(modulus, even);
    s.odd_residues = normalise(modulus, odd);
    return s;
}

CirculantSpec parse_circulant_spec(std::string_view text) {
    std::optional<int> k;
    std::optional<std::vector<int>> all, even, odd;
    std::string_view rest = text;
    while (!trim(rest).empty()) {
        auto semi = rest.find(';');
        std::string_view field = trim(rest.substr(0, semi));
        rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
        if (field.empty())
            continue;
        auto eq = field.find('=');
        if (eq == std::string_view::npos)
            throw ArgumentError("expected key=value in '" + std::string(field) + "'");
        std::string key = lower(trim(field.substr(0, eq)));
        std::string_view value = field.substr(eq + 1);
        auto set_once = [&](auto &slot, auto parsed) {
            if (slot)
                throw ArgumentError("field '" + key + "' given twice");
            slot = std::move(parsed);
        };
        if (key == "k")
            set_once(k, parse_signed(value));
        else if (key == "all")
            set_once(all, parse_list(value));
        else if (key == "even")
            set_once(even, parse_list(value));
        else if (key == "odd")
            set_once(odd, parse_list(value));
        else
            throw ArgumentError("unknown field '" + key + "'");
    }
    if (!k)
        throw ArgumentError("missing modulus field k=");
    return CirculantSpec::make(*k, all.value_or(std::vector<int>{}), even.value_or(std::vector<int>{}),
                               odd.value_or(std::vector<int>{}));
}

std::string format_circulant_spec(const CirculantSpec &spec) {
    std::ostringstream out;
    out << "k=" << spec.modulus << "; all=" << join(spec.global_residues)
        << "; even=" << join(spec.even_residues) << "; odd=" << join(spec.odd_residues);
    return out.str();
}

OrientedGraph build_circulant(const CirculantSpec &spec) {
    const int k = spec.modulus;
    if (k < 2 || k > max_order)
        throw ArgumentError("modulus must be in 2..64");
    OrientedGraph g{k};
    auto apply = [&](int x, int r) {
        if (r % k == 0)
            throw ArgumentError("residue " + std::to_string(r) + " is 0 mod " + std::to_string(k));
        int y = ((x + r) % k + k) % k;
        if (g.has_arc(y, x))
            throw ConstructionError("rule at x=" + std::to_string(x) + ", r=" + std::to_string(r) +
                                    " gives " + std::to_string(x) + "->" + std::to_string(y) +
                                    ", reversing an existing arc");
        g.add_arc(x, y);
    };
    for (int x = 0; x < k; ++x) {
        for (int r : spec.global_residues)
            apply(x, r);
        for (int r : (x % 2 == 0 ? spec.even_residues : spec.odd_residues))
            apply(x, r);
    }
    return g;
}

const std::vector<NamedWitness> &named_witnesses() {
    static const std::vector<NamedWitness> all = {
        {WitnessName::w8, "W8", CirculantSpec::make(8, {+1, -2}), 3, 3},
        {WitnessName::w14, "W14", CirculantSpec::make(14, {+1, -2}, {+4}, {-6}), 4, 3},
        {WitnessName::w22, "W22", CirculantSpec::make(22, {+1, +4, -5, +10}), 5, 3},
    };
    return all;
}

std::optional<WitnessName> parse_witness_name(std::string_view text) {
    std::string key = lower(text);
    for (const auto &w : named_witnesses())
        if (lower(w.label) == key)
            return w.name;
    return std::nullopt;
}

const NamedWitness &witness_info(WitnessName name) {
    for (const auto &w : named_witnesses())
        if (w.name == name)
            return w;
    throw ArgumentError("unknown witness");
}

OrientedGraph witness(WitnessName name) { return build_circulant(witness_info(name).spec); }

std::optional<GroupKind> parse_group_kind(std::string_view text) {
    std::string key = lower(text);
    if (key == "cyclic")
        return GroupKind::cyclic;
    if (key == "dihedral")
        return GroupKind::dihedral;
    return std::nullopt;
}

std::string to_string(GroupKind kind) { return kind == GroupKind::cyclic ? "cyclic" : "dihedral"; }

CayleyEnumerator::CayleyEnumerator(GroupKind group, int order) : group_{group}, order_{order} {
    if (order < 1 || order > max_cayley_order)
        throw ArgumentError("Cayley enumeration supports orders 1..24, got " + std::to_string(order));
    if (group == GroupKind::dihedral && (order % 2 != 0 || order < 2))
        throw ArgumentError("dihedral groups have even order");

    const int rotations = group == GroupKind::cyclic ? order : order / 2;
    // Only rotations can be non-involutions; reflections s r^i square to 1.
    for (int a = 1; a < rotations; ++a) {
        int inv = rotations - a;
        if (a < inv)
            pairs_.emplace_back(a, inv);
    }
    choice_.assign(pairs_.size(), 0);
}

long long CayleyEnumerator::total() const {
    long long t = 1;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        t *= 3;
    return t;
}

int CayleyEnumerator::multiply(int a, int b) const {
    if (group_ == GroupKind::cyclic)
        return (a + b) % order_;
    const int h = order_ / 2;
    const bool a_refl = a >= h, b_refl = b >= h;
    const int i = a % h, j = b % h;
    if (!a_refl && !b_refl)
        return (i + j) % h;               // r^i r^j
    if (!a_refl && b_refl)
        return h + ((j - i) % h + h) % h; // r^i s r^j = s r^(j-i)
    if (a_refl && !b_refl)
        return h + (i + j) % h;           // s r^i r^j
    return ((j - i) % h + h) % h;         // s r^i s r^j = r^(j-i)
}

std::string CayleyEnumerator::element_name(int e) const {
    if (group_ == GroupKind::cyclic)
        return 2 * e <= order_ ? "+" + std::to_string(e) : "-" + std::to_string(order_ - e);
    const int h = order_ / 2;
    return e < h ? "r^" + std::to_string(e) : "sr^" + std::to_string(e - h);
}

std::optional<CayleyDigraph> CayleyEnumerator::next() {
    if (done_)
        return std::nullopt;

    CayleyDigraph out{choice_, {}, {}, OrientedGraph{order_}};
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
        if (choice_[p] == 1)
            out.connection_set.push_back(pairs_[p].first);
        else if (choice_[p] == 2)
            out.connection_set.push_back(pairs_[p].second);
    }
    std::sort(out.connection_set.begin(), out.connection_set.end());
    out.description = "{";
    for (std::size_t i = 0; i < out.connection_set.size(); ++i) {
        if (i)
            out.description += ',';
        out.description += element_name(out.connection_set[i]);
    }
    out.description += '}';
    for (int g = 0; g < order_; ++g)
        for (int s : out.connection_set)
            out.graph.add_arc(g, multiply(g, s));

    // advance: last digit fastest
    std::size_t pos = choice_.size();
    while (pos > 0) {
        --pos;
        if (++choice_[pos] < 3)
            break;
        choice_[pos] = 0;
        if (pos == 0) {
            done_ = true;
            break;
        }
    }
    if (choice_.empty())
        done_ = true;
    return out;
}

std::vector<CayleyDigraph> enumerate_cayley(GroupKind group, int order) {
    CayleyEnumerator e{group, order};
    std::vector<CayleyDigraph> out;
    while (auto d = e.next())
        out.push_back(std::move(*d));
    return out;
}

} // namespace oramsey
