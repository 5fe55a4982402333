#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oramsey/digraph.hpp"

namespace oramsey {

/// Circulant rules on Z_k: x -> x + r for every x (global), only for even x,
/// or only for odd x. Residues are kept normalised to 1..k-1, sorted and
/// without repeats.
struct CirculantSpec {
    int modulus = 0;
    std::vector<int> global_residues;
    std::vector<int> even_residues;
    std::vector<int> odd_residues;

    /// Normalises signed residues; throws ArgumentError for k < 2 or a
    /// residue that is 0 mod k.
    static CirculantSpec make(int modulus, const std::vector<int> &global,
                              const std::vector<int> &even = {}, const std::vector<int> &odd = {});

    bool operator==(const CirculantSpec &) const = default;
};

/// Parses `k=<modulus>; all=<r1,r2,...>; even=<...>; odd=<...>`. The `all`,
/// `even` and `odd` fields are optional and may be empty; residues may carry
/// a sign. Throws ArgumentError on malformed text.
CirculantSpec parse_circulant_spec(std::string_view text);

/// Canonical text form with normalised residues, e.g.
/// `k=14; all=1,12; even=4; odd=8`.
std::string format_circulant_spec(const CirculantSpec &spec);

/// Throws ConstructionError naming (x, r) when a rule creates a 2-cycle.
OrientedGraph build_circulant(const CirculantSpec &spec);

enum class WitnessName { w8, w14, w22 };

struct NamedWitness {
    WitnessName name;
    std::string label; ///< "W8", "W14", "W22"
    CirculantSpec spec;
    int m; ///< claimed (I_m, L_n)-free
    int n;
};

const std::vector<NamedWitness> &named_witnesses();

/// Case-insensitive "w8" / "W14" / ...; nullopt for anything else.
std::optional<WitnessName> parse_witness_name(std::string_view text);

const NamedWitness &witness_info(WitnessName name);

OrientedGraph witness(WitnessName name);

enum class GroupKind { cyclic, dihedral };

std::optional<GroupKind> parse_group_kind(std::string_view text);
std::string to_string(GroupKind kind);

struct CayleyDigraph {
    /// 0 = neither, 1 = the smaller-indexed element g, 2 = its inverse,
    /// one entry per inverse pair.
    std::vector<int> choices;
    /// Element indices of the connection set.
    std::vector<int> connection_set;
    /// Human-readable connection set, e.g. "{+1,-2}" or "{r^1,r^5}".
    std::string description;
    OrientedGraph graph;
};

/// Streams every oriented Cayley digraph Cay(G, S) of a cyclic or dihedral
/// group G of order k <= 24, in lexicographic order of the choice vector.
///
/// Cyclic elements are residues 0..k-1. The dihedral group of order k = 2h
/// is <r, s | r^h = s^2 = 1, srs = r^-1>; index i < h is r^i and index
/// h + i is s r^i. Arcs go g -> g*s.
class CayleyEnumerator {
  public:
    /// Throws ArgumentError for unsupported group/order combinations.
    CayleyEnumerator(GroupKind group, int order);

    std::optional<CayleyDigraph> next();

    /// 3^(number of inverse pairs).
    long long total() const;

    const std::vector<std::pair<int, int>> &inverse_pairs() const { return pairs_; }

  private:
    int multiply(int a, int b) const;
    std::string element_name(int e) const;

    GroupKind group_;
    int order_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> choice_;
    bool done_ = false;
};

/// Collects the whole stream.
std::vector<CayleyDigraph> enumerate_cayley(GroupKind group, int order);

} // namespace oramsey
