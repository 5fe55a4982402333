#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace oramsey {

using Vertex = int;

inline constexpr int max_order = 64;

/// Fixed-width set of vertex indices backed by one 64-bit word.
///
/// The universe is implied by the graph that owns the set; callers are
/// responsible for never inserting indices at or above that graph's order.
class VertexSet {
  public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_{bits} {}
    constexpr VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs)
            insert(v);
    }

    /// {0, ..., order-1}
    static constexpr VertexSet first_n(int order) {
        return VertexSet(order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1);
    }

    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    /// Lowest member; undefined on an empty set.
    constexpr Vertex front() const { return std::countr_zero(bits_); }

    constexpr Vertex pop_front() {
        Vertex v = front();
        bits_ &= bits_ - 1;
        return v;
    }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet &operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet &operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet &operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet &) const = default;

    /// Members in ascending order.
    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (VertexSet s = *this; !s.empty();)
            out.push_back(s.pop_front());
        return out;
    }

    static VertexSet from_range(const std::vector<Vertex> &vs) {
        VertexSet s;
        for (Vertex v : vs)
            s.insert(v);
        return s;
    }

    class iterator {
      public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_{rest} {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator &operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator &) const = default;

      private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }

  private:
    std::uint64_t bits_ = 0;
};

} // namespace oramsey
