#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dbldom {

inline constexpr int kMaxOrder = 62;

/// A set of vertex indices in [0, 62), stored as a single 64-bit word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static VertexSet from_vector(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Smallest member; undefined on the empty set.
    constexpr int front() const { return std::countr_zero(bits_); }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    /// "{0, 3, 5}"
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) s += ", ";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto old = *this; ++*this; return old; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Order on equal-size sets by their sorted member lists: the set owning the
/// smallest element of the symmetric difference comes first.
constexpr bool lex_less(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return (a.bits() & (diff & (~diff + 1))) != 0;
}

}  // namespace dbldom
