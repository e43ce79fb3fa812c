#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace rind {

/// Set of vertex labels in 0..63, stored as a 64-bit mask. Graphs, faces and
/// facets throughout the library are sets of these small integer labels; the
/// cap is enforced at construction so everything downstream can assume it.
class VertexSet {
public:
    static constexpr int kCapacity = 64;

    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<int> labels) {
        for (int v : labels) insert(v);
    }

    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    /// {0, 1, ..., n-1}
    static VertexSet range(int n) {
        if (n < 0 || n > kCapacity)
            throw std::invalid_argument("VertexSet::range: need 0 <= n <= 64");
        if (n == 0) return {};
        return from_bits(~std::uint64_t{0} >> (kCapacity - n));
    }

    std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool contains(int v) const {
        return v >= 0 && v < kCapacity && ((bits_ >> v) & 1u);
    }

    void insert(int v) {
        check_label(v);
        bits_ |= std::uint64_t{1} << v;
    }

    void erase(int v) {
        check_label(v);
        bits_ &= ~(std::uint64_t{1} << v);
    }

    VertexSet with(int v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }

    VertexSet without(int v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    /// Smallest label; throws on the empty set.
    int min() const {
        if (empty()) throw std::logic_error("VertexSet::min on empty set");
        return std::countr_zero(bits_);
    }

    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }

    friend bool operator==(VertexSet a, VertexSet b) = default;

    /// Lexicographic order on the ascending label sequence, so {0,2} < {1}
    /// and {0} < {0,1}. This is the order facet lists are kept in.
    friend bool operator<(VertexSet a, VertexSet b) {
        if (a.bits_ == b.bits_) return false;
        std::uint64_t diff = a.bits_ ^ b.bits_;
        std::uint64_t low = diff & (~diff + 1);
        std::uint64_t above = ~((low << 1) - 1);  // labels past the first divergence
        if (a.bits_ & low) return (b.bits_ & above) != 0;
        return (a.bits_ & above) == 0;
    }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        iterator operator++(int) { iterator t = *this; ++*this; return t; }
        friend bool operator==(iterator a, iterator b) = default;

    private:
        std::uint64_t rest_ = 0;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    static void check_label(int v) {
        if (v < 0 || v >= kCapacity)
            throw std::invalid_argument("vertex label out of range 0..63: " + std::to_string(v));
    }

    std::uint64_t bits_ = 0;
};

}  // namespace rind

template <>
struct std::hash<rind::VertexSet> {
    std::size_t operator()(rind::VertexSet s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits());
    }
};
