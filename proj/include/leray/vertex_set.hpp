#ifndef LERAY_VERTEX_SET_HPP
#define LERAY_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "leray/errors.hpp"

namespace leray {

// A set of vertex indices in [0, 64), packed into one machine word.
// Set algebra is word-parallel; iteration walks set bits in ascending order.
class VertexSet {
public:
    static constexpr int kMaxVertices = 64;

    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s = s.with(v);
        return s;
    }

    // {0, 1, ..., n-1}
    static VertexSet full(int n) {
        if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range [0, 64]");
        return from_bits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    bool contains(int v) const { return v >= 0 && v < kMaxVertices && (bits_ >> v) & 1; }

    VertexSet with(int v) const {
        check_index(v);
        return from_bits(bits_ | (std::uint64_t{1} << v));
    }

    VertexSet without(int v) const {
        check_index(v);
        return from_bits(bits_ & ~(std::uint64_t{1} << v));
    }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    std::uint64_t bits() const { return bits_; }

    // Smallest member; precondition: non-empty.
    int lowest() const { return std::countr_zero(bits_); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return from_bits(a.bits_ ^ b.bits_); }
    // set difference
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }

    bool operator==(const VertexSet&) const = default;

    class iterator {
    public:
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    static void check_index(int v) {
        if (v < 0 || v >= kMaxVertices) throw InputError("vertex index out of range [0, 64)");
    }

    std::uint64_t bits_ = 0;
};

// Canonical order used everywhere sets are listed: by cardinality, then by
// numeric value of the bit pattern.
inline bool canonical_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
}

}  // namespace leray

#endif
