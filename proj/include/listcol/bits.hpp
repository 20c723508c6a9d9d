#ifndef LISTCOL_BITS_HPP
#define LISTCOL_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace listcol {

// Fixed 128-bit set. Used for vertex sets and compacted colour sets inside
// the solvers; instances with more than 128 vertices or distinct colours do
// not fit the exact solver and are rejected there.
struct Bits128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static constexpr int capacity = 128;

    constexpr bool test(int i) const {
        return i < 64 ? (lo >> i) & 1u : (hi >> (i - 64)) & 1u;
    }
    constexpr void set(int i) {
        if (i < 64) lo |= std::uint64_t(1) << i;
        else hi |= std::uint64_t(1) << (i - 64);
    }
    constexpr void reset(int i) {
        if (i < 64) lo &= ~(std::uint64_t(1) << i);
        else hi &= ~(std::uint64_t(1) << (i - 64));
    }
    constexpr bool empty() const { return lo == 0 && hi == 0; }
    constexpr int count() const { return std::popcount(lo) + std::popcount(hi); }

    constexpr bool intersects(Bits128 o) const {
        return (lo & o.lo) != 0 || (hi & o.hi) != 0;
    }
    constexpr bool is_subset_of(Bits128 o) const {
        return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
    }

    friend constexpr Bits128 operator&(Bits128 a, Bits128 b) {
        return {a.lo & b.lo, a.hi & b.hi};
    }
    friend constexpr Bits128 operator|(Bits128 a, Bits128 b) {
        return {a.lo | b.lo, a.hi | b.hi};
    }
    friend constexpr Bits128 operator-(Bits128 a, Bits128 b) {
        return {a.lo & ~b.lo, a.hi & ~b.hi};
    }
    friend constexpr bool operator==(Bits128 a, Bits128 b) {
        return a.lo == b.lo && a.hi == b.hi;
    }

    // Index of the lowest set bit, or -1 if empty.
    constexpr int first() const {
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return -1;
    }
    // Index of the lowest set bit strictly above i, or -1.
    constexpr int next(int i) const {
        ++i;
        if (i < 64) {
            std::uint64_t m = lo & ~((std::uint64_t(1) << i) - 1);
            if (m) return std::countr_zero(m);
            if (hi) return 64 + std::countr_zero(hi);
            return -1;
        }
        if (i >= 128) return -1;
        std::uint64_t m = hi;
        if (i > 64) m &= ~((std::uint64_t(1) << (i - 64)) - 1);
        if (m) return 64 + std::countr_zero(m);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }
};

} // namespace listcol

#endif
