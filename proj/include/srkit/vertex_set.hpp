#ifndef SRKIT_VERTEX_SET_HPP
#define SRKIT_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace srkit {

/// Largest supported ambient vertex count (one bit per vertex).
inline constexpr int kMaxVertices = 64;

/**
 * A subset of [n] = {1, ..., n} stored as a 64-bit mask; vertex v occupies
 * bit v-1. Used for faces, restriction sets W and the ground set itself.
 *
 * Ordering is the canonical (cardinality, mask value) order used for
 * facet lists and face enumeration everywhere in the library.
 */
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet from_bits(std::uint64_t bits) { return VertexSet(bits); }

    /// Throws std::out_of_range for vertices outside 1..64.
    static VertexSet of(std::initializer_list<int> vertices);
    static VertexSet of(const std::vector<int>& vertices);

    /// The ground set [n].
    static constexpr VertexSet full(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << (v - 1)); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Largest vertex label present, 0 for the empty set.
    constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }
    /// Smallest vertex label present, 0 for the empty set.
    constexpr int min_vertex() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << (v - 1))); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1))); }
    constexpr VertexSet complement(int n) const { return VertexSet(full(n).bits_ & ~bits_); }

    std::vector<int> vertices() const;

    /// "[124]"-style for n < 10, otherwise "{1,2,14}".
    std::string to_string() const;

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }

    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        return a.bits_ <=> b.bits_;
    }

private:
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    std::uint64_t bits_ = 0;
};

/// Calls fn(sub) for every subset of `set` (including empty and `set`).
template <typename Fn>
void for_each_subset(VertexSet set, Fn&& fn)
{
    const std::uint64_t mask = set.bits();
    std::uint64_t sub = 0;
    while (true) {
        fn(VertexSet::from_bits(sub));
        if (sub == mask)
            break;
        sub = (sub - mask) & mask;
    }
}

/// Calls fn(sub) for every subset of `set` with exactly k elements.
template <typename Fn>
void for_each_subset_of_size(VertexSet set, int k, Fn&& fn)
{
    if (k < 0 || k > set.size())
        return;
    const std::vector<int> verts = set.vertices();
    const int m = static_cast<int>(verts.size());
    if (k == 0) {
        fn(VertexSet{});
        return;
    }
    // Gosper's hack over positions, then map positions to vertices.
    std::uint64_t pos = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = m >= 64 ? 0 : (std::uint64_t{1} << m);
    while (true) {
        std::uint64_t bits = 0;
        for (std::uint64_t p = pos; p != 0; p &= p - 1)
            bits |= std::uint64_t{1} << (verts[std::countr_zero(p)] - 1);
        fn(VertexSet::from_bits(bits));
        const std::uint64_t c = pos & (~pos + 1);
        const std::uint64_t r = pos + c;
        if (r == 0 || (limit != 0 && r >= limit))
            break;
        pos = (((r ^ pos) >> 2) / c) | r;
        if (limit != 0 && pos >= limit)
            break;
    }
}

/// All k-subsets of [n] in canonical order.
std::vector<VertexSet> subsets_of_size(int n, int k);

/// Binomial coefficient; saturates at UINT64_MAX.
std::uint64_t binomial(int n, int k);

} // namespace srkit

template <>
struct std::hash<srkit::VertexSet> {
    std::size_t operator()(srkit::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

#endif
