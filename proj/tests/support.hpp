#ifndef SRKIT_TESTS_SUPPORT_HPP
#define SRKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "srkit/complex.hpp"
#include "srkit/enumeration.hpp"
#include "srkit/io.hpp"

namespace srkit::testing {

inline SimplicialComplex facets_of(int n, std::initializer_list<std::initializer_list<int>> facets)
{
    std::vector<VertexSet> sets;
    for (auto f : facets)
        sets.push_back(VertexSet::of(f));
    return SimplicialComplex::from_facets(n, sets);
}

inline SimplicialComplex four_cycle()
{
    return facets_of(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

/// Every subset of [n], ascending by bit pattern.
inline std::vector<VertexSet> power_set(int n)
{
    std::vector<VertexSet> out;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
        out.push_back(VertexSet::from_bits(b));
    return out;
}

inline bool brute_contains(const SimplicialComplex& c, VertexSet s)
{
    return std::any_of(c.facets().begin(), c.facets().end(), [&](VertexSet f) { return s.is_subset_of(f); });
}

inline std::vector<VertexSet> brute_faces(const SimplicialComplex& c)
{
    std::vector<VertexSet> out;
    for (VertexSet s : power_set(c.vertex_count()))
        if (brute_contains(c, s))
            out.push_back(s);
    return out;
}

inline std::vector<VertexSet> brute_minimal_nonfaces(const SimplicialComplex& c)
{
    std::vector<VertexSet> out;
    for (VertexSet s : power_set(c.vertex_count())) {
        if (brute_contains(c, s))
            continue;
        bool minimal = true;
        for (int v : s.vertices())
            minimal = minimal && brute_contains(c, s.without(v));
        if (minimal)
            out.push_back(s);
    }
    return out;
}

template <typename T>
std::vector<T> sorted(std::vector<T> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

inline std::vector<SimplicialComplex> random_complexes(std::size_t count, int n_min, int n_max, std::uint64_t seed,
                                                       bool vertex_full = false)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(n_min, n_max);
    std::vector<SimplicialComplex> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_complex(pick_n(rng), rng, vertex_full));
    return out;
}

/// A uniformly random relabeling of [n]: labels[v-1] is the new label of v.
inline std::vector<int> random_labels(int n, std::mt19937_64& rng)
{
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    return labels;
}

/// Dense Gaussian elimination; p = 0 means exact rationals.
inline std::size_t dense_rank(std::vector<std::vector<long long>> rows, unsigned p)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    if (p == 0) {
        std::vector<std::vector<mpq_class>> m;
        for (const auto& r : rows) {
            auto& row = m.emplace_back();
            for (long long v : r)
                row.emplace_back(static_cast<long>(v));
        }
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
            std::size_t pivot = rank;
            while (pivot < m.size() && m[pivot][c] == 0)
                ++pivot;
            if (pivot == m.size())
                continue;
            std::swap(m[pivot], m[rank]);
            for (std::size_t r = 0; r < m.size(); ++r) {
                if (r == rank || m[r][c] == 0)
                    continue;
                const mpq_class factor = m[r][c] / m[rank][c];
                for (std::size_t k = c; k < cols; ++k)
                    m[r][k] -= factor * m[rank][k];
            }
            ++rank;
        }
        return rank;
    }
    const auto mod = [p](long long v) { return static_cast<long long>(((v % p) + p) % p); };
    for (auto& r : rows)
        for (auto& v : r)
            v = mod(v);
    const auto inverse = [&](long long a) {
        long long result = 1;
        long long base = a;
        for (unsigned e = p - 2; e > 0; e >>= 1) {
            if (e & 1U)
                result = result * base % p;
            base = base * base % p;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        const long long inv = inverse(rows[rank][c]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            const long long factor = rows[r][c] * inv % p;
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] = mod(rows[r][k] - factor * rows[rank][k]);
        }
        ++rank;
    }
    return rank;
}

/// h̃_i for i = -1..n-1 from brute-force faces and dense boundary ranks.
inline std::vector<std::uint64_t> dense_reduced_homology(const SimplicialComplex& c, unsigned p)
{
    const int n = c.vertex_count();
    std::vector<std::vector<VertexSet>> by_size(n + 2);
    for (VertexSet s : brute_faces(c))
        by_size[s.size()].push_back(s);
    // rank of ∂_q : C_{q} (faces of size q) -> C_{q-1}
    std::vector<std::size_t> ranks(n + 2, 0);
    for (int q = 1; q <= n; ++q) {
        if (by_size[q].empty() || by_size[q - 1].empty())
            continue;
        std::vector<std::vector<long long>> m(by_size[q].size(), std::vector<long long>(by_size[q - 1].size(), 0));
        for (std::size_t r = 0; r < by_size[q].size(); ++r) {
            const std::vector<int> vs = by_size[q][r].vertices();
            for (std::size_t k = 0; k < vs.size(); ++k) {
                const VertexSet face = by_size[q][r].without(vs[k]);
                const auto it = std::find(by_size[q - 1].begin(), by_size[q - 1].end(), face);
                m[r][static_cast<std::size_t>(it - by_size[q - 1].begin())] = k % 2 == 0 ? 1 : -1;
            }
        }
        ranks[q] = dense_rank(m, p);
    }
    std::vector<std::uint64_t> out;
    for (int q = 0; q <= n; ++q) {
        const std::size_t next = q + 1 <= n ? ranks[q + 1] : 0;
        out.push_back(by_size[q].size() - ranks[q] - next);
    }
    while (out.size() > 1 && out.back() == 0)
        out.pop_back();
    return out;
}

inline bool dense_all_zero_below(const std::vector<std::uint64_t>& h, std::size_t top)
{
    for (std::size_t i = 0; i < h.size() && i < top; ++i)
        if (h[i] != 0)
            return false;
    return true;
}

/// Reisner's criterion by brute force: every link acyclic below its top.
inline bool dense_cohen_macaulay(const SimplicialComplex& c, unsigned p)
{
    for (VertexSet g : brute_faces(c)) {
        const SimplicialComplex lk = link(c, g);
        const std::vector<std::uint64_t> h = dense_reduced_homology(lk, p);
        // index i + 1 stores h̃_i; the link has dimension dim_ring - 1.
        if (!dense_all_zero_below(h, static_cast<std::size_t>(lk.dim_ring())))
            return false;
    }
    return true;
}

} // namespace srkit::testing

#endif
