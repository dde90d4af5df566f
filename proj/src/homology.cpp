#include "srkit/homology.hpp"

#include <algorithm>

namespace srkit {

std::uint64_t HomologyProfile::at(int i) const
{
    const int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(betti_reduced.size()))
        return 0;
    return betti_reduced[static_cast<std::size_t>(idx)];
}

bool HomologyProfile::is_acyclic() const
{
    return std::all_of(betti_reduced.begin(), betti_reduced.end(), [](std::uint64_t b) { return b == 0; });
}

std::int64_t HomologyProfile::euler_characteristic() const
{
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < betti_reduced.size(); ++k) {
        const auto b = static_cast<std::int64_t>(betti_reduced[k]);
        // k = i + 1, sign (-1)^i.
        chi += (k % 2 == 1) ? b : -b;
    }
    return chi;
}

std::int64_t reduced_euler_characteristic(const std::vector<std::uint64_t>& f_vector)
{
    std::int64_t chi = 0;
    for (std::size_t q = 0; q < f_vector.size(); ++q) {
        const auto f = static_cast<std::int64_t>(f_vector[q]);
        chi += (q % 2 == 1) ? f : -f;
    }
    return chi;
}

namespace {

std::size_t index_in(std::span<const VertexSet> level, VertexSet face)
{
    const auto it = std::lower_bound(level.begin(), level.end(), face);
    return static_cast<std::size_t>(it - level.begin());
}

// Rank of the boundary map from `upper` (all of cardinality q >= 1) to
// `lower` (cardinality q - 1), both sorted canonically.
std::size_t boundary_rank(std::span<const VertexSet> upper, std::span<const VertexSet> lower, FieldSpec field)
{
    if (upper.empty() || lower.empty())
        return 0;
    const std::size_t cols = lower.size();
    if (upper.front().size() == 1)
        return 1; // ∂_0 sends every vertex to ∅.

    if (field.characteristic() == 2) {
        const std::size_t words = (cols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(upper.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t r = 0; r < upper.size(); ++r)
            for (int v : upper[r].vertices()) {
                const std::size_t c = index_in(lower, upper[r].without(v));
                rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
            }
        return detail::rank_gf2(std::move(rows), cols);
    }
    if (field.is_rational()) {
        std::vector<std::vector<std::int64_t>> rows(upper.size(), std::vector<std::int64_t>(cols, 0));
        for (std::size_t r = 0; r < upper.size(); ++r) {
            std::int64_t sign = 1;
            for (int v : upper[r].vertices()) {
                rows[r][index_in(lower, upper[r].without(v))] = sign;
                sign = -sign;
            }
        }
        return detail::rank_integer(rows, cols);
    }
    const std::uint32_t p = field.characteristic();
    std::vector<std::vector<std::uint32_t>> rows(upper.size(), std::vector<std::uint32_t>(cols, 0));
    for (std::size_t r = 0; r < upper.size(); ++r) {
        bool positive = true;
        for (int v : upper[r].vertices()) {
            rows[r][index_in(lower, upper[r].without(v))] = positive ? 1 : p - 1;
            positive = !positive;
        }
    }
    return detail::rank_mod_p(std::move(rows), cols, p);
}

} // namespace

std::vector<std::uint64_t> reduced_betti_of_faces(std::span<const VertexSet> faces, FieldSpec field)
{
    if (faces.empty())
        return {};
    const int top = faces.back().size(); // largest cardinality
    // levels[q] = faces of cardinality q.
    std::vector<std::span<const VertexSet>> levels(static_cast<std::size_t>(top) + 2);
    std::size_t begin = 0;
    for (int q = 0; q <= top; ++q) {
        std::size_t end = begin;
        while (end < faces.size() && faces[end].size() == q)
            ++end;
        levels[static_cast<std::size_t>(q)] = faces.subspan(begin, end - begin);
        begin = end;
    }
    // ranks[q] = rank of the boundary from cardinality q to q - 1.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int q = 1; q <= top; ++q)
        ranks[static_cast<std::size_t>(q)] =
            boundary_rank(levels[static_cast<std::size_t>(q)], levels[static_cast<std::size_t>(q - 1)], field);

    std::vector<std::uint64_t> betti(static_cast<std::size_t>(top) + 1);
    for (int q = 0; q <= top; ++q) {
        const auto k = static_cast<std::size_t>(q);
        betti[k] = levels[k].size() - ranks[k] - ranks[k + 1];
    }
    return betti;
}

SparseMatrix boundary_matrix(const SimplicialComplex& complex, int i, FieldSpec field)
{
    const std::vector<VertexSet> upper = i + 1 >= 0 ? faces(complex, i + 1) : std::vector<VertexSet>{};
    const std::vector<VertexSet> lower = i >= 0 ? faces(complex, i) : std::vector<VertexSet>{};
    SparseMatrix m(field, upper.size(), lower.size());
    if (lower.empty())
        return m;
    for (std::size_t r = 0; r < upper.size(); ++r) {
        int sign = 1;
        for (int v : upper[r].vertices()) {
            m.set(r, index_in(lower, upper[r].without(v)), Rational(sign));
            sign = -sign;
        }
    }
    return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, FieldSpec field)
{
    const std::vector<VertexSet> face_list = all_faces(complex);
    return HomologyProfile{field, reduced_betti_of_faces(face_list, field)};
}

bool top_homology_vanishes(const SimplicialComplex& complex, FieldSpec field)
{
    return reduced_homology(complex, field).at(complex.dimension()) == 0;
}

} // namespace srkit
