#ifndef SRKIT_HOMOLOGY_HPP
#define SRKIT_HOMOLOGY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "srkit/complex.hpp"
#include "srkit/field.hpp"
#include "srkit/sparse_matrix.hpp"

namespace srkit {

/// dim_k H̃_i(Δ; k) for i = -1, ..., dim Δ.
struct HomologyProfile {
    FieldSpec field = kGF2;
    /// betti_reduced[i + 1] = h̃_i.
    std::vector<std::uint64_t> betti_reduced;

    /// h̃_i, zero outside the stored range.
    std::uint64_t at(int i) const;
    int top_index() const { return static_cast<int>(betti_reduced.size()) - 2; }
    bool is_acyclic() const;
    /// Σ (-1)^i h̃_i.
    std::int64_t euler_characteristic() const;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/// ∂_i : C_i -> C_{i-1} of the augmented chain complex. Rows are the
/// i-faces and columns the (i-1)-faces, both in canonical order; the entry
/// for dropping the vertex in position k (0-based, increasing labels) is
/// (-1)^k. ∂_0 maps every vertex to ∅. Out-of-range i gives a matrix with
/// zero rows or columns.
SparseMatrix boundary_matrix(const SimplicialComplex& complex, int i, FieldSpec field);

HomologyProfile reduced_homology(const SimplicialComplex& complex, FieldSpec field);

/// h̃_{dim Δ}(Δ) = 0.
bool top_homology_vanishes(const SimplicialComplex& complex, FieldSpec field);

/// Reduced Betti numbers h̃_{-1}, ..., h̃_{top} of the complex whose faces
/// are `faces`: a downward-closed family listed in canonical order. An
/// empty list is the void complex and yields an empty vector.
std::vector<std::uint64_t> reduced_betti_of_faces(std::span<const VertexSet> faces, FieldSpec field);

/// Euler characteristic from the f-vector: Σ_{q >= 0} (-1)^{q-1} f_{q-1}.
std::int64_t reduced_euler_characteristic(const std::vector<std::uint64_t>& f_vector);

} // namespace srkit

#endif
