#ifndef SRKIT_COMPLEX_HPP
#define SRKIT_COMPLEX_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "srkit/vertex_set.hpp"

namespace srkit {

/// indeg / rt of the zero ideal (complex equal to the full simplex).
inline constexpr int kInfiniteDegree = std::numeric_limits<int>::max();

/**
 * A simplicial complex on the ambient vertex set [n], stored as its facets.
 *
 * Facets form an antichain, are never empty as a list (the void complex is
 * not representable; {∅} is the single facet ∅) and are kept sorted in the
 * canonical (cardinality, mask) order, so equality is structural.
 * Vertices of [n] need not all be faces.
 */
class SimplicialComplex {
public:
    /// The complex generated by the candidates: inclusion-maximal
    /// candidates become facets. Throws std::invalid_argument on an empty
    /// candidate list, n outside 0..64, or a vertex outside [n].
    static SimplicialComplex from_facets(int n, std::span<const VertexSet> candidates);
    static SimplicialComplex from_facets(int n, std::initializer_list<VertexSet> candidates);

    /// The full simplex 2^[n].
    static SimplicialComplex simplex(int n);
    /// The complex {∅} on [n].
    static SimplicialComplex empty_face(int n);
    /// All subsets of [n] of cardinality <= k, i.e. the (k-1)-skeleton.
    static SimplicialComplex skeleton(int n, int k);

    int vertex_count() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    /// dim Δ = (max facet cardinality) - 1; -1 for {∅}.
    int dimension() const { return facets_.back().size() - 1; }
    /// Krull dimension of k[Δ], i.e. dim Δ + 1.
    int dim_ring() const { return facets_.back().size(); }

    bool contains(VertexSet face) const;
    bool is_full_simplex() const { return facets_.size() == 1 && facets_.front() == VertexSet::full(n_); }
    bool is_pure() const { return facets_.front().size() == facets_.back().size(); }
    /// Union of all facets.
    VertexSet vertex_support() const;

    std::string to_string() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
    /// Lexicographic on (n, facet list); the deterministic output order.
    friend std::strong_ordering operator<=>(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets)) {}

    int n_ = 0;
    std::vector<VertexSet> facets_;
};

/// Purely combinatorial invariants of Δ and of k[Δ].
struct InvariantSummary {
    int n = 0;
    int dim_ring = 0;               ///< d = dim Δ + 1
    int codim = 0;                  ///< c = n - d
    std::uint64_t multiplicity = 0; ///< e: number of facets of cardinality d
    std::vector<std::uint64_t> f_vector; ///< f_{-1}, ..., f_{d-1}
    bool is_pure = false;
    int indeg = kInfiniteDegree;    ///< min cardinality of a minimal nonface
    int rt = kInfiniteDegree;       ///< max cardinality of a minimal nonface
    std::uint64_t mu = 0;           ///< number of minimal nonfaces
    int bight = 0;                  ///< n - min facet cardinality
    bool vertex_full = false;       ///< every {i}, i in [n], is a face
};

/// All faces of cardinality q, canonical order.
std::vector<VertexSet> faces(const SimplicialComplex& complex, int q);
/// All faces (including ∅), canonical order.
std::vector<VertexSet> all_faces(const SimplicialComplex& complex);
/// f_{-1}, ..., f_{dim}.
std::vector<std::uint64_t> f_vector(const SimplicialComplex& complex);

/// Inclusion-minimal subsets of [n] not in Δ (the generators of I_Δ),
/// canonical order. Empty exactly for the full simplex.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex);

InvariantSummary invariants(const SimplicialComplex& complex);

/// Facets of Δ* are the complements of the minimal nonfaces of Δ; the
/// ambient n is kept. Throws std::invalid_argument for the full simplex.
SimplicialComplex alexander_dual(const SimplicialComplex& complex);

/// link_Δ G with original labels. Throws std::invalid_argument if G ∉ Δ.
SimplicialComplex link(const SimplicialComplex& complex, VertexSet face);
/// star_Δ G = faces F with F ∪ G ∈ Δ. Throws std::invalid_argument if G ∉ Δ.
SimplicialComplex star(const SimplicialComplex& complex, VertexSet face);
/// Δ_W = {F ∈ Δ : F ⊆ W}. Throws std::invalid_argument if W ⊄ [n].
SimplicialComplex restriction(const SimplicialComplex& complex, VertexSet subset);

/// Nonempty non-facet faces lying in exactly one facet, canonical order.
std::vector<VertexSet> free_faces(const SimplicialComplex& complex);
/// Removes every face containing the free face G. Throws
/// std::invalid_argument if G is not a free face.
SimplicialComplex collapse(const SimplicialComplex& complex, VertexSet free_face);

/// Cone over Δ with apex v (v must be a vertex of [n] not used by Δ).
SimplicialComplex cone(const SimplicialComplex& complex, int apex);

} // namespace srkit

#endif
