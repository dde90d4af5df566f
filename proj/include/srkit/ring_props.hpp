#ifndef SRKIT_RING_PROPS_HPP
#define SRKIT_RING_PROPS_HPP

#include <optional>

#include "srkit/complex.hpp"
#include "srkit/field.hpp"

namespace srkit {

/// A face G whose link has H̃_i(link_Δ G) != 0 for some i < dim link_Δ G.
struct CmWitness {
    VertexSet face;
    int index = 0;

    friend bool operator==(const CmWitness&, const CmWitness&) = default;
};

struct RingStatus {
    FieldSpec field = kGF2;
    bool is_cm = false;
    bool is_buchsbaum = false;
    bool is_hypersurface = false;
    /// Canonically smallest witness (face order, then homology index).
    std::optional<CmWitness> failing_witness;
    /// Graph connectivity, set when dim k[Δ] = 2.
    std::optional<bool> d2_connected;
};

/// Reisner's criterion over every face G (∅ included), plus the Buchsbaum
/// and hypersurface flags. For d = 2 the connectivity of Δ is computed
/// separately and must agree; a disagreement throws std::logic_error.
RingStatus is_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field);

/// Reisner's criterion alone, stopping at the first failing face.
bool cohen_macaulay(const SimplicialComplex& complex, FieldSpec field);
std::optional<CmWitness> cm_witness(const SimplicialComplex& complex, FieldSpec field);

/// Δ pure and link_Δ {i} Cohen–Macaulay for every vertex i of Δ.
bool is_buchsbaum(const SimplicialComplex& complex, FieldSpec field);

/// Exactly one minimal nonface (false for the full simplex).
bool is_hypersurface(const SimplicialComplex& complex);

/// Connectivity of the 1-skeleton over the vertices of Δ (union-find).
bool is_connected(const SimplicialComplex& complex);

} // namespace srkit

#endif
