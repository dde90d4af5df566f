#ifndef SRKIT_CANONICAL_HPP
#define SRKIT_CANONICAL_HPP

#include <span>
#include <vector>

#include "srkit/complex.hpp"

namespace srkit {

/**
 * Canonical relabeling of a family of subsets of [n].
 *
 * Vertices are ordered by iterated colour refinement (a vertex's colour is
 * refined by the sizes and colours of the sets containing it); ties are
 * broken by individualization, searching every branch except those proven
 * equivalent by automorphisms found along the way. The result is the least
 * relabeled family (canonical set order, then lexicographic) among the
 * search-tree leaves, so two families get the same result iff they are
 * isomorphic.
 */
std::vector<VertexSet> canonical_family(int n, std::span<const VertexSet> family);

/// The relabeling permutation behind canonical_family: labels[v-1] is the
/// new label of vertex v.
std::vector<int> canonical_labeling(int n, std::span<const VertexSet> family);

/// Applies labels[v-1] -> new label to every set; result in canonical order.
std::vector<VertexSet> relabel(std::span<const VertexSet> family, const std::vector<int>& labels);
SimplicialComplex relabel(const SimplicialComplex& complex, const std::vector<int>& labels);

SimplicialComplex canonical_form(const SimplicialComplex& complex);

/// False when the ambient vertex counts differ.
bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

} // namespace srkit

#endif
