#ifndef SRKIT_FAMILIES_HPP
#define SRKIT_FAMILIES_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srkit/complex.hpp"

namespace srkit {

/// F_{i,j} = [d] \ {i} ∪ {j} for i = 1..d, j = d+1..c+d, ordered by (i, j).
std::vector<VertexSet> thm_sample_generators(int c, int d);

/// Δ spanned by the chosen F_{i,j} and every (d-1)-subset of [c+d].
SimplicialComplex thm_sample(int c, int d, std::span<const VertexSet> chosen);
/// The first e generators in (i, j) order; 1 <= e <= cd.
SimplicialComplex thm_sample(int c, int d, int e);

/// On [d+2]: the facets of the complete intersection (x_1...x_d, x_{d+1}x_{d+2})
/// together with every (d-1)-subset. e = 2d, not d-linear.
SimplicialComplex exam_notlin(int d);

/// dim = indeg = d, rt = d+1, multiplicity e, for d+1 <= e <= C(n,d)-1:
/// the d-subsets of [d+1] plus the first e-d-1 remaining d-sets, over the
/// full (d-2)-skeleton.
SimplicialComplex exam_rt(int n, int d, int e);

/// [d] as the only d-face, the first rho (d-1)-sets not inside [d], and
/// every (d-2)-subset of [n]; 0 <= rho <= d-3.
SimplicialComplex omake_ex(int n, int d, int rho);

/// The listed triangle-free graphs S_{n,e'} and their duals T_{d,e}.
std::vector<std::pair<int, int>> puredual_graph_parameters();
std::vector<std::pair<int, int>> puredual_dual_parameters();
SimplicialComplex puredual_graph(int n, int edges);
/// T_{d,e} exactly as listed; build_example("puredual-T") additionally
/// asserts the stated invariants.
SimplicialComplex puredual_dual(int d, int e);
/// Pure, dim = indeg = d and e facets.
bool puredual_dual_as_stated(const SimplicialComplex& t, int d, int e);

/// {124, 134, 135, 235, 245} on [5].
SimplicialComplex bbm_pure_complex();

/// Parameter-keyed front end over the constructors above. Ids:
/// thm-sample (c, d, e), notlin (d), exam-rt (n, d, e), omake-ex (n, d, rho),
/// puredual-S (n, e), puredual-T (d, e), bbm-pure. Throws
/// std::invalid_argument for unknown ids, missing keys or parameters out of
/// range, and std::logic_error if a constructed complex misses its stated
/// invariants.
SimplicialComplex build_example(std::string_view id, const std::map<std::string, int>& params);
std::vector<std::string> example_ids();

} // namespace srkit

#endif
