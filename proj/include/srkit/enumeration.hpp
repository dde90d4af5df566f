#ifndef SRKIT_ENUMERATION_HPP
#define SRKIT_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "srkit/complex.hpp"

namespace srkit {

/// Hypothesis region for an enumeration. Unset fields do not constrain.
struct EnumFilter {
    int n = 0;
    bool require_vertex_full = true;
    std::optional<int> dim_ring;
    std::optional<bool> pure;
    std::optional<int> indeg_exact;
    std::optional<int> rt_max;
    std::optional<int> rt_exact;
    std::optional<std::uint64_t> e_min;
    std::optional<std::uint64_t> e_max;
    bool up_to_iso = true;
};

/// Default bound on the (symmetry-adjusted) search-space estimate.
inline constexpr std::uint64_t kDefaultSearchBound = std::uint64_t{1} << 22;

struct EnumOptions {
    int jobs = 1;
    std::uint64_t max_search = kDefaultSearchBound;
};

enum class EnumMode {
    /// Antichains of facets, reached from the full simplex by deleting one
    /// facet at a time. n <= 6 up to isomorphism, n <= 5 labeled.
    General,
    /// indeg = dim k[Δ] = d: every (d-1)-set is a face and Δ is fixed by its
    /// family of d-faces (a proper, nonempty subfamily of the d-sets).
    Skeleton,
};

/// Throws std::invalid_argument for inconsistent constraints.
void validate(const EnumFilter& filter);
EnumMode select_mode(const EnumFilter& filter);
bool admits(const EnumFilter& filter, const SimplicialComplex& complex);
bool admits(const EnumFilter& filter, const InvariantSummary& summary);

/// Every complex on [n] satisfying the filter exactly once (one canonical
/// representative per isomorphism class when up_to_iso), sorted ascending.
/// Throws GuardError when the search space exceeds the configured bound.
std::vector<SimplicialComplex> enumerate_complexes(const EnumFilter& filter, const EnumOptions& options = {});

/// Visits enumerate_complexes(filter) in order.
void for_each_complex(const EnumFilter& filter, const std::function<void(const SimplicialComplex&)>& fn,
                      const EnumOptions& options = {});

/// A small random complex: a handful of random faces, plus the missing
/// singletons when vertex_full. No distributional claims.
SimplicialComplex random_complex(int n, std::mt19937_64& rng, bool vertex_full = true);

/**
 * Turán data for k-subsets of [n] and the complete k-graphs K_p^(k):
 * `extremal` is the largest family of k-sets containing no p-set together
 * with all of its k-subsets, and `turan_number` the least number of k-sets
 * meeting the k-subset family of every p-set (= C(n,k) - extremal).
 */
struct TuranRecord {
    int n = 0;
    int p = 0;
    int k = 0;
    std::uint64_t extremal = 0;
    std::uint64_t turan_number = 0;

    /// C(n,k) - T(n,p,k).
    std::uint64_t f_from_identity() const { return binomial(n, k) - turan_number; }
};

/// Exact branch and bound; requires C(n,k) <= 64 (GuardError otherwise).
TuranRecord turan(int n, int p, int k);

/// The least m such that every vertex-full complex on [n] with
/// dim k[Δ] = indeg k[Δ] = d and e >= m has rt = d + 1, found by
/// enumerating the complexes with rt = d.
std::uint64_t empirical_f(int n, int d, const EnumOptions& options = {});

} // namespace srkit

#endif
