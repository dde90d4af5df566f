#ifndef SRKIT_BETTI_HPP
#define SRKIT_BETTI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "srkit/complex.hpp"
#include "srkit/field.hpp"

namespace srkit {

/// Default cap on the number of restrictions Δ_W swept by Hochster's formula.
inline constexpr std::uint64_t kDefaultMaxSubsets = std::uint64_t{1} << 20;

/**
 * Graded Betti numbers β_{i,j} of k[Δ] as an S-module. Only nonzero
 * entries are stored; β_{0,0} = 1 is always present.
 */
class BettiTable {
public:
    BettiTable(FieldSpec field, int n);

    FieldSpec field() const { return field_; }
    int vertex_count() const { return n_; }
    const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

    std::uint64_t at(int i, int j) const;
    /// Adds to β_{i,j}; zero increments are ignored.
    void add(int i, int j, std::uint64_t value);

    /// max j - i over nonzero entries (0 for the zero ideal).
    int regularity() const;
    /// min / max j with β_{1,j} != 0; kInfiniteDegree for the zero ideal.
    int indeg() const;
    int rt() const;
    /// max i with a nonzero entry.
    int projective_dimension() const;

    /// Grid with rows i and columns j - i; zeros print as ".".
    std::string to_text() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    FieldSpec field_;
    int n_;
    std::map<std::pair<int, int>, std::uint64_t> entries_;
};

struct HochsterOptions {
    /// Only W with |W| <= max_j are swept (entries with larger j are absent).
    std::optional<int> max_j;
    /// Guard on the number of subsets W; exceeding it throws GuardError.
    std::uint64_t max_subsets = kDefaultMaxSubsets;
    int jobs = 1;
};

/// β_{i,j}(k[Δ]) = Σ_{|W| = j} dim_k H̃_{j-i-1}(Δ_W; k).
BettiTable hochster_betti(const SimplicialComplex& complex, FieldSpec field, const HochsterOptions& options = {});

struct LinearityResult {
    bool linear = false;
    int degree = 0;     ///< q = indeg
    int regularity = 0;
};

/// reg = indeg - 1. Throws std::invalid_argument for the full simplex.
LinearityResult has_linear_resolution(const SimplicialComplex& complex, FieldSpec field,
                                      const HochsterOptions& options = {});

int regularity(const SimplicialComplex& complex, FieldSpec field, const HochsterOptions& options = {});

/// max{ i + 1 : H̃_i(Δ_W) != 0 for some W }, or 0, scanning the
/// restrictions one by one through reduced_homology.
int regularity_by_restriction_scan(const SimplicialComplex& complex, FieldSpec field,
                                   std::uint64_t max_subsets = kDefaultMaxSubsets);

/// a(k[Δ]) < 0, i.e. H̃_{dim Δ}(Δ) = 0.
bool a_invariant_negative(const SimplicialComplex& complex, FieldSpec field);

/// Number of subsets W with |W| <= max_j; throws GuardError above the cap.
std::uint64_t check_sweep_size(int n, int max_j, std::uint64_t max_subsets);

} // namespace srkit

#endif
