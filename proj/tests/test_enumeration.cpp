#include <doctest.h>

#include <set>

#include "srkit/canonical.hpp"
#include "srkit/enumeration.hpp"
#include "srkit/errors.hpp"
#include "support.hpp"

using namespace srkit;
using namespace srkit::testing;

namespace {

// Every nonempty antichain of 2^[n] by scanning all families of subsets.
std::vector<SimplicialComplex> brute_complexes(int n)
{
    const std::vector<VertexSet> subsets = power_set(n);
    const std::uint64_t families = std::uint64_t{1} << subsets.size();
    std::vector<SimplicialComplex> out;
    for (std::uint64_t mask = 1; mask < families; ++mask) {
        std::vector<VertexSet> chosen;
        for (std::size_t i = 0; i < subsets.size(); ++i)
            if ((mask >> i) & 1U)
                chosen.push_back(subsets[i]);
        bool antichain = true;
        for (std::size_t a = 0; a < chosen.size() && antichain; ++a)
            for (std::size_t b = 0; b < chosen.size() && antichain; ++b)
                antichain = a == b || !chosen[a].is_subset_of(chosen[b]);
        if (antichain)
            out.push_back(SimplicialComplex::from_facets(n, chosen));
    }
    std::sort(out.begin(), out.end());
    return out;
}

EnumFilter unrestricted(int n, bool labeled, bool vertex_full)
{
    EnumFilter f;
    f.n = n;
    f.up_to_iso = !labeled;
    f.require_vertex_full = vertex_full;
    return f;
}

std::vector<SimplicialComplex> sorted_list(std::vector<SimplicialComplex> list)
{
    std::sort(list.begin(), list.end());
    return list;
}

std::set<SimplicialComplex> canonical_set(const std::vector<SimplicialComplex>& list)
{
    std::set<SimplicialComplex> out;
    for (const auto& c : list)
        out.insert(canonical_form(c));
    return out;
}

// Largest family of k-subsets of [n] with no p-set having all its k-subsets.
std::uint64_t brute_extremal(int n, int p, int k)
{
    const std::vector<VertexSet> ksets = subsets_of_size(n, k);
    const std::vector<VertexSet> psets = subsets_of_size(n, p);
    std::vector<std::uint64_t> cliques;
    for (VertexSet s : psets) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < ksets.size(); ++i)
            if (ksets[i].is_subset_of(s))
                mask |= std::uint64_t{1} << i;
        cliques.push_back(mask);
    }
    std::uint64_t best = 0;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << ksets.size()); ++fam) {
        const auto size = static_cast<std::uint64_t>(std::popcount(fam));
        if (size <= best)
            continue;
        if (std::none_of(cliques.begin(), cliques.end(), [&](std::uint64_t c) { return (fam & c) == c; }))
            best = size;
    }
    return best;
}

} // namespace

TEST_CASE("labeled enumeration matches brute-force antichains")
{
    for (int n = 1; n <= 4; ++n) {
        const std::vector<SimplicialComplex> brute = brute_complexes(n);
        const auto labeled = sorted_list(enumerate_complexes(unrestricted(n, true, false)));
        CHECK(labeled.size() == brute.size());
        CHECK(labeled == brute);
        std::vector<SimplicialComplex> full;
        for (const auto& c : brute)
            if (invariants(c).vertex_full)
                full.push_back(c);
        CHECK(sorted_list(enumerate_complexes(unrestricted(n, true, true))) == full);
        CHECK(canonical_set(enumerate_complexes(unrestricted(n, false, false))) == canonical_set(brute));
    }
    CHECK(enumerate_complexes(unrestricted(4, true, false)).size() == 167);
}

TEST_CASE("isomorphism class counts")
{
    const std::vector<std::size_t> all{2, 4, 9, 29, 209, 16352};
    const std::vector<std::size_t> full{1, 2, 5, 20, 180, 16143};
    for (int n = 1; n <= 6; ++n) {
        CHECK(enumerate_complexes(unrestricted(n, false, false)).size() == all[n - 1]);
        CHECK(enumerate_complexes(unrestricted(n, false, true)).size() == full[n - 1]);
    }
}

TEST_CASE("filtered regions agree with filtering the catalog")
{
    const std::vector<SimplicialComplex> brute = brute_complexes(4);
    EnumFilter f = unrestricted(4, true, true);
    f.dim_ring = 2;
    std::vector<SimplicialComplex> expected;
    for (const auto& c : brute)
        if (admits(f, c))
            expected.push_back(c);
    CHECK(sorted_list(enumerate_complexes(f)) == expected);

    EnumFilter graphs = unrestricted(4, false, true);
    graphs.dim_ring = 2;
    graphs.pure = true;
    graphs.e_min = 4;
    graphs.e_max = 4;
    const auto cycles = enumerate_complexes(graphs);
    CHECK(std::any_of(cycles.begin(), cycles.end(), [](const auto& c) { return is_isomorphic(c, four_cycle()); }));
}

TEST_CASE("skeleton mode agrees with general mode")
{
    for (int n = 3; n <= 6; ++n) {
        const std::vector<SimplicialComplex> catalog = enumerate_complexes(unrestricted(n, false, true));
        for (int d = 2; d < n; ++d) {
            for (std::optional<int> rt_max : {std::optional<int>{}, std::optional<int>{d}}) {
                EnumFilter f = unrestricted(n, false, true);
                f.dim_ring = d;
                f.indeg_exact = d;
                f.rt_max = rt_max;
                REQUIRE(select_mode(f) == EnumMode::Skeleton);
                std::vector<SimplicialComplex> expected;
                for (const auto& c : catalog)
                    if (admits(f, c))
                        expected.push_back(c);
                CHECK(canonical_set(enumerate_complexes(f)) == canonical_set(expected));
                CHECK(enumerate_complexes(f).size() == expected.size());
            }
        }
    }
}

TEST_CASE("Proposition Pure region at d = 5 is nonempty only at e = 9")
{
    EnumFilter f = unrestricted(7, false, true);
    f.dim_ring = 5;
    f.indeg_exact = 5;
    f.pure = true;
    f.e_max = 9;
    const auto list = enumerate_complexes(f);
    REQUIRE(list.size() == 1);
    CHECK(invariants(list.front()).multiplicity == 9);
}

TEST_CASE("guards and validation")
{
    CHECK_THROWS_AS(enumerate_complexes(unrestricted(7, false, true)), GuardError);
    CHECK_THROWS_AS(enumerate_complexes(unrestricted(6, true, true)), GuardError);
    EnumFilter bad = unrestricted(4, false, true);
    bad.e_min = 3;
    bad.e_max = 2;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    CHECK_THROWS_AS(turan(12, 3, 2), GuardError);
}

TEST_CASE("Turan numbers against brute force and Mantel")
{
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            for (int p = k + 1; p <= n; ++p) {
                if (binomial(n, k) > 20)
                    continue;
                const TuranRecord t = turan(n, p, k);
                CHECK(t.extremal == brute_extremal(n, p, k));
                CHECK(t.turan_number + t.extremal == binomial(n, k));
            }
    for (int n = 4; n <= 8; ++n) {
        const auto quarter = static_cast<std::uint64_t>(n * n / 4);
        CHECK(turan(n, 3, 2).extremal == quarter);
        CHECK(turan(n, 3, 2).turan_number == binomial(n, 2) - quarter);
    }
}

TEST_CASE("empirical f by enumeration")
{
    for (int n = 4; n <= 8; ++n) {
        const std::uint64_t expected = n % 2 == 0 ? n * n / 4 + 1 : (n * n - 1) / 4 + 1;
        CHECK(empirical_f(n, 2) == expected);
    }
    for (auto [n, d] : {std::pair{5, 3}, std::pair{6, 3}, std::pair{6, 4}}) {
        const std::uint64_t f = empirical_f(n, d);
        CHECK(f >= static_cast<std::uint64_t>((n - d) * d + 1));
    }
    CHECK_THROWS_AS(empirical_f(3, 3), std::invalid_argument);
}

TEST_CASE("property: random complexes are valid and vertex-full on request")
{
    std::mt19937_64 rng(71);
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + i % 10;
        const SimplicialComplex c = random_complex(n, rng, true);
        CHECK(c.vertex_count() == n);
        CHECK(invariants(c).vertex_full);
    }
}
