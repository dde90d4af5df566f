#include <doctest.h>

#include "srkit/families.hpp"
#include "srkit/ring_props.hpp"
#include "support.hpp"

using namespace srkit;
using namespace srkit::testing;

namespace {

SimplicialComplex projective_plane()
{
    return facets_of(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5},
                         {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

unsigned characteristic(FieldSpec f)
{
    return f.is_rational() ? 0U : f.characteristic();
}

} // namespace

TEST_CASE("Cohen-Macaulay status of small complexes")
{
    const RingStatus cycle = is_cohen_macaulay(four_cycle(), kGF2);
    CHECK(cycle.is_cm);
    CHECK(cycle.is_buchsbaum);
    CHECK_FALSE(cycle.is_hypersurface);
    CHECK(cycle.d2_connected == std::optional<bool>(true));

    const SimplicialComplex two_edges = facets_of(4, {{1, 2}, {3, 4}});
    const RingStatus split = is_cohen_macaulay(two_edges, kRationals);
    CHECK_FALSE(split.is_cm);
    REQUIRE(split.failing_witness);
    CHECK(split.failing_witness->face == VertexSet{});
    CHECK(split.failing_witness->index == 0);
    CHECK(split.d2_connected == std::optional<bool>(false));

    const SimplicialComplex mixed = facets_of(4, {{1, 2, 3}, {3, 4}});
    CHECK_FALSE(cohen_macaulay(mixed, kGF2));
    CHECK_FALSE(is_buchsbaum(mixed, kGF2));
}

TEST_CASE("field dependence through the projective plane")
{
    CHECK(cohen_macaulay(projective_plane(), kRationals));
    CHECK(cohen_macaulay(projective_plane(), kGF3));
    CHECK_FALSE(cohen_macaulay(projective_plane(), kGF2));
    CHECK(is_buchsbaum(projective_plane(), kGF2));
}

TEST_CASE("Buchsbaum complexes of the classification")
{
    const SimplicialComplex model = bbm_pure_complex();
    for (FieldSpec f : {kGF2, kGF3, kRationals}) {
        CHECK_FALSE(cohen_macaulay(model, f));
        CHECK(is_buchsbaum(model, f));
    }
    CHECK_FALSE(is_hypersurface(model));

    // T_{3,5}: the link of 4 is a path plus an isolated vertex.
    const SimplicialComplex t35 = facets_of(5, {{1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 4, 5}});
    CHECK_FALSE(cohen_macaulay(t35, kGF2));
    CHECK_FALSE(is_buchsbaum(t35, kGF2));
    CHECK_FALSE(is_buchsbaum(t35, kRationals));

    const SimplicialComplex notlin = exam_notlin(3);
    CHECK_FALSE(cohen_macaulay(notlin, kGF2));
    CHECK(is_buchsbaum(notlin, kGF2) == is_buchsbaum(notlin, kRationals));
}

TEST_CASE("hypersurfaces")
{
    CHECK(is_hypersurface(SimplicialComplex::skeleton(5, 4)));
    CHECK_FALSE(is_hypersurface(four_cycle()));
    CHECK_FALSE(is_hypersurface(facets_of(3, {{2, 3}, {1}})));
    CHECK_FALSE(is_hypersurface(SimplicialComplex::simplex(3)));
    CHECK(is_hypersurface(facets_of(3, {{1, 3}, {2, 3}})));
}

TEST_CASE("connectivity")
{
    CHECK(is_connected(four_cycle()));
    CHECK_FALSE(is_connected(facets_of(4, {{1, 2}, {3, 4}})));
    CHECK(is_connected(facets_of(3, {{1, 2, 3}})));
}

TEST_CASE("property: Reisner criterion against dense link homology")
{
    for (const auto& c : random_complexes(250, 1, 7, 51, true))
        for (FieldSpec f : {kGF2, kGF3, kRationals})
            CHECK(cohen_macaulay(c, f) == dense_cohen_macaulay(c, characteristic(f)));
}

TEST_CASE("property: implications between ring properties")
{
    for (const auto& c : random_complexes(500, 1, 8, 52, true)) {
        for (FieldSpec f : {kGF2, kRationals}) {
            const RingStatus s = is_cohen_macaulay(c, f);
            CHECK(s.is_cm != s.failing_witness.has_value());
            if (s.is_cm) {
                CHECK(c.is_pure());
                CHECK(s.is_buchsbaum);
            }
            if (c.dim_ring() == 2)
                CHECK(s.is_cm == is_connected(c));
            if (s.is_hypersurface)
                CHECK(s.is_cm);
            CHECK(s.is_buchsbaum == is_buchsbaum(c, f));
        }
    }
}
