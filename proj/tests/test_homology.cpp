#include <doctest.h>

#include "srkit/families.hpp"
#include "srkit/homology.hpp"
#include "support.hpp"

using namespace srkit;
using namespace srkit::testing;

namespace {

// Six-vertex real projective plane.
SimplicialComplex projective_plane()
{
    return facets_of(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5},
                         {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

// Seven-vertex torus.
SimplicialComplex torus()
{
    return facets_of(7, {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3},
                         {1, 2, 6}, {2, 3, 7}, {3, 4, 1}, {4, 5, 2}, {5, 6, 3}, {6, 7, 4}, {7, 1, 5}});
}

unsigned characteristic(FieldSpec f)
{
    return f.is_rational() ? 0U : f.characteristic();
}

std::vector<std::uint64_t> trimmed(const HomologyProfile& h)
{
    std::vector<std::uint64_t> out = h.betti_reduced;
    while (out.size() > 1 && out.back() == 0)
        out.pop_back();
    return out;
}

} // namespace

TEST_CASE("boundary matrices of small complexes")
{
    const SparseMatrix edge = boundary_matrix(facets_of(2, {{1, 2}}), 1, kRationals);
    CHECK(edge.rows() == 1);
    CHECK(edge.cols() == 2);
    CHECK(edge.get(0, 0) * edge.get(0, 1) == -1);

    const SparseMatrix triangle = boundary_matrix(SimplicialComplex::simplex(3), 2, kRationals);
    CHECK(triangle.rows() == 1);
    CHECK(triangle.cols() == 3);
    CHECK(triangle.nonzeros() == 3);
}

TEST_CASE("reduced homology of named spaces")
{
    const HomologyProfile cycle = reduced_homology(four_cycle(), kRationals);
    CHECK(cycle.at(0) == 0);
    CHECK(cycle.at(1) == 1);
    CHECK_FALSE(top_homology_vanishes(four_cycle(), kGF2));
    CHECK(top_homology_vanishes(SimplicialComplex::simplex(4), kGF2));
    CHECK(reduced_homology(SimplicialComplex::simplex(4), kGF3).is_acyclic());
    CHECK(reduced_homology(SimplicialComplex::empty_face(3), kGF2).at(-1) == 1);

    const SimplicialComplex sphere = SimplicialComplex::skeleton(5, 4);
    CHECK(reduced_homology(sphere, kRationals).at(3) == 1);

    for (FieldSpec f : {kGF2, kGF3, kRationals}) {
        const HomologyProfile t = reduced_homology(torus(), f);
        CHECK(t.at(0) == 0);
        CHECK(t.at(1) == 2);
        CHECK(t.at(2) == 1);
        CHECK(reduced_homology(exam_notlin(3), f).at(2) == 1);
    }

    // Torsion: H_1(RP^2; Z) = Z/2 is seen over GF(2) only.
    const HomologyProfile rp2_gf2 = reduced_homology(projective_plane(), kGF2);
    CHECK(rp2_gf2.at(1) == 1);
    CHECK(rp2_gf2.at(2) == 1);
    CHECK(reduced_homology(projective_plane(), kGF3).is_acyclic());
    CHECK(reduced_homology(projective_plane(), kRationals).is_acyclic());
}

TEST_CASE("stars are cones and acyclic")
{
    for (const auto& c : random_complexes(200, 2, 7, 31, true))
        for (int v = 1; v <= c.vertex_count(); ++v)
            CHECK(reduced_homology(star(c, VertexSet::singleton(v)), kGF2).is_acyclic());
}

TEST_CASE("reduced Euler characteristic from f-vector")
{
    // Σ_{i >= -1} (-1)^i f_i, so the circle gives -h̃_1 and the 2-sphere h̃_2.
    CHECK(reduced_euler_characteristic({1, 4, 4}) == -1);
    CHECK(reduced_euler_characteristic({1, 4, 6, 4}) == 1);
    CHECK(reduced_euler_characteristic({1, 3, 3, 1}) == 0);
    CHECK(reduced_euler_characteristic({1, 6, 15, 10}) == 0);
}

TEST_CASE("property: homology agrees with dense elimination")
{
    for (const auto& c : random_complexes(250, 1, 7, 32))
        for (FieldSpec f : {kGF2, kGF3, kRationals})
            CHECK(trimmed(reduced_homology(c, f)) == dense_reduced_homology(c, characteristic(f)));
}

TEST_CASE("property: chain complex identities")
{
    for (const auto& c : random_complexes(300, 1, 8, 33)) {
        const std::vector<std::uint64_t> fv = f_vector(c);
        for (FieldSpec f : {kGF2, kGF3, kRationals}) {
            for (int i = 1; i <= c.dimension(); ++i)
                CHECK(boundary_matrix(c, i + 1, f).multiply(boundary_matrix(c, i, f)).is_zero());
            const HomologyProfile h = reduced_homology(c, f);
            CHECK(h.euler_characteristic() == reduced_euler_characteristic(fv));
            const int apex = c.vertex_count() + 1;
            if (apex <= kMaxVertices) {
                const SimplicialComplex widened = SimplicialComplex::from_facets(apex, c.facets());
                CHECK(reduced_homology(cone(widened, apex), f).is_acyclic());
            }
            for (VertexSet g : free_faces(c))
                CHECK(trimmed(reduced_homology(collapse(c, g), f)) == trimmed(h));
        }
    }
}
