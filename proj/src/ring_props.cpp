#include "srkit/ring_props.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "srkit/homology.hpp"

namespace srkit {

namespace {

// Faces of link_Δ G from the canonical face list of Δ; subtracting G keeps
// the canonical order.
void link_faces(const std::vector<VertexSet>& all, VertexSet g, std::vector<VertexSet>& out)
{
    out.clear();
    for (VertexSet f : all)
        if (g.is_subset_of(f))
            out.push_back(f - g);
}

std::optional<CmWitness> first_witness(const std::vector<VertexSet>& all, FieldSpec field)
{
    std::vector<VertexSet> lk;
    for (VertexSet g : all) {
        link_faces(all, g, lk);
        const int link_dim = lk.back().size() - 1;
        const std::vector<std::uint64_t> h = reduced_betti_of_faces(lk, field);
        for (int i = -1; i < link_dim; ++i)
            if (h[static_cast<std::size_t>(i + 1)] != 0)
                return CmWitness{g, i};
    }
    return std::nullopt;
}

} // namespace

std::optional<CmWitness> cm_witness(const SimplicialComplex& complex, FieldSpec field)
{
    return first_witness(all_faces(complex), field);
}

bool cohen_macaulay(const SimplicialComplex& complex, FieldSpec field)
{
    // Reisner forces purity; skip the link sweep for mixed dimensions.
    if (!complex.is_pure())
        return false;
    return !cm_witness(complex, field).has_value();
}

bool is_buchsbaum(const SimplicialComplex& complex, FieldSpec field)
{
    if (!complex.is_pure())
        return false;
    for (int v : complex.vertex_support().vertices())
        if (!cohen_macaulay(link(complex, VertexSet::singleton(v)), field))
            return false;
    return true;
}

bool is_hypersurface(const SimplicialComplex& complex)
{
    return minimal_nonfaces(complex).size() == 1;
}

bool is_connected(const SimplicialComplex& complex)
{
    const int n = complex.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (VertexSet f : complex.facets()) {
        const int root = f.min_vertex();
        for (int v : f.vertices())
            parent[static_cast<std::size_t>(find(v))] = find(root);
    }
    const std::vector<int> verts = complex.vertex_support().vertices();
    if (verts.empty())
        return false;
    const int r = find(verts.front());
    for (int v : verts)
        if (find(v) != r)
            return false;
    return true;
}

RingStatus is_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field)
{
    RingStatus status;
    status.field = field;
    status.failing_witness = cm_witness(complex, field);
    status.is_cm = !status.failing_witness.has_value();
    status.is_buchsbaum = status.is_cm || is_buchsbaum(complex, field);
    status.is_hypersurface = is_hypersurface(complex);
    if (complex.dim_ring() == 2) {
        status.d2_connected = is_connected(complex);
        if (*status.d2_connected != status.is_cm)
            throw std::logic_error("Reisner's criterion and graph connectivity disagree on " + complex.to_string());
    }
    return status;
}

} // namespace srkit
