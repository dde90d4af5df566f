#include "srkit/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace srkit {

namespace {

void check_ambient(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0..64");
}

// Inclusion-maximal elements of the candidates, canonical order.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) { return b < a; });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet k : kept) {
            if (s.is_subset_of(k)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::span<const VertexSet> candidates)
{
    check_ambient(n);
    if (candidates.empty())
        throw std::invalid_argument("empty candidate face list (the void complex is not supported)");
    const VertexSet ground = VertexSet::full(n);
    for (VertexSet c : candidates) {
        if (!c.is_subset_of(ground))
            throw std::invalid_argument("face " + c.to_string() + " has a vertex outside [" +
                                        std::to_string(n) + "]");
    }
    return SimplicialComplex(n, maximal_elements({candidates.begin(), candidates.end()}));
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::initializer_list<VertexSet> candidates)
{
    return from_facets(n, std::span<const VertexSet>(candidates.begin(), candidates.size()));
}

SimplicialComplex SimplicialComplex::simplex(int n)
{
    check_ambient(n);
    return SimplicialComplex(n, {VertexSet::full(n)});
}

SimplicialComplex SimplicialComplex::empty_face(int n)
{
    check_ambient(n);
    return SimplicialComplex(n, {VertexSet{}});
}

SimplicialComplex SimplicialComplex::skeleton(int n, int k)
{
    check_ambient(n);
    if (k < 0 || k > n)
        throw std::invalid_argument("skeleton cardinality outside 0..n");
    return SimplicialComplex(n, subsets_of_size(n, k));
}

bool SimplicialComplex::contains(VertexSet face) const
{
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.is_subset_of(f); });
}

VertexSet SimplicialComplex::vertex_support() const
{
    VertexSet s;
    for (VertexSet f : facets_)
        s = s | f;
    return s;
}

std::string SimplicialComplex::to_string() const
{
    std::string out = "n=" + std::to_string(n_) + ":";
    for (VertexSet f : facets_)
        out += " " + f.to_string();
    return out;
}

std::strong_ordering operator<=>(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.facets_.begin(), a.facets_.end(), b.facets_.begin(),
                                                  b.facets_.end());
}

std::vector<VertexSet> faces(const SimplicialComplex& complex, int q)
{
    std::vector<VertexSet> out;
    for (VertexSet f : complex.facets())
        for_each_subset_of_size(f, q, [&](VertexSet s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexSet> all_faces(const SimplicialComplex& complex)
{
    std::vector<VertexSet> out;
    for (VertexSet f : complex.facets())
        for_each_subset(f, [&](VertexSet s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& complex)
{
    std::vector<std::uint64_t> f(static_cast<std::size_t>(complex.dim_ring()) + 1, 0);
    for (VertexSet s : all_faces(complex))
        ++f[static_cast<std::size_t>(s.size())];
    return f;
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& complex)
{
    const std::vector<VertexSet> face_list = all_faces(complex);
    const std::unordered_set<VertexSet> face_set(face_list.begin(), face_list.end());
    const int n = complex.vertex_count();

    std::vector<VertexSet> out;
    for (VertexSet f : face_list) {
        for (int v = 1; v <= n; ++v) {
            if (f.contains(v))
                continue;
            const VertexSet g = f.with(v);
            // Only generate g from its largest removable vertex to avoid repeats.
            if (v < g.max_vertex() || face_set.contains(g))
                continue;
            bool minimal = true;
            for (int u : f.vertices()) {
                if (!face_set.contains(g.without(u))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal)
                out.push_back(g);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

InvariantSummary invariants(const SimplicialComplex& complex)
{
    InvariantSummary s;
    s.n = complex.vertex_count();
    s.dim_ring = complex.dim_ring();
    s.codim = s.n - s.dim_ring;
    for (VertexSet f : complex.facets())
        if (f.size() == s.dim_ring)
            ++s.multiplicity;
    s.f_vector = f_vector(complex);
    s.is_pure = complex.is_pure();
    const std::vector<VertexSet> mnf = minimal_nonfaces(complex);
    s.mu = mnf.size();
    if (!mnf.empty()) {
        s.indeg = mnf.front().size();
        s.rt = mnf.back().size();
    }
    s.bight = s.n - complex.facets().front().size();
    s.vertex_full = complex.vertex_support() == VertexSet::full(s.n);
    return s;
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex)
{
    const std::vector<VertexSet> mnf = minimal_nonfaces(complex);
    if (mnf.empty())
        throw std::invalid_argument("the Alexander dual of the full simplex is the void complex");
    const int n = complex.vertex_count();
    std::vector<VertexSet> facets;
    facets.reserve(mnf.size());
    for (VertexSet g : mnf)
        facets.push_back(g.complement(n));
    return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex link(const SimplicialComplex& complex, VertexSet face)
{
    if (!complex.contains(face))
        throw std::invalid_argument("link: " + face.to_string() + " is not a face");
    std::vector<VertexSet> out;
    for (VertexSet f : complex.facets())
        if (face.is_subset_of(f))
            out.push_back(f - face);
    return SimplicialComplex::from_facets(complex.vertex_count(), out);
}

SimplicialComplex star(const SimplicialComplex& complex, VertexSet face)
{
    if (!complex.contains(face))
        throw std::invalid_argument("star: " + face.to_string() + " is not a face");
    std::vector<VertexSet> out;
    for (VertexSet f : complex.facets())
        if (face.is_subset_of(f))
            out.push_back(f);
    return SimplicialComplex::from_facets(complex.vertex_count(), out);
}

SimplicialComplex restriction(const SimplicialComplex& complex, VertexSet subset)
{
    if (!subset.is_subset_of(VertexSet::full(complex.vertex_count())))
        throw std::invalid_argument("restriction: " + subset.to_string() + " is not a subset of [n]");
    std::vector<VertexSet> out;
    out.reserve(complex.facets().size());
    for (VertexSet f : complex.facets())
        out.push_back(f & subset);
    return SimplicialComplex::from_facets(complex.vertex_count(), out);
}

namespace {

// The unique facet containing g, or nullptr if zero or several do.
const VertexSet* unique_cofacet(const SimplicialComplex& complex, VertexSet g)
{
    const VertexSet* found = nullptr;
    for (const VertexSet& f : complex.facets()) {
        if (g.is_subset_of(f)) {
            if (found != nullptr)
                return nullptr;
            found = &f;
        }
    }
    return found;
}

} // namespace

std::vector<VertexSet> free_faces(const SimplicialComplex& complex)
{
    std::vector<VertexSet> out;
    const auto& fs = complex.facets();
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for_each_subset(fs[i], [&](VertexSet g) {
            if (g.empty() || g == fs[i])
                return;
            for (std::size_t j = 0; j < fs.size(); ++j)
                if (j != i && g.is_subset_of(fs[j]))
                    return;
            out.push_back(g);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex collapse(const SimplicialComplex& complex, VertexSet free_face)
{
    const VertexSet* owner = free_face.empty() ? nullptr : unique_cofacet(complex, free_face);
    if (owner == nullptr || *owner == free_face)
        throw std::invalid_argument("collapse: " + free_face.to_string() + " is not a free face");
    std::vector<VertexSet> out;
    for (const VertexSet& f : complex.facets())
        if (&f != owner)
            out.push_back(f);
    for (int v : free_face.vertices())
        out.push_back(owner->without(v));
    return SimplicialComplex::from_facets(complex.vertex_count(), out);
}

SimplicialComplex cone(const SimplicialComplex& complex, int apex)
{
    if (apex < 1 || apex > complex.vertex_count() || complex.vertex_support().contains(apex))
        throw std::invalid_argument("cone: apex must be an unused vertex of [n]");
    std::vector<VertexSet> out;
    for (VertexSet f : complex.facets())
        out.push_back(f.with(apex));
    return SimplicialComplex::from_facets(complex.vertex_count(), out);
}

} // namespace srkit
