#include "srkit/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "srkit/ring_props.hpp"

namespace srkit {

namespace {

void require_range(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

void ensure(bool ok, const std::string& what)
{
    if (!ok)
        throw std::logic_error("constructed example violates its stated invariants: " + what);
}

// "12 14 23" -> {{1,2},{1,4},{2,3}}; vertices are single digits.
std::vector<VertexSet> digit_sets(std::string_view text)
{
    std::vector<VertexSet> out;
    VertexSet current;
    for (char ch : text) {
        if (ch == ' ') {
            out.push_back(current);
            current = {};
        } else {
            current = current.with(ch - '0');
        }
    }
    out.push_back(current);
    return out;
}

struct ListedComplex {
    int first;
    int second;
    const char* sets;
};

// S_{n,e'}: triangle-free graphs keyed by (n, e').
constexpr ListedComplex kGraphs[] = {
    {4, 4, "12 14 23 34"},
    {4, 3, "12 23 34"},
    {5, 6, "12 14 23 25 34 45"},
    {5, 5, "12 14 23 34 45"},
    {6, 9, "14 15 16 24 25 26 34 35 36"},
    {6, 8, "12 14 23 25 34 36 45 56"},
    {7, 12, "15 16 17 25 26 27 35 36 37 45 46 47"},
};

// T_{d,e}: pure complexes keyed by (d, e).
constexpr ListedComplex kDuals[] = {
    {2, 2, "13 24"},
    {2, 3, "13 23 24"},
    {3, 4, "124 135 234 245"},
    {3, 5, "124 134 135 234 245"},
    {4, 6, "1234 2345 3456 1456 1256 1236"},
    {4, 7, "1235 1246 1345 1356 2345 2346 2456"},
    {5, 9, "12345 12346 12347 12567 13567 14567 23567 24567 34567"},
};

const ListedComplex& lookup(std::span<const ListedComplex> table, int a, int b, const char* what)
{
    for (const auto& entry : table)
        if (entry.first == a && entry.second == b)
            return entry;
    throw std::invalid_argument(std::string(what) + " (" + std::to_string(a) + "," + std::to_string(b) +
                                ") is not among the listed cases");
}

int param(const std::map<std::string, int>& params, const std::string& key)
{
    const auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("missing parameter '" + key + "'");
    return it->second;
}

} // namespace

std::vector<VertexSet> thm_sample_generators(int c, int d)
{
    require_range(c >= 2 && d >= 2 && c + d <= kMaxVertices, "thm-sample needs c, d >= 2 and c + d <= 64");
    std::vector<VertexSet> out;
    const VertexSet base = VertexSet::full(d);
    for (int i = 1; i <= d; ++i)
        for (int j = d + 1; j <= c + d; ++j)
            out.push_back(base.without(i).with(j));
    return out;
}

SimplicialComplex thm_sample(int c, int d, std::span<const VertexSet> chosen)
{
    const std::vector<VertexSet> gens = thm_sample_generators(c, d);
    require_range(!chosen.empty() && chosen.size() <= gens.size(), "thm-sample needs 1 <= e <= cd");
    for (VertexSet s : chosen)
        require_range(std::find(gens.begin(), gens.end(), s) != gens.end(),
                      "thm-sample: " + s.to_string() + " is not one of the F_{i,j}");
    const int n = c + d;
    std::vector<VertexSet> facets(chosen.begin(), chosen.end());
    const std::vector<VertexSet> ridges = subsets_of_size(n, d - 1);
    facets.insert(facets.end(), ridges.begin(), ridges.end());
    SimplicialComplex out = SimplicialComplex::from_facets(n, facets);
    const InvariantSummary s = invariants(out);
    std::vector<VertexSet> distinct(chosen.begin(), chosen.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    ensure(s.dim_ring == d && s.indeg == d && s.rt == d && s.multiplicity == distinct.size(),
           "thm-sample needs dim = indeg = rt = d and e = #chosen");
    return out;
}

SimplicialComplex thm_sample(int c, int d, int e)
{
    const std::vector<VertexSet> gens = thm_sample_generators(c, d);
    require_range(e >= 1 && static_cast<std::size_t>(e) <= gens.size(), "thm-sample needs 1 <= e <= cd");
    return thm_sample(c, d, std::span<const VertexSet>(gens.data(), static_cast<std::size_t>(e)));
}

SimplicialComplex exam_notlin(int d)
{
    require_range(d >= 2 && d + 2 <= kMaxVertices, "notlin needs 2 <= d <= 62");
    const int n = d + 2;
    std::vector<VertexSet> facets;
    const VertexSet all = VertexSet::full(n);
    for (int i = 1; i <= d; ++i)
        for (int j = d + 1; j <= d + 2; ++j)
            facets.push_back(all.without(i).without(j));
    const std::vector<VertexSet> ridges = subsets_of_size(n, d - 1);
    facets.insert(facets.end(), ridges.begin(), ridges.end());
    SimplicialComplex out = SimplicialComplex::from_facets(n, facets);
    const InvariantSummary s = invariants(out);
    ensure(s.dim_ring == d && s.indeg == d && s.rt == d && s.multiplicity == static_cast<std::uint64_t>(2 * d),
           "notlin needs dim = indeg = rt = d and e = 2d");
    return out;
}

SimplicialComplex exam_rt(int n, int d, int e)
{
    require_range(d >= 2 && n >= d + 2 && n <= kMaxVertices, "exam-rt needs d >= 2 and n >= d + 2");
    const std::uint64_t total = binomial(n, d);
    require_range(e >= d + 1 && static_cast<std::uint64_t>(e) <= total - 1, "exam-rt needs d+1 <= e <= C(n,d)-1");
    const VertexSet head = VertexSet::full(d + 1);
    std::vector<VertexSet> facets;
    std::vector<VertexSet> rest;
    for (VertexSet s : subsets_of_size(n, d))
        (s.is_subset_of(head) ? facets : rest).push_back(s);
    std::sort(rest.begin(), rest.end());
    facets.insert(facets.end(), rest.begin(), rest.begin() + (e - d - 1));
    const std::vector<VertexSet> ridges = subsets_of_size(n, d - 1);
    facets.insert(facets.end(), ridges.begin(), ridges.end());
    SimplicialComplex out = SimplicialComplex::from_facets(n, facets);
    const InvariantSummary s = invariants(out);
    ensure(s.dim_ring == d && s.indeg == d && s.rt == d + 1 && s.multiplicity == static_cast<std::uint64_t>(e),
           "exam-rt needs dim = indeg = d, rt = d+1 and the requested e");
    return out;
}

SimplicialComplex omake_ex(int n, int d, int rho)
{
    require_range(d >= 3 && n >= d + 1 && n <= kMaxVertices, "omake-ex needs d >= 3 and n >= d + 1");
    require_range(rho >= 0 && rho <= d - 3, "omake-ex needs 0 <= rho <= d-3");
    const VertexSet top = VertexSet::full(d);
    std::vector<VertexSet> facets{top};
    int taken = 0;
    for (VertexSet s : subsets_of_size(n, d - 1)) {
        if (taken == rho)
            break;
        if (!s.is_subset_of(top)) {
            facets.push_back(s);
            ++taken;
        }
    }
    const std::vector<VertexSet> low = subsets_of_size(n, d - 2);
    facets.insert(facets.end(), low.begin(), low.end());
    SimplicialComplex out = SimplicialComplex::from_facets(n, facets);
    const InvariantSummary s = invariants(out);
    const std::uint64_t mu = binomial(n, d - 1) - static_cast<std::uint64_t>(rho + d);
    ensure(s.dim_ring == d && s.indeg == d - 1 && s.rt == d - 1 && s.mu == mu,
           "omake-ex needs dim = d, indeg = rt = d-1 and mu = C(n,d-1) - rho - d");
    return out;
}

std::vector<std::pair<int, int>> puredual_graph_parameters()
{
    std::vector<std::pair<int, int>> out;
    for (const auto& g : kGraphs)
        out.emplace_back(g.first, g.second);
    return out;
}

std::vector<std::pair<int, int>> puredual_dual_parameters()
{
    std::vector<std::pair<int, int>> out;
    for (const auto& t : kDuals)
        out.emplace_back(t.first, t.second);
    return out;
}

SimplicialComplex puredual_graph(int n, int edges)
{
    const ListedComplex& entry = lookup(kGraphs, n, edges, "puredual-S");
    const std::vector<VertexSet> facets = digit_sets(entry.sets);
    SimplicialComplex out = SimplicialComplex::from_facets(n, facets);
    const InvariantSummary s = invariants(out);
    ensure(s.dim_ring == 2 && s.vertex_full && s.rt == 2 && s.multiplicity == static_cast<std::uint64_t>(edges) &&
               is_connected(out),
           "puredual-S needs a connected vertex-full graph with rt = 2 and e' edges");
    return out;
}

SimplicialComplex puredual_dual(int d, int e)
{
    const ListedComplex& entry = lookup(kDuals, d, e, "puredual-T");
    const std::vector<VertexSet> facets = digit_sets(entry.sets);
    return SimplicialComplex::from_facets(d + 2, facets);
}

bool puredual_dual_as_stated(const SimplicialComplex& t, int d, int e)
{
    const InvariantSummary s = invariants(t);
    return s.is_pure && s.dim_ring == d && s.indeg == d && s.multiplicity == static_cast<std::uint64_t>(e);
}

SimplicialComplex bbm_pure_complex()
{
    return SimplicialComplex::from_facets(5, digit_sets("124 134 135 235 245"));
}

std::vector<std::string> example_ids()
{
    return {"thm-sample", "notlin", "exam-rt", "omake-ex", "puredual-S", "puredual-T", "bbm-pure"};
}

SimplicialComplex build_example(std::string_view id, const std::map<std::string, int>& params)
{
    if (id == "thm-sample")
        return thm_sample(param(params, "c"), param(params, "d"), param(params, "e"));
    if (id == "notlin")
        return exam_notlin(param(params, "d"));
    if (id == "exam-rt")
        return exam_rt(param(params, "n"), param(params, "d"), param(params, "e"));
    if (id == "omake-ex")
        return omake_ex(param(params, "n"), param(params, "d"), param(params, "rho"));
    if (id == "puredual-S")
        return puredual_graph(param(params, "n"), param(params, "e"));
    if (id == "puredual-T") {
        const int d = param(params, "d");
        const int e = param(params, "e");
        SimplicialComplex out = puredual_dual(d, e);
        ensure(puredual_dual_as_stated(out, d, e), "puredual-T needs a pure complex with dim = indeg = d and e facets");
        return out;
    }
    if (id == "bbm-pure")
        return bbm_pure_complex();
    throw std::invalid_argument("unknown example '" + std::string(id) + "'");
}

} // namespace srkit
