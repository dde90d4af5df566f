#include "srkit/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "srkit/canonical.hpp"
#include "srkit/errors.hpp"
#include "srkit/families.hpp"
#include "srkit/homology.hpp"
#include "srkit/io.hpp"
#include "srkit/parallel.hpp"
#include "srkit/ring_props.hpp"

namespace srkit {

namespace {

using Detail = std::optional<std::string>;

std::int64_t binom(int n, int k)
{
    return static_cast<std::int64_t>(binomial(n, k));
}

std::optional<std::uint64_t> lower_bound_from(std::int64_t bound)
{
    if (bound <= 1)
        return std::nullopt;
    return static_cast<std::uint64_t>(bound);
}

std::string str(std::int64_t v)
{
    return std::to_string(v);
}

EnumFilter base_filter(int n, int d)
{
    EnumFilter f;
    f.n = n;
    f.require_vertex_full = true;
    f.dim_ring = d;
    f.up_to_iso = true;
    return f;
}

Detail cm_failure(const SimplicialComplex& c, FieldSpec field)
{
    if (!c.is_pure())
        return "not pure, hence not Cohen-Macaulay";
    if (const auto w = cm_witness(c, field))
        return "not Cohen-Macaulay: H~_" + std::to_string(w->index) + "(link of " + w->face.to_string() + ") != 0";
    return std::nullopt;
}

bool linear_in_degree(const SimplicialComplex& c, FieldSpec field, int q)
{
    const LinearityResult r = has_linear_resolution(c, field);
    return r.linear && r.degree == q;
}

std::uint64_t restricted_multiplicity(const SimplicialComplex& c, VertexSet w)
{
    return invariants(restriction(c, w)).multiplicity;
}

// First failing check wins; checks run lazily in order.
template <typename... Checks>
Detail first_of(Checks&&... checks)
{
    Detail out;
    ((out ? void() : void(out = checks())), ...);
    return out;
}

std::string describe_facets(const SimplicialComplex& c)
{
    std::string out = "{";
    for (VertexSet f : c.facets())
        out += (out.size() > 1 ? "," : "") + f.to_string().substr(1, f.to_string().size() - 2);
    return out + "}";
}

std::string pair_text(int a, int b)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// ------------------------------------------------------------- catalog

std::mutex& catalog_mutex()
{
    static std::mutex m;
    return m;
}

std::map<int, std::unique_ptr<std::vector<CatalogEntry>>>& catalog_store()
{
    static std::map<int, std::unique_ptr<std::vector<CatalogEntry>>> store;
    return store;
}

// ------------------------------------------------------------ generic sweep

void sweep_region(ClaimContext& ctx)
{
    for (int n = ctx.n_min; n <= ctx.n_max && !ctx.failed(); ++n)
        for (int d = ctx.d_min; d <= std::min(ctx.d_max, n) && !ctx.failed(); ++d)
            ctx.check_all(ctx.region(n, d), ctx.claim.conclusion);
}

ComplexCheck compose_refutes(std::function<std::optional<EnumFilter>(int, int)> hypothesis,
                             std::function<bool(const SimplicialComplex&)> extra, ComplexCheck conclusion)
{
    return [=](const SimplicialComplex& c, FieldSpec field) -> Detail {
        const auto filter = hypothesis(c.vertex_count(), c.dim_ring());
        if (!filter || !admits(*filter, c))
            return std::nullopt;
        if (extra && !extra(c))
            return std::nullopt;
        return conclusion(c, field);
    };
}

bool not_full_simplex(const SimplicialComplex& c)
{
    return !c.is_full_simplex();
}

// ------------------------------------------------------------ thm-main1 etc.

std::optional<EnumFilter> main1_region(int n, int d)
{
    if (d < 2 || d > n)
        return std::nullopt;
    EnumFilter f = base_filter(n, d);
    f.e_min = lower_bound_from(binom(n, n - d) - (n - d));
    return f;
}

std::optional<EnumFilter> main2_region(int n, int d, bool pure)
{
    if (d < 2 || d > n)
        return std::nullopt;
    EnumFilter f = base_filter(n, d);
    const int c = n - d;
    f.e_min = lower_bound_from(binom(n, c) - 2 * c + 1);
    if (pure)
        f.pure = true;
    return f;
}

Detail indeg_at_least(const SimplicialComplex& c, int bound)
{
    const int indeg = invariants(c).indeg;
    if (indeg >= bound)
        return std::nullopt;
    return "indeg = " + std::to_string(indeg) + " < " + std::to_string(bound);
}

Detail indeghigh_conclusion(const SimplicialComplex& c, FieldSpec field)
{
    const InvariantSummary s = invariants(c);
    const int d = s.dim_ring;
    const bool b1 = s.indeg == d + 1;
    const bool b2 = s.multiplicity == binomial(s.n, d);
    std::vector<VertexSet> all = subsets_of_size(s.n, d + 1);
    std::vector<VertexSet> gens = minimal_nonfaces(c);
    std::sort(all.begin(), all.end());
    std::sort(gens.begin(), gens.end());
    const bool b3 = gens == all;
    const bool b4 = linear_in_degree(c, field, d + 1);
    if (!(b1 == b2 && b2 == b3 && b3 == b4))
        return std::string("conditions disagree: indeg = d+1 is ") + (b1 ? "true" : "false") + ", e = C(n,d) is " +
               (b2 ? "true" : "false") + ", I = all (d+1)-sets is " + (b3 ? "true" : "false") +
               ", (d+1)-linear is " + (b4 ? "true" : "false");
    if (b1) {
        if (auto f = cm_failure(c, field))
            return "conditions hold but " + *f;
        if (s.rt != d + 1)
            return "conditions hold but rt = " + degree_text(s.rt);
    }
    return std::nullopt;
}

Detail adual_conclusion(const SimplicialComplex& c, FieldSpec field)
{
    const InvariantSummary s = invariants(c);
    const SimplicialComplex dual = alexander_dual(c);
    const InvariantSummary sd = invariants(dual);
    if (sd.indeg == kInfiniteDegree || sd.indeg + s.dim_ring != s.n)
        return "indeg k[D*] + dim k[D] = " + degree_text(sd.indeg) + " + " + std::to_string(s.dim_ring) +
               " != n = " + std::to_string(s.n);
    if (sd.rt != s.bight)
        return "rt k[D*] = " + degree_text(sd.rt) + " but bight I_D = " + std::to_string(s.bight);
    if (s.is_pure != (sd.rt == sd.indeg))
        return std::string("D is ") + (s.is_pure ? "pure" : "not pure") + " but rt k[D*] " +
               (sd.rt == sd.indeg ? "=" : "!=") + " indeg k[D*]";
    HochsterOptions opts;
    opts.max_j = sd.indeg;
    const BettiTable table = hochster_betti(dual, field, opts);
    if (table.at(1, sd.indeg) != s.multiplicity)
        return "beta_{0,q*}(I_D*) = " + std::to_string(table.at(1, sd.indeg)) + " but e(k[D]) = " +
               std::to_string(s.multiplicity);
    if (alexander_dual(dual) != c)
        return "(D*)* != D";
    return std::nullopt;
}

Detail eagon_reiner_conclusion(const SimplicialComplex& c, FieldSpec field)
{
    const bool cm = cohen_macaulay(c, field);
    const bool linear = has_linear_resolution(alexander_dual(c), field).linear;
    if (cm == linear)
        return std::nullopt;
    return std::string("k[D] is ") + (cm ? "" : "not ") + "Cohen-Macaulay but k[D*] " +
           (linear ? "has" : "does not have") + " a linear resolution";
}

std::optional<EnumFilter> skeleton_region(int n, int d)
{
    if (d < 2 || d >= n)
        return std::nullopt;
    EnumFilter f = base_filter(n, d);
    f.indeg_exact = d;
    return f;
}

Detail ad_main1_conclusion(const SimplicialComplex& c, FieldSpec field)
{
    const int d = c.dim_ring();
    if (!linear_in_degree(c, field, d))
        return "no " + std::to_string(d) + "-linear resolution (reg = " + std::to_string(regularity(c, field)) + ")";
    const int rt = invariants(c).rt;
    if (rt != d)
        return "rt = " + degree_text(rt) + " != d";
    return std::nullopt;
}

Detail ad_main2_conclusion(const SimplicialComplex& c, FieldSpec field)
{
    const int d = c.dim_ring();
    if (!linear_in_degree(c, field, d))
        return "no " + std::to_string(d) + "-linear resolution (reg = " + std::to_string(regularity(c, field)) + ")";
    if (!a_invariant_negative(c, field))
        return "H~_{d-1} != 0, so a(A) >= 0";
    return std::nullopt;
}

// Exam-rt at e = d+1: rt = d+1 and no d-linear resolution.
Detail rt_companion_failure(const SimplicialComplex& c, FieldSpec field)
{
    const InvariantSummary s = invariants(c);
    const int d = s.dim_ring;
    if (s.indeg != d || s.rt != d + 1)
        return "sharpness witness at e = d+1 has indeg = " + degree_text(s.indeg) + ", rt = " + degree_text(s.rt);
    if (linear_in_degree(c, field, d))
        return "sharpness witness at e = d+1 has a d-linear resolution";
    return std::nullopt;
}

Detail notlin_failure(const SimplicialComplex& c, FieldSpec field)
{
    const InvariantSummary s = invariants(c);
    const int d = s.dim_ring;
    std::vector<VertexSet> stated{VertexSet::full(d)};
    const VertexSet tail = VertexSet::singleton(d + 1).with(d + 2);
    for (VertexSet sub : subsets_of_size(d, d - 2))
        stated.push_back(sub | tail);
    std::vector<VertexSet> gens = minimal_nonfaces(c);
    std::sort(stated.begin(), stated.end());
    std::sort(gens.begin(), gens.end());
    if (gens != stated)
        return std::string("minimal nonfaces differ from (x_1...x_d) + (x_S x_{d+1} x_{d+2} : |S| = d-2)");
    if (s.multiplicity != static_cast<std::uint64_t>(2 * d) || s.indeg != d || s.rt != d)
        return "e = " + std::to_string(s.multiplicity) + ", indeg = " + degree_text(s.indeg) +
               ", rt = " + degree_text(s.rt);
    const int reg = regularity(c, field);
    if (reg != d)
        return "reg = " + std::to_string(reg) + " != d";
    if (top_homology_vanishes(c, field))
        return "H~_{d-1} = 0";
    if (linear_in_degree(c, field, d))
        return "has a d-linear resolution";
    return std::nullopt;
}

bool is_notlin(const SimplicialComplex& c)
{
    const int d = c.dim_ring();
    return d >= 2 && c.vertex_count() == d + 2 && c == exam_notlin(d);
}

bool is_rt_companion(const SimplicialComplex& c)
{
    const int n = c.vertex_count();
    const int d = c.dim_ring();
    return d >= 2 && n >= d + 2 && c == exam_rt(n, d, d + 1);
}

// ------------------------------------------------------------------ key

std::optional<EnumFilter> key_region(int n, int d)
{
    if (d < 2 || d > n)
        return std::nullopt;
    EnumFilter f = base_filter(n, d);
    f.rt_max = d;
    f.e_max = static_cast<std::uint64_t>(2 * d - 1);
    return f;
}

Detail key_conclusion(const SimplicialComplex& c, FieldSpec field)
{
    const int d = c.dim_ring();
    const int reg = regularity(c, field);
    const bool top = top_homology_vanishes(c, field);
    if (reg > d - 1 && !top)
        return "reg = " + std::to_string(reg) + " > d-1 and H~_{d-1} != 0";
    if (reg > d - 1)
        return "reg = " + std::to_string(reg) + " > d-1";
    if (!top)
        return std::string("H~_{d-1} != 0");
    return std::nullopt;
}

Detail key_equivalence(const SimplicialComplex& c, FieldSpec field)
{
    const int d = c.dim_ring();
    const bool reg_ok = regularity(c, field) <= d - 1;
    const bool top = top_homology_vanishes(c, field);
    if (reg_ok == top)
        return std::nullopt;
    return std::string("reg <= d-1 is ") + (reg_ok ? "true" : "false") + " but H~_{d-1} = 0 is " +
           (top ? "true" : "false");
}

// ---------------------------------------------------------------- omake

std::optional<EnumFilter> omake_region(int n, int d)
{
    if (d < 2 || d > n)
        return std::nullopt;
    EnumFilter f = base_filter(n, d);
    f.indeg_exact = d - 1;
    f.rt_exact = d - 1;
    return f;
}

bool omake_mu_bound(const SimplicialComplex& c)
{
    const InvariantSummary s = invariants(c);
    return static_cast<std::int64_t>(s.mu) >= binom(s.n, s.dim_ring - 1) - 2 * s.dim_ring + 3;
}

Detail omake_conclusion(const SimplicialComplex& c, FieldSpec field)
{
    const int d = c.dim_ring();
    if (!linear_in_degree(c, field, d - 1))
        return "no (d-1)-linear resolution (reg = " + std::to_string(regularity(c, field)) + ")";
    const std::uint64_t e = invariants(c).multiplicity;
    if (e != 1)
        return "e = " + std::to_string(e) + " != 1";
    return std::nullopt;
}

Detail omake_example_failure(const SimplicialComplex& c, FieldSpec field, int rho)
{
    const InvariantSummary s = invariants(c);
    const int n = s.n;
    const int d = s.dim_ring;
    const std::int64_t mu = binom(n, d - 1) - rho - d;
    if (static_cast<std::int64_t>(s.mu) != mu)
        return "mu = " + std::to_string(s.mu) + " but C(n,d-1) - rho - d = " + str(mu);
    if (s.indeg != d - 1 || s.rt != d - 1)
        return "indeg = " + degree_text(s.indeg) + ", rt = " + degree_text(s.rt) + " (stated d-1)";
    if (!omake_mu_bound(c))
        return std::string("mu below C(n,d-1) - 2d + 3");
    return omake_conclusion(c, field);
}

// ------------------------------------------------------------------ bbm

std::optional<EnumFilter> bbm_region(int n, int d)
{
    if (d < 3 || d >= n)
        return std::nullopt;
    EnumFilter f = base_filter(n, d);
    f.indeg_exact = d;
    f.pure = true;
    const int c = n - d;
    f.e_min = lower_bound_from(binom(n, c) - 2 * c);
    return f;
}

// height [I_Δ]_d S >= 2: no vertex lies in every missing d-set.
bool degree_d_height_two(const SimplicialComplex& c, int d)
{
    VertexSet common = VertexSet::full(c.vertex_count());
    bool any = false;
    for (VertexSet g : minimal_nonfaces(c))
        if (g.size() == d) {
            common = common & g;
            any = true;
        }
    return any && common.empty();
}

Detail bbm_conclusion(const SimplicialComplex& c, FieldSpec field)
{
    const InvariantSummary s = invariants(c);
    const int n = s.n;
    const int d = s.dim_ring;
    const int cc = n - d;
    const std::int64_t link_bound = binom(n - 1, cc) - 2 * cc;
    for (int i = 1; i <= n; ++i) {
        const std::uint64_t e = invariants(link(c, VertexSet::singleton(i))).multiplicity;
        if (static_cast<std::int64_t>(e) < link_bound)
            return "e(link {" + std::to_string(i) + "}) = " + std::to_string(e) + " < C(n-1,c) - 2c = " +
                   str(link_bound);
    }
    const bool height_two = degree_d_height_two(c, d);
    if ((height_two || s.rt == d) && !is_buchsbaum(c, field))
        return std::string(height_two ? "height [I]_d S >= 2" : "rt = d") + " but not Buchsbaum";
    return std::nullopt;
}

// ----------------------------------------------------------- pure vertex

Detail purevertex_conclusion(const SimplicialComplex& c, FieldSpec)
{
    const VertexSet all = VertexSet::full(c.vertex_count());
    for (int i = 1; i <= c.vertex_count(); ++i)
        if (restricted_multiplicity(c, all.without(i)) >= 2)
            return std::nullopt;
    return std::string("e(k[D_{V-i}]) <= 1 for every vertex i");
}

bool not_hypersurface(const SimplicialComplex& c)
{
    return !is_hypersurface(c);
}

// --------------------------------------------------------- thm-sample

struct SampleShape {
    int c = 0;
    int d = 0;
};

// Recognizes Δ spanned by some F_{i,j} and all (d-1)-subsets of [n].
std::optional<SampleShape> thm_sample_shape(const SimplicialComplex& complex)
{
    const int n = complex.vertex_count();
    const int d = complex.dim_ring();
    const int c = n - d;
    if (c < 2 || d < 2)
        return std::nullopt;
    const std::vector<VertexSet> gens = thm_sample_generators(c, d);
    for (VertexSet f : complex.facets()) {
        if (f.size() == d) {
            if (std::find(gens.begin(), gens.end(), f) == gens.end())
                return std::nullopt;
        } else if (f.size() != d - 1) {
            return std::nullopt;
        }
    }
    if (faces(complex, d - 1).size() != binomial(n, d - 1))
        return std::nullopt;
    return SampleShape{c, d};
}

Detail thm_sample_failure(const SimplicialComplex& complex, FieldSpec field)
{
    const InvariantSummary s = invariants(complex);
    const int n = s.n;
    const int d = s.dim_ring;
    const int c = n - d;
    const auto e = static_cast<int>(s.multiplicity);
    if (s.indeg != d || s.rt != d)
        return "indeg = " + degree_text(s.indeg) + ", rt = " + degree_text(s.rt) + " (stated d)";
    if (e < 1 || e > c * d)
        return "e = " + std::to_string(e) + " outside 1..cd";
    if (e <= 2 * d - 1) {
        if (!linear_in_degree(complex, field, d))
            return std::string("e <= 2d-1 but no d-linear resolution");
        const SimplicialComplex dual = alexander_dual(complex);
        const InvariantSummary sd = invariants(dual);
        if (!sd.is_pure)
            return std::string("Alexander dual is not pure");
        const std::int64_t bound = binom(n, sd.codim) - 2 * sd.codim + 1;
        if (static_cast<std::int64_t>(sd.multiplicity) < bound)
            return "Alexander dual has e = " + std::to_string(sd.multiplicity) + " < C(n,c*) - 2c* + 1 = " +
                   str(bound);
        if (auto f = cm_failure(dual, field))
            return "Alexander dual: " + *f;
    }
    if (c == 2 && e == 2 * d && !is_isomorphic(complex, exam_notlin(d)))
        return std::string("c = 2, e = 2d but not isomorphic to the notlin complex");
    return std::nullopt;
}

SimplicialComplex join_boundary_with_points(int c, int d)
{
    std::vector<VertexSet> facets;
    for (VertexSet a : subsets_of_size(d, d - 1))
        for (int j = d + 1; j <= c + d; ++j)
            facets.push_back(a.with(j));
    return SimplicialComplex::from_facets(c + d, facets);
}

void run_thm_sample(ClaimContext& ctx)
{
    for (int n = std::max(4, ctx.n_min); n <= ctx.n_max && !ctx.failed(); ++n) {
        for (int d = std::max(2, ctx.d_min); d <= std::min(ctx.d_max, n - 2) && !ctx.failed(); ++d) {
            const int c = n - d;
            const std::vector<VertexSet> gens = thm_sample_generators(c, d);
            if (gens.size() > 20)
                throw GuardError("thm-sample: 2^" + std::to_string(gens.size()) + " generator subsets at c = " +
                                 std::to_string(c) + ", d = " + std::to_string(d));
            const SimplicialComplex spanned = SimplicialComplex::from_facets(n, gens);
            if (spanned != join_boundary_with_points(c, d)) {
                ctx.fail(&spanned, std::nullopt, "span of the F_{i,j} is not the join of the boundary of [d] with c points");
                return;
            }
            std::map<SimplicialComplex, SimplicialComplex> classes;
            const std::uint64_t count = std::uint64_t{1} << gens.size();
            for (std::uint64_t mask = 1; mask < count; ++mask) {
                std::vector<VertexSet> chosen;
                for (std::size_t b = 0; b < gens.size(); ++b)
                    if ((mask >> b) & 1U)
                        chosen.push_back(gens[b]);
                SimplicialComplex complex = thm_sample(c, d, chosen);
                classes.try_emplace(canonical_form(complex), std::move(complex));
            }
            std::vector<SimplicialComplex> reps;
            for (auto& [key, rep] : classes)
                reps.push_back(rep);
            ctx.check_all(reps, thm_sample_failure);
        }
    }
}

// ----------------------------------------------------------- examples

void run_notlin(ClaimContext& ctx)
{
    std::vector<SimplicialComplex> list;
    for (int d = std::max(2, ctx.d_min); d <= ctx.d_max; ++d)
        list.push_back(exam_notlin(d));
    ctx.check_all(list, notlin_failure);
}

Detail exam_rt_failure(const SimplicialComplex& c, FieldSpec field)
{
    const InvariantSummary s = invariants(c);
    const int d = s.dim_ring;
    if (s.indeg != d || s.rt != d + 1)
        return "indeg = " + degree_text(s.indeg) + ", rt = " + degree_text(s.rt) + " (stated d, d+1)";
    if (linear_in_degree(c, field, d))
        return std::string("has a d-linear resolution");
    return std::nullopt;
}

void run_exam_rt(ClaimContext& ctx)
{
    for (int n = std::max(4, ctx.n_min); n <= ctx.n_max && !ctx.failed(); ++n) {
        for (int d = std::max(2, ctx.d_min); d <= std::min(ctx.d_max, n - 2) && !ctx.failed(); ++d) {
            std::vector<SimplicialComplex> list;
            const auto top = static_cast<int>(binomial(n, d)) - 1;
            for (int e = d + 1; e <= top; ++e)
                list.push_back(exam_rt(n, d, e));
            ctx.check_all(list, exam_rt_failure);
        }
    }
}

std::optional<int> omake_rho(const SimplicialComplex& c)
{
    const int n = c.vertex_count();
    const int d = c.dim_ring();
    if (d < 3 || n < d + 1)
        return std::nullopt;
    for (int rho = 0; rho <= d - 3; ++rho)
        if (c == omake_ex(n, d, rho))
            return rho;
    return std::nullopt;
}

void run_omake_example(ClaimContext& ctx)
{
    for (int d = std::max(3, ctx.d_min); d <= ctx.d_max && !ctx.failed(); ++d) {
        for (int n = std::max(d + 1, ctx.n_min); n <= ctx.n_max && !ctx.failed(); ++n) {
            std::vector<SimplicialComplex> list;
            for (int rho = 0; rho <= d - 3; ++rho)
                list.push_back(omake_ex(n, d, rho));
            ctx.check_all(list, [](const SimplicialComplex& c, FieldSpec field) {
                return omake_example_failure(c, field, *omake_rho(c));
            });
        }
    }
}

// ------------------------------------------------------------ rem-turan

std::uint64_t turan_formula_f2(int n)
{
    // n^2/4 + 1 for even n, (n^2-1)/4 + 1 for odd n.
    const auto sq = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    return (n % 2 == 0 ? sq / 4 : (sq - 1) / 4) + 1;
}

Detail turan_refutes(const SimplicialComplex& c, FieldSpec)
{
    const InvariantSummary s = invariants(c);
    const int n = s.n;
    const int d = s.dim_ring;
    if (d < 2 || s.indeg != d || s.rt != d)
        return std::nullopt;
    if (d == 2 && s.multiplicity >= turan_formula_f2(n))
        return "rt = 2 with e = " + std::to_string(s.multiplicity) + " >= n^2/4-formula value " +
               std::to_string(turan_formula_f2(n));
    if (binomial(n, d) > 64)
        return std::nullopt;
    const TuranRecord t = turan(n, d + 1, d);
    if (s.multiplicity >= t.f_from_identity())
        return "rt = d with e = " + std::to_string(s.multiplicity) + " >= C(n,d) - T(n,d+1,d) = " +
               std::to_string(binomial(n, d)) + " - " + std::to_string(t.turan_number);
    return std::nullopt;
}

void run_turan(ClaimContext& ctx)
{
    for (int d = std::max(2, ctx.d_min); d <= ctx.d_max; ++d) {
        for (int n = std::max(d + 1, ctx.n_min); n <= ctx.n_max; ++n) {
            if (binomial(n, d) > 64)
                continue;
            EnumFilter f = base_filter(n, d);
            f.indeg_exact = d;
            f.rt_max = d;
            std::vector<SimplicialComplex> with_rt_d;
            try {
                with_rt_d = enumerate_complexes(f, ctx.enum_options);
            } catch (const GuardError&) {
                ctx.note(pair_text(n, d) + ": not enumerated, search space above the bound");
                continue;
            }
            ctx.report.checked += with_rt_d.size();
            std::set<std::uint64_t> realized;
            const SimplicialComplex* extremal = nullptr;
            for (const auto& c : with_rt_d) {
                const std::uint64_t e = invariants(c).multiplicity;
                realized.insert(e);
                if (extremal == nullptr || e > invariants(*extremal).multiplicity)
                    extremal = &c;
            }
            if (extremal == nullptr) {
                ctx.fail(nullptr, std::nullopt, "no complex with rt = d at " + pair_text(n, d));
                continue;
            }
            const std::uint64_t f_emp = invariants(*extremal).multiplicity + 1;
            const TuranRecord t = turan(n, d + 1, d);
            const int c = n - d;
            std::string line = "f" + pair_text(n, d) + " = " + std::to_string(f_emp) + ", C(n,d) - T(n,d+1,d) = " +
                               std::to_string(t.f_from_identity());
            if (d == 2)
                line += ", n^2/4-formula = " + std::to_string(turan_formula_f2(n));
            ctx.note(line);
            if (n >= d + 2 && f_emp < static_cast<std::uint64_t>(c * d + 1))
                ctx.fail(extremal, std::nullopt, "f" + pair_text(n, d) + " = " + std::to_string(f_emp) + " < cd + 1");
            for (std::uint64_t e = static_cast<std::uint64_t>(d) + 1; e < f_emp; ++e)
                if (!realized.contains(e))
                    ctx.fail(nullptr, std::nullopt, "no complex with rt = d and e = " + std::to_string(e));
            if (d == 2 && f_emp != turan_formula_f2(n))
                ctx.fail(extremal, std::nullopt, "f(" + std::to_string(n) + ",2) = " + std::to_string(f_emp) +
                                                     " differs from the n^2/4 formula value " +
                                                     std::to_string(turan_formula_f2(n)));
            if (f_emp != t.f_from_identity())
                ctx.fail(extremal, std::nullopt,
                         "f" + pair_text(n, d) + " = " + std::to_string(f_emp) + " but C(n,d) - T(n,d+1,d) = " +
                             std::to_string(binomial(n, d)) + " - " + std::to_string(t.turan_number) + " = " +
                             std::to_string(t.f_from_identity()) + "; this complex has rt = d and e = " +
                             std::to_string(f_emp - 1));
        }
    }
}

// ------------------------------------------------------------ prop-pure

const std::set<std::pair<int, int>>& pure_pairs()
{
    static const std::set<std::pair<int, int>> pairs{{2, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {4, 7}, {5, 9}};
    return pairs;
}

// Largest n with C(n, d-1) <= d(2d-1): beyond it the (d-1)-sets cannot all
// lie in at most 2d-1 facets of size d.
int pure_vertex_cap(int d)
{
    int n = d + 1;
    while (n < kMaxVertices && binom(n + 1, d - 1) <= static_cast<std::int64_t>(d) * (2 * d - 1))
        ++n;
    return n;
}

std::optional<EnumFilter> pure_region(int n, int d)
{
    if (d < 2 || d >= n)
        return std::nullopt;
    EnumFilter f = base_filter(n, d);
    f.indeg_exact = d;
    f.pure = true;
    f.e_max = static_cast<std::uint64_t>(2 * d - 1);
    return f;
}

Detail pure_refutes(const SimplicialComplex& c, FieldSpec)
{
    const InvariantSummary s = invariants(c);
    const int d = s.dim_ring;
    if (d < 2 || s.n < d + 2 || !s.is_pure || s.indeg != d || s.multiplicity > static_cast<std::uint64_t>(2 * d - 1))
        return std::nullopt;
    const int e = static_cast<int>(s.multiplicity);
    if (s.n == d + 2 && d <= 5 && pure_pairs().contains({d, e}))
        return std::nullopt;
    return "pure, indeg = d = " + std::to_string(d) + ", e = " + std::to_string(e) + " <= 2d-1 on n = " +
           std::to_string(s.n) + ", outside (n = d+2 and (d,e) listed)";
}

void run_pure(ClaimContext& ctx)
{
    std::set<std::pair<int, int>> found;
    for (int d = std::max(2, ctx.d_min); d <= ctx.d_max; ++d) {
        const int cap = std::min(ctx.n_max, pure_vertex_cap(d));
        std::vector<std::string> sizes;
        for (int n = std::max(d + 2, ctx.n_min); n <= cap; ++n) {
            const std::vector<SimplicialComplex> list = enumerate_complexes(*pure_region(n, d), ctx.enum_options);
            ctx.report.checked += list.size();
            sizes.push_back("n=" + std::to_string(n) + ": " + std::to_string(list.size()));
            for (const auto& c : list) {
                found.insert({d, static_cast<int>(invariants(c).multiplicity)});
                if (auto why = pure_refutes(c, kGF2))
                    ctx.fail(&c, std::nullopt, *why);
            }
        }
        ctx.note("d = " + std::to_string(d) + " (n <= " + std::to_string(pure_vertex_cap(d)) +
                 " by the covering bound): " + (sizes.empty() ? std::string("not swept") : [&] {
                     std::string out;
                     for (const auto& s : sizes)
                         out += (out.empty() ? "" : ", ") + s;
                     return out;
                 }()));
    }
    std::string pairs;
    for (const auto& [d, e] : found)
        pairs += (pairs.empty() ? "" : " ") + pair_text(d, e);
    ctx.note("(d,e) pairs realized: " + (pairs.empty() ? std::string("none") : pairs));
    for (const auto& [d, e] : pure_pairs())
        if (d >= ctx.d_min && d <= ctx.d_max && !found.contains({d, e}))
            ctx.fail(nullptr, std::nullopt, "listed pair " + pair_text(d, e) + " has no witness");
}

// ----------------------------------------------------------- puredual

std::uint64_t turan_graph_edges(int n)
{
    return turan_formula_f2(n) - 1;
}

SimplicialComplex balanced_bipartite(int n)
{
    std::vector<VertexSet> edges;
    const int half = n / 2;
    for (int a = 1; a <= half; ++a)
        for (int b = half + 1; b <= n; ++b)
            edges.push_back(VertexSet::singleton(a).with(b));
    return SimplicialComplex::from_facets(n, edges);
}

Detail graph_failure(const SimplicialComplex& s, FieldSpec field, int edges)
{
    const InvariantSummary inv = invariants(s);
    if (inv.dim_ring != 2 || inv.rt != 2 || inv.multiplicity != static_cast<std::uint64_t>(edges) || !is_connected(s))
        return std::string("S is not a connected graph with rt = 2 and e' edges");
    if (auto f = cm_failure(s, field))
        return "S: " + *f;
    if (static_cast<std::uint64_t>(edges) == turan_graph_edges(inv.n) && !is_isomorphic(s, balanced_bipartite(inv.n)))
        return std::string("e' = f(n,2)-1 but S is not the balanced complete bipartite graph");
    return std::nullopt;
}

Detail dual_failure(const SimplicialComplex& t, int n, int edges)
{
    const int d = n - 2;
    const auto e = static_cast<int>(binomial(n, 2)) - edges;
    if (!puredual_dual_as_stated(t, d, e)) {
        const InvariantSummary s = invariants(t);
        return "listed T_{" + std::to_string(d) + "," + std::to_string(e) + "} has pure = " +
               (s.is_pure ? "yes" : "no") + ", dim = " + std::to_string(s.dim_ring) +
               ", indeg = " + degree_text(s.indeg) + ", e = " + std::to_string(s.multiplicity) +
               " (stated: pure, dim = indeg = " + std::to_string(d) + ", e = " + std::to_string(e) + ")";
    }
    if (!is_isomorphic(alexander_dual(puredual_graph(n, edges)), t))
        return "alexander_dual(S_{" + std::to_string(n) + "," + std::to_string(edges) + "}) is not isomorphic to T_{" +
               std::to_string(d) + "," + std::to_string(e) + "}";
    return std::nullopt;
}

Detail puredual_refutes(const SimplicialComplex& c, FieldSpec field)
{
    for (const auto& [n, edges] : puredual_graph_parameters()) {
        if (c.vertex_count() != n)
            continue;
        if (c == puredual_graph(n, edges))
            return graph_failure(c, field, edges);
        const int d = n - 2;
        if (c == puredual_dual(d, static_cast<int>(binomial(n, 2)) - edges))
            return dual_failure(c, n, edges);
    }
    return std::nullopt;
}

void run_puredual(ClaimContext& ctx)
{
    int listed = 0;
    std::vector<std::string> mismatched;
    for (const auto& [n, edges] : puredual_graph_parameters()) {
        if (n < ctx.n_min || n > ctx.n_max)
            continue;
        const SimplicialComplex s = puredual_graph(n, edges);
        ctx.check_all({s}, [e = edges](const SimplicialComplex& c, FieldSpec field) { return graph_failure(c, field, e); });
        const int d = n - 2;
        const auto e = static_cast<int>(binomial(n, 2)) - edges;
        const SimplicialComplex t = puredual_dual(d, e);
        ++ctx.report.checked;
        ++listed;
        if (auto why = dual_failure(t, n, edges)) {
            mismatched.push_back("T_{" + std::to_string(d) + "," + std::to_string(e) + "}");
            ctx.fail(&t, std::nullopt, *why);
        }
    }
    std::string names;
    for (const auto& m : mismatched)
        names += " " + m;
    ctx.note(std::to_string(listed - static_cast<int>(mismatched.size())) + " of " + std::to_string(listed) +
             " listed T complexes match the duals of their S graphs" + (names.empty() ? "" : "; mismatched:" + names));
}

// -------------------------------------------------------- cor-bbm-pure

Detail bbm_pure_refutes(const SimplicialComplex& c, FieldSpec field)
{
    const InvariantSummary s = invariants(c);
    const int d = s.dim_ring;
    if (d < 3 || s.indeg != d || s.multiplicity > static_cast<std::uint64_t>(2 * d - 1) || is_hypersurface(c) ||
        !is_buchsbaum(c, field))
        return std::nullopt;
    if (d == 3 && is_isomorphic(c, bbm_pure_complex()))
        return std::nullopt;
    return "Buchsbaum, not a hypersurface, indeg = d = " + std::to_string(d) + ", e = " +
           std::to_string(s.multiplicity) + ", but not isomorphic to {124,134,135,235,245}";
}

void run_bbm_pure(ClaimContext& ctx)
{
    const SimplicialComplex model = bbm_pure_complex();
    for (FieldSpec field : ctx.fields)
        if (!is_buchsbaum(model, field) || is_hypersurface(model) || invariants(model).indeg != 3)
            ctx.fail(&model, field, "the stated complex is not a Buchsbaum non-hypersurface with indeg = 3");
    std::uint64_t hits = 0;
    for (int d = std::max(3, ctx.d_min); d <= ctx.d_max && !ctx.failed(); ++d) {
        const int cap = std::min(ctx.n_max, pure_vertex_cap(d));
        for (int n = std::max(d + 1, ctx.n_min); n <= cap && !ctx.failed(); ++n) {
            std::vector<SimplicialComplex> list;
            for (auto& c : enumerate_complexes(*pure_region(n, d), ctx.enum_options))
                if (!is_hypersurface(c))
                    list.push_back(std::move(c));
            for (const auto& c : list)
                for (FieldSpec field : ctx.fields)
                    if (is_buchsbaum(c, field)) {
                        ++hits;
                        break;
                    }
            ctx.check_all(list, bbm_pure_refutes);
        }
    }
    ctx.note("Buchsbaum non-hypersurfaces found (any swept field): " + std::to_string(hits));
    std::vector<VertexSet> triples = subsets_of_size(5, 3);
    triples.pop_back();
    const SimplicialComplex wide = SimplicialComplex::from_facets(5, triples);
    if (invariants(wide).indeg == 3 && !is_hypersurface(wide) && is_buchsbaum(wide, kGF2) &&
        !is_isomorphic(wide, model))
        ctx.note("e <= 2d-1 is read as a standing hypothesis; without it the statement fails, e.g. for " +
                 describe_facets(wide) + " (indeg = 3, e = " + std::to_string(invariants(wide).multiplicity) +
                 ", Buchsbaum, not a hypersurface)");
}

// -------------------------------------------------------- Eagon-Reiner

// Like sweep_region, but an (n, d) cell above the search bound becomes a note.
void run_guarded_sweep(ClaimContext& ctx)
{
    for (int n = ctx.n_min; n <= ctx.n_max && !ctx.failed(); ++n) {
        for (int d = ctx.d_min; d <= std::min(ctx.d_max, n) && !ctx.failed(); ++d) {
            try {
                ctx.check_all(ctx.region(n, d), ctx.claim.conclusion);
            } catch (const GuardError& e) {
                ctx.note(pair_text(n, d) + ": not enumerated, " + e.what());
            }
        }
    }
}

void run_eagon_reiner(ClaimContext& ctx)
{
    sweep_region(ctx);
    if (ctx.failed() || ctx.samples == 0)
        return;
    std::mt19937_64 rng(ctx.seed);
    std::vector<SimplicialComplex> sample;
    while (sample.size() < ctx.samples) {
        const int n = sample.size() % 2 == 0 ? 7 : 8;
        SimplicialComplex c = random_complex(n, rng, true);
        if (!c.is_full_simplex())
            sample.push_back(std::move(c));
    }
    ctx.check_all(sample, eagon_reiner_conclusion);
    ctx.note(std::to_string(ctx.samples) + " random vertex-full complexes on n in {7, 8} (seed " +
             std::to_string(ctx.seed) + ")");
}

void run_key(ClaimContext& ctx)
{
    sweep_region(ctx);
    if (ctx.failed())
        return;
    std::uint64_t total = 0;
    for (int n = ctx.n_min; n <= ctx.n_max && !ctx.failed(); ++n) {
        std::vector<SimplicialComplex> all;
        for (const auto& entry : vertex_full_catalog(n, ctx.enum_options.jobs))
            if (entry.summary.dim_ring >= std::max(2, ctx.d_min) && entry.summary.dim_ring <= ctx.d_max)
                all.push_back(entry.complex);
        total += all.size();
        const std::uint64_t before = ctx.report.checked;
        ctx.check_all(all, key_equivalence);
        ctx.report.checked = before;
    }
    ctx.note("reg <= d-1 <=> H~_{d-1} = 0 checked on all " + std::to_string(total) + " complexes in the box");
}

void run_ad_main1(ClaimContext& ctx)
{
    sweep_region(ctx);
    std::vector<SimplicialComplex> companions;
    for (int n = ctx.n_min; n <= ctx.n_max; ++n)
        for (int d = std::max(2, ctx.d_min); d <= std::min(ctx.d_max, n - 2); ++d)
            companions.push_back(exam_rt(n, d, d + 1));
    const std::uint64_t before = ctx.report.checked;
    ctx.check_all(companions, rt_companion_failure);
    ctx.report.checked = before;
    ctx.note("sharpness: " + std::to_string(companions.size()) +
             " complexes with e = d+1 and rt = d+1 lack a d-linear resolution");
}

void run_ad_main2(ClaimContext& ctx)
{
    sweep_region(ctx);
    std::vector<SimplicialComplex> companions;
    for (int d = std::max(2, ctx.d_min); d <= ctx.d_max && d + 2 <= ctx.n_max; ++d)
        companions.push_back(exam_notlin(d));
    const std::uint64_t before = ctx.report.checked;
    ctx.check_all(companions, notlin_failure);
    ctx.report.checked = before;
    ctx.note("sharpness: the notlin complex at e = 2d is not d-linear for d = " + std::to_string(std::max(2, ctx.d_min)) +
             ".." + std::to_string(std::min(ctx.d_max, ctx.n_max - 2)));
}

// -------------------------------------------------------------- registry

ClaimRecord universal(std::string id, std::string summary, Anchor anchor, SweepDefaults defaults, bool field_dependent,
                      std::function<std::optional<EnumFilter>(int, int)> hypothesis,
                      std::function<bool(const SimplicialComplex&)> extra, ComplexCheck conclusion)
{
    ClaimRecord r;
    r.id = std::move(id);
    r.statement_summary = std::move(summary);
    r.anchor = std::move(anchor);
    r.defaults = std::move(defaults);
    r.field_dependent = field_dependent;
    r.hypothesis = std::move(hypothesis);
    r.extra_hypothesis = std::move(extra);
    r.conclusion = std::move(conclusion);
    r.refutes = compose_refutes(r.hypothesis, r.extra_hypothesis, r.conclusion);
    return r;
}

ClaimRecord bespoke(std::string id, std::string summary, Anchor anchor, SweepDefaults defaults, bool field_dependent,
                    ComplexCheck refutes, std::function<void(ClaimContext&)> run)
{
    ClaimRecord r;
    r.id = std::move(id);
    r.statement_summary = std::move(summary);
    r.anchor = std::move(anchor);
    r.defaults = std::move(defaults);
    r.field_dependent = field_dependent;
    r.refutes = std::move(refutes);
    r.run = std::move(run);
    return r;
}

ComplexCheck either(ComplexCheck a, ComplexCheck b)
{
    return [=](const SimplicialComplex& c, FieldSpec field) -> Detail {
        if (auto why = a(c, field))
            return why;
        return b(c, field);
    };
}

std::vector<ClaimRecord> build_registry()
{
    const std::string general = "vertex-full, up to isomorphism";
    const std::string skeleton = "indeg = dim = d (skeleton mode), up to isomorphism";
    std::vector<ClaimRecord> r;

    r.push_back(universal("thm-main1", "d >= 2 and e >= C(n,c) - c imply Cohen-Macaulay",
                          {"Theorem Main1", "then $A$ is Cohen--Macaulay"}, {2, 6, 2, 0, 0, general}, true,
                          main1_region, nullptr, cm_failure));

    r.push_back(universal("lem-indeg", "e >= C(n,c) - c implies indeg >= d",
                          {"Lemma Indeg", "then $\\mathrm{indeg}\\, A \\ge d$"}, {2, 6, 2, 0, 0, general}, false,
                          main1_region, nullptr,
                          [](const SimplicialComplex& c, FieldSpec) { return indeg_at_least(c, c.dim_ring()); }));

    r.push_back(universal(
        "lem-indeghigh", "indeg = d+1, e = C(n,d), I = all (d+1)-sets and (d+1)-linearity coincide; then CM with rt = d+1",
        {"Lemma IndegHigh", "$A$ has $(d+1)$-linear resolution"},
        {2, 6, 2, 0, 0, general + ", full simplex excluded"}, true,
        [](int n, int d) -> std::optional<EnumFilter> {
            if (d < 2 || d > n)
                return std::nullopt;
            return base_filter(n, d);
        },
        not_full_simplex, indeghigh_conclusion));

    r.push_back(universal("lem-hyper", "n = d+1 and e >= d imply hypersurface",
                          {"Lemma Hyper", "then $A$ is a hypersurface"}, {3, 6, 2, 0, 0, general + ", n = d+1"}, false,
                          [](int n, int d) -> std::optional<EnumFilter> {
                              if (d < 2 || n != d + 1)
                                  return std::nullopt;
                              EnumFilter f = base_filter(n, d);
                              f.e_min = static_cast<std::uint64_t>(d);
                              return f;
                          },
                          nullptr, [](const SimplicialComplex& c, FieldSpec) -> Detail {
                              if (is_hypersurface(c))
                                  return std::nullopt;
                              return "not a hypersurface (" + std::to_string(minimal_nonfaces(c).size()) +
                                     " minimal nonfaces)";
                          }));

    r.push_back(universal(
        "prop-adual", "indeg D* + d = n, rt D* = bight, purity <=> rt D* = indeg D*, beta_{0,q*}(I_D*) = e, D** = D",
        {"Proposition A-dualProp", "$\\mathrm{indeg}\\, k[\\Delta^{*}]+\\dim k[\\Delta] = n$"},
        {2, 6, 2, 0, 0, general + ", full simplex excluded"}, true,
        [](int n, int d) -> std::optional<EnumFilter> {
            if (d < 2 || d > n)
                return std::nullopt;
            return base_filter(n, d);
        },
        not_full_simplex, adual_conclusion));

    {
        ClaimRecord er = universal(
            "thm-eagon-reiner", "k[D] is Cohen-Macaulay iff k[D*] has a linear resolution",
            {"Theorem Eagon-Reiner", "has linear resolution"},
            {1, 6, 1, 0, 2000, general + ", full simplex excluded, plus random complexes"}, true,
            [](int n, int d) -> std::optional<EnumFilter> {
                if (d < 1 || d > n)
                    return std::nullopt;
                return base_filter(n, d);
            },
            not_full_simplex, eagon_reiner_conclusion);
        er.run = run_eagon_reiner;
        r.push_back(std::move(er));
    }

    {
        ClaimRecord m = universal("thm-ad-main1", "indeg = d and e <= d imply d-linear resolution and rt = d",
                                  {"Theorem AD-Main1", "then $A$ has $d$-linear resolution"},
                                  {3, 7, 2, 4, 0, skeleton}, true,
                                  [](int n, int d) -> std::optional<EnumFilter> {
                                      auto f = skeleton_region(n, d);
                                      if (f)
                                          f->e_max = static_cast<std::uint64_t>(d);
                                      return f;
                                  },
                                  nullptr, ad_main1_conclusion);
        m.run = run_ad_main1;
        m.refutes = either(m.refutes, [](const SimplicialComplex& c, FieldSpec field) -> Detail {
            return is_rt_companion(c) ? rt_companion_failure(c, field) : std::nullopt;
        });
        r.push_back(std::move(m));
    }

    r.push_back(universal("thm-main2", "pure, d >= 2 and e >= C(n,c) - 2c + 1 imply Cohen-Macaulay",
                          {"Theorem Main2", "If $e(A) \\ge \\sbinom{n}{c} - 2c+1$"}, {2, 6, 2, 0, 0, general}, true,
                          [](int n, int d) { return main2_region(n, d, true); }, nullptr, cm_failure));

    r.push_back(universal("lem-indeg2", "e >= C(n,c) - 2c + 1 implies indeg >= d-1",
                          {"Lemma Indeg2", "then $\\mathrm{indeg}\\, k[\\Delta] \\ge d-1$"}, {2, 6, 2, 0, 0, general},
                          false, [](int n, int d) { return main2_region(n, d, false); }, nullptr,
                          [](const SimplicialComplex& c, FieldSpec) { return indeg_at_least(c, c.dim_ring() - 1); }));

    {
        ClaimRecord m = universal("thm-ad-main2", "indeg = rt = d and e <= 2d-1 imply d-linear resolution and a(A) < 0",
                                  {"Theorem AD-Main2", "In particular, $a(A)< 0$"}, {3, 7, 2, 4, 0, skeleton}, true,
                                  [](int n, int d) -> std::optional<EnumFilter> {
                                      auto f = skeleton_region(n, d);
                                      if (f) {
                                          f->rt_max = d;
                                          f->e_max = static_cast<std::uint64_t>(2 * d - 1);
                                      }
                                      return f;
                                  },
                                  nullptr, ad_main2_conclusion);
        m.run = run_ad_main2;
        m.refutes = either(m.refutes, [](const SimplicialComplex& c, FieldSpec field) -> Detail {
            return is_notlin(c) ? notlin_failure(c, field) : std::nullopt;
        });
        r.push_back(std::move(m));
    }

    {
        ClaimRecord k = universal("thm-key", "rt <= d and e <= 2d-1 imply reg <= d-1 and H~_{d-1} = 0",
                                  {"Theorem Key", "equivalently, $\\widetilde{H}_{d-1}(\\Delta) = 0$"},
                                  {2, 6, 2, 0, 0, general}, true, key_region, nullptr, key_conclusion);
        k.run = run_key;
        k.refutes = either(k.refutes, [](const SimplicialComplex& c, FieldSpec field) -> Detail {
            return c.dim_ring() >= 2 && c.facets().size() > 0 ? key_equivalence(c, field) : std::nullopt;
        });
        r.push_back(std::move(k));
    }

    r.push_back(universal("prop-omake", "indeg = rt = d-1 and mu >= C(n,d-1) - 2d + 3 imply (d-1)-linear with e = 1",
                          {"Proposition Omake", "has $(d-1)$-linear resolution with $e(A) =1$"},
                          {2, 6, 2, 0, 0, general}, true, omake_region, omake_mu_bound, omake_conclusion));

    r.push_back(bespoke("ex-omake", "the rho-family meets the hypotheses of prop-omake with mu = C(n,d-1) - rho - d",
                        {"Example OmakeEx", "satisfies the assumption of the above proposition"},
                        {4, 8, 3, 6, 0, "0 <= rho <= d-3"}, true,
                        [](const SimplicialComplex& c, FieldSpec field) -> Detail {
                            const auto rho = omake_rho(c);
                            return rho ? omake_example_failure(c, field, *rho) : std::nullopt;
                        },
                        run_omake_example));

    r.push_back(universal("prop-bbm",
                          "d >= 3, pure, indeg = d, e >= C(n,c) - 2c: link bound; height >= 2 or rt = d imply Buchsbaum",
                          {"Proposition Bbm", "then $A$ is Buchsbaum"}, {4, 7, 3, 0, 0, skeleton + ", pure"}, true,
                          bbm_region, nullptr, bbm_conclusion));

    r.push_back(bespoke("ex-thm-sample",
                        "every choice of F_{i,j} gives indeg = rt = d and e; e <= 2d-1 gives d-linear with CM dual",
                        {"Example Thm-sample", "which is a simplicial join"},
                        {4, 7, 2, 0, 0, "c, d >= 2, all generator subsets up to isomorphism"}, true,
                        [](const SimplicialComplex& c, FieldSpec field) -> Detail {
                            return thm_sample_shape(c) ? thm_sample_failure(c, field) : std::nullopt;
                        },
                        run_thm_sample));

    r.push_back(bespoke("ex-notlin", "the notlin complex has indeg = rt = d, e = 2d and reg = d",
                        {"Example Exam-notlin", "does not have $d$-linear resolution"}, {4, 7, 2, 5, 0, "n = d+2"},
                        true,
                        [](const SimplicialComplex& c, FieldSpec field) -> Detail {
                            return is_notlin(c) ? notlin_failure(c, field) : std::nullopt;
                        },
                        run_notlin));

    r.push_back(bespoke("ex-rt", "rt = d+1 for every e in [d+1, C(n,d)-1]",
                        {"Example Exam-rt", "$\\mathrm{rt}\\,(k[\\Delta]) = d+1$"}, {4, 6, 2, 0, 0, "n >= d+2"},
                        true,
                        [](const SimplicialComplex& c, FieldSpec field) -> Detail {
                            const InvariantSummary s = invariants(c);
                            const int n = s.n;
                            const int d = s.dim_ring;
                            const auto e = static_cast<std::int64_t>(s.multiplicity);
                            if (d < 2 || n < d + 2 || e < d + 1 || e > binom(n, d) - 1)
                                return std::nullopt;
                            if (c != exam_rt(n, d, static_cast<int>(e)))
                                return std::nullopt;
                            return exam_rt_failure(c, field);
                        },
                        run_exam_rt));

    r.push_back(bespoke("rem-turan",
                        "f(n,d) >= cd+1, f(n,2) by the n^2/4 formula, and f(n,d) = C(n,d) - T(n,d+1,d)",
                        {"Remark TuranNum", "by Turan's theorem"},
                        {4, 8, 2, 4, 0, "C(n,d) <= 64, vertex-full"}, false, turan_refutes, run_turan));

    r.push_back(bespoke("prop-pure",
                        "pure, indeg = d, e <= 2d-1 exist exactly for n = d+2 and the listed (d,e) pairs",
                        {"Proposition Pure", "is one of the following pairs"},
                        {4, 8, 2, 5, 0, "pure, c >= 2, skeleton mode, n bounded by covering"}, false, pure_refutes,
                        run_pure));

    r.push_back(universal("lem-purevertex", "pure, non-hypersurface, indeg = d >= 3: some e(D_{V-i}) >= 2",
                          {"Lemma PureVertex", "$e(k[\\Delta_{V \\setminus \\{i\\}}]) \\ge 2$"},
                          {4, 7, 3, 5, 0, skeleton + ", pure"}, false,
                          [](int n, int d) -> std::optional<EnumFilter> {
                              if (d < 3 || d >= n)
                                  return std::nullopt;
                              EnumFilter f = base_filter(n, d);
                              f.indeg_exact = d;
                              f.pure = true;
                              return f;
                          },
                          not_hypersurface, purevertex_conclusion));
    r.back().run = run_guarded_sweep;

    r.push_back(bespoke("ex-puredual", "the listed S graphs are connected CM with rt = 2; their duals are the T list",
                        {"Example PureDual", "T_{2,2} = \\{[13],[24]\\}"}, {4, 7, 2, 5, 0, "listed cases"}, true,
                        puredual_refutes, run_puredual));

    r.push_back(bespoke("cor-bbm-pure",
                        "Buchsbaum, non-hypersurface, indeg = d >= 3 (with e <= 2d-1) forces the d = 3 model",
                        {"Corollary Bbm-Pure", "spanned by $\\{[124],[134],[135],[235],[245]\\}$"},
                        {4, 8, 3, 5, 0, "pure, e <= 2d-1, n bounded by covering"}, true, bbm_pure_refutes,
                        run_bbm_pure));
    return r;
}

} // namespace

std::string to_string(Outcome outcome)
{
    switch (outcome) {
    case Outcome::Pass:
        return "PASS";
    case Outcome::Counterexample:
        return "COUNTEREXAMPLE";
    case Outcome::Skipped:
        return "SKIPPED";
    }
    return "?";
}

// ----------------------------------------------------------------- context

void ClaimContext::fail(const SimplicialComplex* complex, std::optional<FieldSpec> field, std::string detail)
{
    if (failed())
        return;
    report.outcome = Outcome::Counterexample;
    report.counterexample =
        Counterexample{complex ? to_src(*complex) : std::string(), claim.field_dependent ? field : std::nullopt,
                       std::move(detail)};
}

std::vector<FieldSpec> ClaimContext::check_fields() const
{
    if (!claim.field_dependent)
        return {kGF2};
    return fields;
}

void ClaimContext::check_all(const std::vector<SimplicialComplex>& complexes, const ComplexCheck& check)
{
    report.checked += complexes.size();
    if (failed() || complexes.empty())
        return;
    const std::vector<FieldSpec> fs = check_fields();
    std::atomic<std::size_t> best{complexes.size()};
    std::mutex m;
    std::size_t best_field = 0;
    std::string best_detail;
    parallel_for(complexes.size(), enum_options.jobs, [&](std::size_t i, int) {
        if (i > best.load())
            return;
        for (std::size_t f = 0; f < fs.size(); ++f) {
            if (auto why = check(complexes[i], fs[f])) {
                std::lock_guard lock(m);
                if (i < best.load()) {
                    best = i;
                    best_field = f;
                    best_detail = std::move(*why);
                }
                return;
            }
        }
    });
    if (best.load() < complexes.size())
        fail(&complexes[best.load()], fs[best_field], best_detail);
}

std::vector<SimplicialComplex> ClaimContext::region(int n, int d) const
{
    std::vector<SimplicialComplex> out;
    if (!claim.hypothesis)
        return out;
    const auto filter = claim.hypothesis(n, d);
    if (!filter)
        return out;
    if (select_mode(*filter) == EnumMode::Skeleton) {
        out = enumerate_complexes(*filter, enum_options);
    } else {
        for (const auto& entry : vertex_full_catalog(n, enum_options.jobs))
            if (admits(*filter, entry.summary))
                out.push_back(entry.complex);
    }
    if (claim.extra_hypothesis)
        std::erase_if(out, [&](const SimplicialComplex& c) { return !claim.extra_hypothesis(c); });
    return out;
}

const std::vector<CatalogEntry>& vertex_full_catalog(int n, int jobs)
{
    std::lock_guard lock(catalog_mutex());
    auto& slot = catalog_store()[n];
    if (!slot) {
        EnumFilter f;
        f.n = n;
        f.require_vertex_full = true;
        f.up_to_iso = true;
        EnumOptions options;
        options.jobs = jobs;
        const std::vector<SimplicialComplex> complexes = enumerate_complexes(f, options);
        std::vector<InvariantSummary> summaries(complexes.size());
        parallel_for(complexes.size(), jobs,
                     [&](std::size_t i, int) { summaries[i] = invariants(complexes[i]); });
        auto entries = std::make_unique<std::vector<CatalogEntry>>();
        entries->reserve(complexes.size());
        for (std::size_t i = 0; i < complexes.size(); ++i)
            entries->push_back(CatalogEntry{complexes[i], std::move(summaries[i])});
        slot = std::move(entries);
    }
    return *slot;
}

// ------------------------------------------------------------------ report

std::string VerificationReport::to_text(bool include_time) const
{
    std::ostringstream out;
    out << "claim    " << claim_id << "\n";
    out << "summary  " << summary << "\n";
    out << "anchor   " << anchor.label << ": \"" << anchor.quote << "\"\n";
    out << "sweep    " << sweep << "\n";
    out << "fields   ";
    if (fields.empty()) {
        out << "n/a (combinatorial)";
    } else {
        for (std::size_t i = 0; i < fields.size(); ++i)
            out << (i ? ", " : "") << fields[i].name();
    }
    out << "\n";
    out << "checked  " << checked << "\n";
    out << "result   " << srkit::to_string(outcome) << "\n";
    if (outcome == Outcome::Skipped)
        out << "reason   " << skip_reason << "\n";
    if (counterexample) {
        if (counterexample->field)
            out << "field    " << counterexample->field->name() << "\n";
        out << "detail   " << counterexample->detail << "\n";
        if (!counterexample->src.empty()) {
            out << "complex\n";
            std::istringstream lines(counterexample->src);
            for (std::string line; std::getline(lines, line);)
                out << "    " << line << "\n";
        }
    }
    for (const auto& note : notes)
        out << "note     " << note << "\n";
    if (include_time) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", seconds);
        out << "time     " << buf << " s\n";
    }
    return out.str();
}

nlohmann::json VerificationReport::to_json(bool include_time) const
{
    nlohmann::json field_names = nlohmann::json::array();
    for (FieldSpec f : fields)
        field_names.push_back(f.name());
    nlohmann::json out = {{"claim", claim_id},
                          {"summary", summary},
                          {"anchor", {{"label", anchor.label}, {"quote", anchor.quote}}},
                          {"sweep", sweep},
                          {"fields", field_names},
                          {"checked", checked},
                          {"result", srkit::to_string(outcome)},
                          {"notes", notes}};
    if (outcome == Outcome::Skipped)
        out["reason"] = skip_reason;
    if (counterexample) {
        nlohmann::json cx = {{"detail", counterexample->detail}};
        cx["field"] = counterexample->field ? nlohmann::json(counterexample->field->name()) : nlohmann::json(nullptr);
        cx["src"] = counterexample->src.empty() ? nlohmann::json(nullptr) : nlohmann::json(counterexample->src);
        out["counterexample"] = cx;
    }
    if (include_time)
        out["time_seconds"] = seconds;
    return out;
}

// ---------------------------------------------------------------- registry

const std::vector<ClaimRecord>& claim_registry()
{
    static const std::vector<ClaimRecord> registry = build_registry();
    return registry;
}

const ClaimRecord* find_claim(std::string_view id)
{
    for (const auto& c : claim_registry())
        if (c.id == id)
            return &c;
    return nullptr;
}

std::vector<std::string> claim_ids()
{
    std::vector<std::string> out;
    for (const auto& c : claim_registry())
        out.push_back(c.id);
    return out;
}

VerificationReport verify(std::string_view id, const SweepRanges& ranges, std::vector<FieldSpec> fields)
{
    const ClaimRecord* claim = find_claim(id);
    if (claim == nullptr)
        throw std::invalid_argument("unknown claim id '" + std::string(id) + "'");
    if (fields.empty())
        fields = verification_fields();

    VerificationReport report;
    report.claim_id = claim->id;
    report.summary = claim->statement_summary;
    report.anchor = claim->anchor;
    if (claim->field_dependent)
        report.fields = fields;

    const SweepDefaults& def = claim->defaults;
    const int n_min = ranges.n_min.value_or(def.n_min);
    const int n_max = ranges.n_max.value_or(def.n_max);
    const int d_min = ranges.d_min.value_or(def.d_min);
    const int d_max = ranges.d_max.value_or(def.d_max == 0 ? kMaxVertices : def.d_max);
    const std::uint64_t samples = ranges.samples.value_or(def.samples);

    std::string sweep = "n = " + std::to_string(n_min) + ".." + std::to_string(n_max) + ", d = " +
                        std::to_string(d_min) + ".." + (d_max == kMaxVertices ? std::string("n") : std::to_string(d_max));
    if (samples > 0)
        sweep += ", " + std::to_string(samples) + " samples";
    if (!def.scope.empty())
        sweep += "; " + def.scope;
    report.sweep = sweep;

    if (n_min < 0 || n_max > kMaxVertices || n_min > n_max || d_min < 0 || d_min > d_max) {
        report.outcome = Outcome::Skipped;
        report.skip_reason = "empty or invalid sweep box";
        return report;
    }

    EnumOptions enum_options;
    enum_options.jobs = ranges.jobs;
    enum_options.max_search = ranges.max_search;
    HochsterOptions hochster;
    hochster.max_subsets = ranges.max_subsets;
    hochster.jobs = 1;
    ClaimContext ctx{*claim,  n_min,   n_max,        d_min,    d_max, samples, ranges.seed,
                     fields, enum_options, hochster, report};

    const auto start = std::chrono::steady_clock::now();
    try {
        if (claim->run)
            claim->run(ctx);
        else
            sweep_region(ctx);
    } catch (const GuardError& e) {
        if (!ctx.failed()) {
            report.outcome = Outcome::Skipped;
            report.skip_reason = e.what();
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool recheck(const VerificationReport& report)
{
    if (!report.counterexample || report.counterexample->src.empty())
        return false;
    const ClaimRecord* claim = find_claim(report.claim_id);
    if (claim == nullptr)
        return false;
    const SimplicialComplex complex = parse_src(report.counterexample->src);
    return claim->refutes(complex, report.counterexample->field.value_or(kGF2)).has_value();
}

} // namespace srkit
