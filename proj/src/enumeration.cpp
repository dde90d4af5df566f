#include "srkit/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "srkit/canonical.hpp"
#include "srkit/errors.hpp"
#include "srkit/parallel.hpp"

namespace srkit {

void validate(const EnumFilter& f)
{
    auto fail = [](const std::string& what) { throw std::invalid_argument("enumeration filter: " + what); };
    if (f.n < 0 || f.n > kMaxVertices)
        fail("n outside 0..64");
    if (f.dim_ring && (*f.dim_ring < 0 || *f.dim_ring > f.n))
        fail("dim_ring outside 0..n");
    if (f.indeg_exact && *f.indeg_exact < 1)
        fail("indeg must be at least 1");
    if (f.rt_exact && f.rt_max && *f.rt_exact > *f.rt_max)
        fail("rt_exact exceeds rt_max");
    if (f.rt_exact && f.indeg_exact && *f.rt_exact < *f.indeg_exact)
        fail("rt_exact below indeg");
    if (f.e_min && f.e_max && *f.e_min > *f.e_max)
        fail("e_min exceeds e_max");
}

EnumMode select_mode(const EnumFilter& f)
{
    if (f.indeg_exact && f.dim_ring && *f.indeg_exact == *f.dim_ring && *f.dim_ring >= 1)
        return EnumMode::Skeleton;
    return EnumMode::General;
}

bool admits(const EnumFilter& f, const InvariantSummary& s)
{
    if (s.n != f.n)
        return false;
    if (f.require_vertex_full && !s.vertex_full)
        return false;
    if (f.dim_ring && s.dim_ring != *f.dim_ring)
        return false;
    if (f.pure && s.is_pure != *f.pure)
        return false;
    if (f.indeg_exact && s.indeg != *f.indeg_exact)
        return false;
    if (f.rt_max && s.rt > *f.rt_max)
        return false;
    if (f.rt_exact && s.rt != *f.rt_exact)
        return false;
    if (f.e_min && s.multiplicity < *f.e_min)
        return false;
    if (f.e_max && s.multiplicity > *f.e_max)
        return false;
    return true;
}

bool admits(const EnumFilter& f, const SimplicialComplex& complex)
{
    return admits(f, invariants(complex));
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t multiplicity_of(const SimplicialComplex& c, int d)
{
    std::uint64_t e = 0;
    for (VertexSet f : c.facets())
        if (f.size() == d)
            ++e;
    return e;
}

template <typename T>
void sort_unique(std::vector<T>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct FamilyHash {
    std::size_t operator()(const std::vector<VertexSet>& fam) const noexcept
    {
        std::size_t h = fam.size();
        for (VertexSet s : fam)
            h = h * 0x9E3779B97F4A7C15ULL + s.bits();
        return h;
    }
};

// ---------------------------------------------------------------- general

std::vector<SimplicialComplex> enumerate_general(const EnumFilter& f, const EnumOptions& options)
{
    const int limit = f.up_to_iso ? 6 : 5;
    if (f.n > limit)
        throw GuardError("unrestricted enumeration is limited to n <= " + std::to_string(limit) +
                         (f.up_to_iso ? " up to isomorphism" : " for labeled complexes") + "; got n = " +
                         std::to_string(f.n));
    std::vector<SimplicialComplex> results;
    std::vector<SimplicialComplex> level{SimplicialComplex::simplex(f.n)};
    const int workers = resolve_jobs(options.jobs);
    while (!level.empty()) {
        for (const auto& c : level)
            if (admits(f, c))
                results.push_back(c);
        std::vector<std::vector<SimplicialComplex>> local(static_cast<std::size_t>(workers));
        parallel_for(level.size(), workers, [&](std::size_t idx, int worker) {
            const SimplicialComplex& c = level[idx];
            const auto& fs = c.facets();
            for (std::size_t r = 0; r < fs.size(); ++r) {
                const VertexSet removed = fs[r];
                if (removed.empty())
                    continue;
                if (f.require_vertex_full && removed.size() == 1)
                    continue;
                std::vector<VertexSet> next;
                next.reserve(fs.size() + static_cast<std::size_t>(removed.size()));
                for (std::size_t s = 0; s < fs.size(); ++s)
                    if (s != r)
                        next.push_back(fs[s]);
                for (int v : removed.vertices())
                    next.push_back(removed.without(v));
                SimplicialComplex child = SimplicialComplex::from_facets(f.n, next);
                if (f.dim_ring) {
                    if (child.dim_ring() < *f.dim_ring)
                        continue;
                    if (f.e_min && child.dim_ring() == *f.dim_ring && multiplicity_of(child, *f.dim_ring) < *f.e_min)
                        continue;
                }
                local[static_cast<std::size_t>(worker)].push_back(f.up_to_iso ? canonical_form(child) : child);
            }
        });
        level.clear();
        for (auto& l : local)
            level.insert(level.end(), std::make_move_iterator(l.begin()), std::make_move_iterator(l.end()));
        sort_unique(level);
    }
    return results;
}

// --------------------------------------------------------------- skeleton

class SkeletonSearch {
public:
    SkeletonSearch(const EnumFilter& f, const EnumOptions& options) : f_(f), options_(options)
    {
        n_ = f.n;
        d_ = *f.dim_ring;
        candidates_ = subsets_of_size(n_, d_);
        ridges_ = subsets_of_size(n_, d_ - 1);
        std::sort(candidates_.begin(), candidates_.end());
        const auto total = static_cast<std::uint64_t>(candidates_.size());
        e_lo_ = std::max<std::uint64_t>(1, f.e_min.value_or(1));
        e_hi_ = total == 0 ? 0 : std::min<std::uint64_t>(total - 1, f.e_max.value_or(total - 1));
        need_pure_ = f.pure.value_or(false);
        const std::uint64_t up_levels = e_hi_;
        const std::uint64_t down_levels = total >= e_lo_ ? total - e_lo_ : 0;
        complement_ = down_levels < up_levels;
        max_level_ = complement_ ? down_levels : up_levels;
        kfree_ = !complement_ && f.rt_max && *f.rt_max <= d_;
    }

    std::vector<SimplicialComplex> run()
    {
        if (f_.rt_max && *f_.rt_max < d_)
            return {}; // rt >= indeg = d
        if (candidates_.empty() || e_lo_ > e_hi_)
            return {};
        check_guard();

        std::vector<SimplicialComplex> results;
        std::vector<std::vector<VertexSet>> level{{}};
        for (std::uint64_t k = 0;; ++k) {
            if (accepted_level(k))
                for (const auto& fam : level)
                    emit(fam, results);
            if (k == max_level_ || level.empty())
                break;
            level = expand(level, k);
        }
        sort_unique(results);
        return results;
    }

private:
    void check_guard() const
    {
        const auto total = static_cast<int>(candidates_.size());
        std::uint64_t estimate = 0;
        for (std::uint64_t k = 0; k <= max_level_; ++k)
            estimate = saturating_add(estimate, binomial(total, static_cast<int>(k)));
        if (f_.up_to_iso)
            estimate /= std::max<std::uint64_t>(1, n_ <= 20 ? factorial(n_) : UINT64_MAX);
        if (estimate > options_.max_search)
            throw GuardError("skeleton enumeration at n = " + std::to_string(n_) + ", d = " + std::to_string(d_) +
                             " needs about " + std::to_string(estimate) + " families, above the bound " +
                             std::to_string(options_.max_search));
    }

    bool accepted_level(std::uint64_t k) const
    {
        const auto total = static_cast<std::uint64_t>(candidates_.size());
        if (complement_) {
            if (k == 0)
                return false;
            const std::uint64_t e = total - k;
            return e >= e_lo_ && e <= e_hi_;
        }
        return k >= e_lo_ && k <= e_hi_;
    }

    // The d-faces of Δ for a family at the current level.
    std::vector<VertexSet> top_faces(const std::vector<VertexSet>& fam) const
    {
        if (!complement_)
            return fam;
        std::vector<VertexSet> out;
        out.reserve(candidates_.size() - fam.size());
        std::set_difference(candidates_.begin(), candidates_.end(), fam.begin(), fam.end(), std::back_inserter(out));
        return out;
    }

    void emit(const std::vector<VertexSet>& fam, std::vector<SimplicialComplex>& results) const
    {
        std::vector<VertexSet> gens = top_faces(fam);
        gens.insert(gens.end(), ridges_.begin(), ridges_.end());
        SimplicialComplex c = SimplicialComplex::from_facets(n_, gens);
        if (!admits(f_, c))
            return;
        results.push_back(f_.up_to_iso ? canonical_form(c) : std::move(c));
    }

    static bool has(const std::vector<VertexSet>& sorted, VertexSet s)
    {
        return std::binary_search(sorted.begin(), sorted.end(), s);
    }

    // Hereditary pruning for the family `fam` extended by `added`.
    bool viable(const std::vector<VertexSet>& fam, VertexSet added, std::uint64_t new_size) const
    {
        const VertexSet ground = VertexSet::full(n_);
        if (kfree_) {
            // No (d+1)-set may have all of its d-subsets chosen.
            for (int v : (ground - added).vertices()) {
                const VertexSet big = added.with(v);
                bool complete = true;
                for (int u : added.vertices())
                    if (!has(fam, big.without(u))) {
                        complete = false;
                        break;
                    }
                if (complete)
                    return false;
            }
        }
        if (need_pure_ && !complement_) {
            // The remaining picks must cover every still uncovered (d-1)-set.
            std::unordered_set<VertexSet> covered;
            for (VertexSet s : fam)
                for (int v : s.vertices())
                    covered.insert(s.without(v));
            for (int v : added.vertices())
                covered.insert(added.without(v));
            const std::uint64_t uncovered = ridges_.size() - covered.size();
            if (uncovered > static_cast<std::uint64_t>(d_) * (max_level_ - new_size))
                return false;
        }
        if (need_pure_ && complement_) {
            // Removing `added` must not strip a (d-1)-set of all its d-cofaces.
            for (int v : added.vertices()) {
                const VertexSet ridge = added.without(v);
                bool stripped = true;
                for (int u : (ground - ridge).vertices()) {
                    const VertexSet up = ridge.with(u);
                    if (up != added && !has(fam, up)) {
                        stripped = false;
                        break;
                    }
                }
                if (stripped)
                    return false;
            }
        }
        return true;
    }

    std::vector<std::vector<VertexSet>> expand(const std::vector<std::vector<VertexSet>>& level, std::uint64_t k) const
    {
        const int workers = resolve_jobs(options_.jobs);
        std::vector<std::vector<std::vector<VertexSet>>> local(static_cast<std::size_t>(workers));
        parallel_for(level.size(), workers, [&](std::size_t idx, int worker) {
            const auto& fam = level[idx];
            for (VertexSet c : candidates_) {
                if (!f_.up_to_iso && !fam.empty() && !(fam.back() < c))
                    continue;
                if (has(fam, c))
                    continue;
                if (!viable(fam, c, k + 1))
                    continue;
                std::vector<VertexSet> child = fam;
                child.insert(std::upper_bound(child.begin(), child.end(), c), c);
                local[static_cast<std::size_t>(worker)].push_back(
                    f_.up_to_iso ? canonical_family(n_, child) : std::move(child));
            }
        });
        std::vector<std::vector<VertexSet>> next;
        for (auto& l : local)
            next.insert(next.end(), std::make_move_iterator(l.begin()), std::make_move_iterator(l.end()));
        if (f_.up_to_iso) {
            std::unordered_set<std::vector<VertexSet>, FamilyHash> seen;
            std::vector<std::vector<VertexSet>> unique;
            for (auto& fam : next)
                if (seen.insert(fam).second)
                    unique.push_back(std::move(fam));
            next = std::move(unique);
        }
        std::sort(next.begin(), next.end());
        return next;
    }

    EnumFilter f_;
    EnumOptions options_;
    int n_ = 0;
    int d_ = 0;
    std::vector<VertexSet> candidates_;
    std::vector<VertexSet> ridges_;
    std::uint64_t e_lo_ = 1;
    std::uint64_t e_hi_ = 0;
    bool need_pure_ = false;
    bool complement_ = false;
    bool kfree_ = false;
    std::uint64_t max_level_ = 0;
};

} // namespace

std::vector<SimplicialComplex> enumerate_complexes(const EnumFilter& filter, const EnumOptions& options)
{
    validate(filter);
    if (select_mode(filter) == EnumMode::Skeleton)
        return SkeletonSearch(filter, options).run();
    return enumerate_general(filter, options);
}

void for_each_complex(const EnumFilter& filter, const std::function<void(const SimplicialComplex&)>& fn,
                      const EnumOptions& options)
{
    for (const auto& c : enumerate_complexes(filter, options))
        fn(c);
}

SimplicialComplex random_complex(int n, std::mt19937_64& rng, bool vertex_full)
{
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("random_complex: n outside 1..64");
    std::uniform_int_distribution<int> count_dist(1, n + 1);
    std::uniform_int_distribution<int> size_dist(1, n);
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 1);
    std::vector<VertexSet> faces;
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) {
        std::shuffle(verts.begin(), verts.end(), rng);
        const int size = size_dist(rng);
        faces.push_back(VertexSet::of(std::vector<int>(verts.begin(), verts.begin() + size)));
    }
    if (vertex_full)
        for (int v = 1; v <= n; ++v)
            faces.push_back(VertexSet::singleton(v));
    return SimplicialComplex::from_facets(n, faces);
}

// ------------------------------------------------------------------ Turán

namespace {

class HittingSetSearch {
public:
    HittingSetSearch(int n, int p, int k)
    {
        const std::vector<VertexSet> ksets = subsets_of_size(n, k);
        for (VertexSet big : subsets_of_size(n, p)) {
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < ksets.size(); ++i)
                if (ksets[i].is_subset_of(big))
                    mask |= std::uint64_t{1} << i;
            constraints_.push_back(mask);
        }
        best_ = ksets.size(); // choosing every k-set always works
    }

    std::uint64_t solve()
    {
        if (constraints_.empty())
            return 0;
        search(0, 0);
        return best_;
    }

private:
    // Lower bound: pairwise disjoint unmet constraints each need their own pick.
    std::uint64_t packing_bound(std::uint64_t chosen) const
    {
        std::uint64_t used = 0, count = 0;
        for (std::uint64_t m : constraints_)
            if ((m & chosen) == 0 && (m & used) == 0) {
                used |= m;
                ++count;
            }
        return count;
    }

    void search(std::uint64_t chosen, std::uint64_t size)
    {
        const std::uint64_t* first = nullptr;
        for (const std::uint64_t& m : constraints_)
            if ((m & chosen) == 0) {
                first = &m;
                break;
            }
        if (first == nullptr) {
            best_ = std::min(best_, size);
            return;
        }
        if (size + packing_bound(chosen) >= best_)
            return;
        for (std::uint64_t m = *first; m != 0; m &= m - 1) {
            const std::uint64_t bit = m & (~m + 1);
            search(chosen | bit, size + 1);
        }
    }

    std::vector<std::uint64_t> constraints_;
    std::uint64_t best_ = 0;
};

} // namespace

TuranRecord turan(int n, int p, int k)
{
    if (n < 0 || p < k || k < 1 || p > n)
        throw std::invalid_argument("turan: need 1 <= k <= p <= n");
    const std::uint64_t total = binomial(n, k);
    if (total > 64)
        throw GuardError("turan: C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(total) +
                         " exceeds the brute-force bound of 64 k-sets");
    TuranRecord r{n, p, k, 0, 0};
    r.turan_number = HittingSetSearch(n, p, k).solve();
    r.extremal = total - r.turan_number;
    return r;
}

std::uint64_t empirical_f(int n, int d, const EnumOptions& options)
{
    if (d < 1 || n <= d)
        throw std::invalid_argument("empirical_f: need 1 <= d < n");
    EnumFilter f;
    f.n = n;
    f.require_vertex_full = true;
    f.dim_ring = d;
    f.indeg_exact = d;
    f.rt_max = d;
    f.up_to_iso = true;
    std::uint64_t max_e = 0;
    for (const auto& c : enumerate_complexes(f, options))
        max_e = std::max(max_e, multiplicity_of(c, d));
    if (max_e == 0)
        throw std::invalid_argument("empirical_f: no complex with rt = d at n = " + std::to_string(n) +
                                    ", d = " + std::to_string(d));
    return max_e + 1;
}

} // namespace srkit
