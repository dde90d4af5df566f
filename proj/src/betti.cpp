#include "srkit/betti.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "srkit/errors.hpp"
#include "srkit/homology.hpp"
#include "srkit/parallel.hpp"

namespace srkit {

BettiTable::BettiTable(FieldSpec field, int n) : field_(field), n_(n)
{
    entries_[{0, 0}] = 1;
}

std::uint64_t BettiTable::at(int i, int j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t value)
{
    if (value != 0)
        entries_[{i, j}] += value;
}

int BettiTable::regularity() const
{
    int reg = 0;
    for (const auto& [key, value] : entries_)
        reg = std::max(reg, key.second - key.first);
    return reg;
}

int BettiTable::indeg() const
{
    for (const auto& [key, value] : entries_)
        if (key.first == 1)
            return key.second;
    return kInfiniteDegree;
}

int BettiTable::rt() const
{
    int rt = kInfiniteDegree;
    for (const auto& [key, value] : entries_)
        if (key.first == 1)
            rt = key.second;
    return rt;
}

int BettiTable::projective_dimension() const
{
    return entries_.rbegin()->first.first;
}

std::string BettiTable::to_text() const
{
    const int pd = projective_dimension();
    const int reg = regularity();
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(pd) + 1,
                                                std::vector<std::string>(static_cast<std::size_t>(reg) + 1, "."));
    for (const auto& [key, value] : entries_)
        cells[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(key.second - key.first)] =
            std::to_string(value);
    std::size_t width = 1;
    for (const auto& row : cells)
        for (const auto& c : row)
            width = std::max(width, c.size());
    width = std::max(width, std::to_string(reg).size());

    std::ostringstream out;
    auto pad = [&](const std::string& s) { return std::string(width + 1 - s.size(), ' ') + s; };
    out << "betti " << field_.name() << "\n";
    out << "i\\j-i:";
    for (int c = 0; c <= reg; ++c)
        out << pad(std::to_string(c));
    out << "\n";
    const std::size_t label_width = std::string("i\\j-i:").size();
    for (int i = 0; i <= pd; ++i) {
        const std::string label = std::to_string(i) + ":";
        out << std::string(label_width - label.size(), ' ') << label;
        for (const auto& c : cells[static_cast<std::size_t>(i)])
            out << pad(c);
        out << "\n";
    }
    return out.str();
}

std::uint64_t check_sweep_size(int n, int max_j, std::uint64_t max_subsets)
{
    std::uint64_t total = 0;
    for (int j = 0; j <= std::min(n, max_j); ++j) {
        const std::uint64_t b = binomial(n, j);
        total = (total > UINT64_MAX - b) ? UINT64_MAX : total + b;
    }
    if (total > max_subsets)
        throw GuardError("Hochster sweep over " + std::to_string(total) + " subsets exceeds the cap of " +
                         std::to_string(max_subsets) + " (raise --max-subsets or SRKIT_MAX_SUBSETS)");
    return total;
}

namespace {

// Faces of Δ_W taken from the canonical face list of Δ (stays canonical).
void restrict_faces(const std::vector<VertexSet>& all, VertexSet w, std::vector<VertexSet>& out)
{
    out.clear();
    for (VertexSet f : all)
        if (f.is_subset_of(w))
            out.push_back(f);
}

// Subsets W of [n] with 1 <= |W| <= max_j that are not faces (faces give
// simplices, which are acyclic).
std::vector<VertexSet> sweep_subsets(const SimplicialComplex& complex, int max_j)
{
    std::vector<VertexSet> out;
    const VertexSet ground = VertexSet::full(complex.vertex_count());
    for (int j = 1; j <= std::min(max_j, complex.vertex_count()); ++j)
        for_each_subset_of_size(ground, j, [&](VertexSet w) {
            if (!complex.contains(w))
                out.push_back(w);
        });
    return out;
}

} // namespace

BettiTable hochster_betti(const SimplicialComplex& complex, FieldSpec field, const HochsterOptions& options)
{
    const int n = complex.vertex_count();
    const int max_j = std::min(n, options.max_j.value_or(n));
    check_sweep_size(n, max_j, options.max_subsets);

    const std::vector<VertexSet> all = all_faces(complex);
    const std::vector<VertexSet> subsets = sweep_subsets(complex, max_j);
    const int workers = resolve_jobs(options.jobs);
    std::vector<BettiTable> partial(static_cast<std::size_t>(workers), BettiTable(field, n));
    std::vector<std::vector<VertexSet>> scratch(static_cast<std::size_t>(workers));

    parallel_for(subsets.size(), workers, [&](std::size_t idx, int worker) {
        const VertexSet w = subsets[idx];
        auto& faces_w = scratch[static_cast<std::size_t>(worker)];
        restrict_faces(all, w, faces_w);
        const std::vector<std::uint64_t> h = reduced_betti_of_faces(faces_w, field);
        const int j = w.size();
        for (std::size_t k = 0; k < h.size(); ++k) {
            const int r = static_cast<int>(k) - 1;
            const int i = j - r - 1;
            if (i >= 1)
                partial[static_cast<std::size_t>(worker)].add(i, j, h[k]);
        }
    });

    BettiTable table(field, n);
    for (const auto& p : partial)
        for (const auto& [key, value] : p.entries())
            if (key.first >= 1)
                table.add(key.first, key.second, value);
    return table;
}

LinearityResult has_linear_resolution(const SimplicialComplex& complex, FieldSpec field,
                                      const HochsterOptions& options)
{
    if (complex.is_full_simplex())
        throw std::invalid_argument("linear resolution is undefined for the zero ideal (full simplex)");
    const int reg = regularity(complex, field, options);
    const int q = minimal_nonfaces(complex).front().size();
    return {reg == q - 1, q, reg};
}

int regularity(const SimplicialComplex& complex, FieldSpec field, const HochsterOptions& options)
{
    const int n = complex.vertex_count();
    check_sweep_size(n, n, options.max_subsets);
    const std::vector<VertexSet> all = all_faces(complex);
    const std::vector<VertexSet> subsets = sweep_subsets(complex, n);
    const int workers = resolve_jobs(options.jobs);
    std::vector<int> best(static_cast<std::size_t>(workers), 0);
    std::vector<std::vector<VertexSet>> scratch(static_cast<std::size_t>(workers));
    parallel_for(subsets.size(), workers, [&](std::size_t idx, int worker) {
        auto& faces_w = scratch[static_cast<std::size_t>(worker)];
        restrict_faces(all, subsets[idx], faces_w);
        const std::vector<std::uint64_t> h = reduced_betti_of_faces(faces_w, field);
        for (std::size_t k = h.size(); k-- > 0;) {
            if (h[k] != 0) {
                // r = k - 1 contributes j - i = r + 1 = k.
                int& b = best[static_cast<std::size_t>(worker)];
                b = std::max(b, static_cast<int>(k));
                break;
            }
        }
    });
    return *std::max_element(best.begin(), best.end());
}

int regularity_by_restriction_scan(const SimplicialComplex& complex, FieldSpec field, std::uint64_t max_subsets)
{
    const int n = complex.vertex_count();
    check_sweep_size(n, n, max_subsets);
    int reg = 0;
    for_each_subset(VertexSet::full(n), [&](VertexSet w) {
        if (w.empty())
            return;
        const HomologyProfile h = reduced_homology(restriction(complex, w), field);
        for (int i = h.top_index(); i >= -1; --i) {
            if (h.at(i) != 0) {
                reg = std::max(reg, i + 1);
                break;
            }
        }
    });
    return reg;
}

bool a_invariant_negative(const SimplicialComplex& complex, FieldSpec field)
{
    return top_homology_vanishes(complex, field);
}

} // namespace srkit
