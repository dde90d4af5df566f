#include "srkit/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace srkit {

namespace {

using Coloring = std::vector<int>; // colour per vertex index 0..n-1, colours 0..k-1

int count_colors(const Coloring& c)
{
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Re-rank arbitrary sortable keys into dense colours 0..k-1.
template <typename Key>
Coloring rank_keys(const std::vector<Key>& keys)
{
    std::vector<int> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    Coloring out(keys.size(), 0);
    int rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && keys[order[i - 1]] < keys[order[i]])
            ++rank;
        out[order[i]] = rank;
    }
    return out;
}

class CanonicalSearch {
public:
    CanonicalSearch(int n, std::span<const VertexSet> family) : n_(n)
    {
        sets_.reserve(family.size());
        for (VertexSet s : family)
            sets_.push_back(s.vertices());
        for (auto& s : sets_)
            for (int& v : s)
                --v;
        incident_.assign(static_cast<std::size_t>(n), {});
        for (std::size_t i = 0; i < sets_.size(); ++i)
            for (int v : sets_[i])
                incident_[static_cast<std::size_t>(v)].push_back(i);
    }

    std::vector<int> run()
    {
        if (n_ == 0)
            return {};
        std::vector<int> path;
        search(Coloring(static_cast<std::size_t>(n_), 0), path);
        return best_labels_;
    }

private:
    Coloring refine(Coloring colors) const
    {
        int k = count_colors(colors);
        while (true) {
            std::vector<std::vector<std::vector<int>>> keys(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                auto& key = keys[static_cast<std::size_t>(v)];
                key.push_back({colors[static_cast<std::size_t>(v)]});
                std::vector<std::vector<int>> descriptors;
                for (std::size_t si : incident_[static_cast<std::size_t>(v)]) {
                    std::vector<int> d{static_cast<int>(sets_[si].size())};
                    for (int u : sets_[si])
                        if (u != v)
                            d.push_back(colors[static_cast<std::size_t>(u)]);
                    std::sort(d.begin() + 1, d.end());
                    descriptors.push_back(std::move(d));
                }
                std::sort(descriptors.begin(), descriptors.end());
                key.insert(key.end(), descriptors.begin(), descriptors.end());
            }
            Coloring next = rank_keys(keys);
            const int nk = count_colors(next);
            colors = std::move(next);
            if (nk == k)
                return colors;
            k = nk;
        }
    }

    std::vector<VertexSet> certificate(const Coloring& labels) const
    {
        std::vector<VertexSet> cert;
        cert.reserve(sets_.size());
        for (const auto& s : sets_) {
            std::uint64_t bits = 0;
            for (int v : s)
                bits |= std::uint64_t{1} << labels[static_cast<std::size_t>(v)];
            cert.push_back(VertexSet::from_bits(bits));
        }
        std::sort(cert.begin(), cert.end());
        return cert;
    }

    // Orbit representative of v under the automorphisms fixing `path` pointwise.
    std::vector<int> orbits_fixing(const std::vector<int>& path) const
    {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x)
                x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(path.begin(), path.end(),
                                     [&](int p) { return gamma[static_cast<std::size_t>(p)] == p; });
            if (!fixes)
                continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(gamma[static_cast<std::size_t>(v)]);
                if (a != b)
                    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        std::vector<int> rep(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            rep[static_cast<std::size_t>(v)] = find(v);
        return rep;
    }

    void search(Coloring colors, std::vector<int>& path)
    {
        colors = refine(std::move(colors));
        const int k = count_colors(colors);
        if (k == n_) {
            leaf(colors);
            return;
        }
        // First non-singleton cell.
        std::vector<int> size(static_cast<std::size_t>(k), 0);
        for (int c : colors)
            ++size[static_cast<std::size_t>(c)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] < 2)
            ++target;

        std::vector<int> tried;
        for (int v = 0; v < n_; ++v) {
            if (colors[static_cast<std::size_t>(v)] != target)
                continue;
            if (!tried.empty()) {
                const std::vector<int> rep = orbits_fixing(path);
                const bool equivalent = std::any_of(tried.begin(), tried.end(), [&](int u) {
                    return rep[static_cast<std::size_t>(u)] == rep[static_cast<std::size_t>(v)];
                });
                if (equivalent)
                    continue;
            }
            tried.push_back(v);
            Coloring child(colors.size());
            for (int u = 0; u < n_; ++u) {
                const int c = colors[static_cast<std::size_t>(u)];
                child[static_cast<std::size_t>(u)] = 2 * c + ((c == target && u != v) ? 1 : 0);
            }
            path.push_back(v);
            search(rank_keys(child), path);
            path.pop_back();
        }
    }

    void leaf(const Coloring& labels)
    {
        std::vector<VertexSet> cert = certificate(labels);
        if (!best_cert_ || cert < *best_cert_) {
            best_cert_ = std::move(cert);
            best_labels_ = labels;
            return;
        }
        if (cert == *best_cert_) {
            // gamma = best^{-1} o labels is an automorphism of the family.
            std::vector<int> inverse_best(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v)
                inverse_best[static_cast<std::size_t>(best_labels_[static_cast<std::size_t>(v)])] = v;
            std::vector<int> gamma(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v)
                gamma[static_cast<std::size_t>(v)] = inverse_best[static_cast<std::size_t>(labels[static_cast<std::size_t>(v)])];
            automorphisms_.push_back(std::move(gamma));
        }
    }

    int n_;
    std::vector<std::vector<int>> sets_;
    std::vector<std::vector<std::size_t>> incident_;
    std::optional<std::vector<VertexSet>> best_cert_;
    std::vector<int> best_labels_;
    std::vector<std::vector<int>> automorphisms_;
};

} // namespace

std::vector<int> canonical_labeling(int n, std::span<const VertexSet> family)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count outside 0..64");
    std::vector<int> zero_based = CanonicalSearch(n, family).run();
    for (int& l : zero_based)
        ++l;
    return zero_based;
}

std::vector<VertexSet> relabel(std::span<const VertexSet> family, const std::vector<int>& labels)
{
    std::vector<VertexSet> out;
    out.reserve(family.size());
    for (VertexSet s : family) {
        std::uint64_t bits = 0;
        for (int v : s.vertices())
            bits |= std::uint64_t{1} << (labels.at(static_cast<std::size_t>(v - 1)) - 1);
        out.push_back(VertexSet::from_bits(bits));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex relabel(const SimplicialComplex& complex, const std::vector<int>& labels)
{
    return SimplicialComplex::from_facets(complex.vertex_count(), relabel(complex.facets(), labels));
}

std::vector<VertexSet> canonical_family(int n, std::span<const VertexSet> family)
{
    return relabel(family, canonical_labeling(n, family));
}

SimplicialComplex canonical_form(const SimplicialComplex& complex)
{
    return SimplicialComplex::from_facets(complex.vertex_count(),
                                          canonical_family(complex.vertex_count(), complex.facets()));
}

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b)
{
    if (a.vertex_count() != b.vertex_count() || a.facets().size() != b.facets().size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace srkit
