#include "srkit/vertex_set.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace srkit {

VertexSet VertexSet::of(std::initializer_list<int> vertices)
{
    return of(std::vector<int>(vertices));
}

VertexSet VertexSet::of(const std::vector<int>& vertices)
{
    std::uint64_t bits = 0;
    for (int v : vertices) {
        if (v < 1 || v > kMaxVertices)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside 1..64");
        bits |= std::uint64_t{1} << (v - 1);
    }
    return VertexSet(bits);
}

std::vector<int> VertexSet::vertices() const
{
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string VertexSet::to_string() const
{
    const std::vector<int> vs = vertices();
    const bool compact = max_vertex() <= 9;
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!compact && i > 0)
            out += ',';
        out += std::to_string(vs[i]);
    }
    out += ']';
    return out;
}

std::vector<VertexSet> subsets_of_size(int n, int k)
{
    std::vector<VertexSet> out;
    for_each_subset_of_size(VertexSet::full(n), k, [&](VertexSet s) { out.push_back(s); });
    return out;
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    __extension__ using Wide = unsigned __int128;
    Wide result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

} // namespace srkit
