#include "srkit/sparse_matrix.hpp"

#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace srkit {

SparseMatrix::SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols)
{
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Rational& value)
{
    if (row >= rows_ || col >= cols_)
        throw std::out_of_range("matrix index out of range");
    Rational v = value;
    if (!field_.is_rational()) {
        if (v.get_den() != 1)
            throw std::invalid_argument("non-integer entry in a matrix over " + field_.name());
        mpz_class r = v.get_num() % field_.characteristic();
        if (r < 0)
            r += field_.characteristic();
        v = Rational(r);
    }
    const auto key = std::make_pair(row, col);
    if (v == 0)
        entries_.erase(key);
    else
        entries_[key] = v;
}

Rational SparseMatrix::get(std::size_t row, std::size_t col) const
{
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<SparseMatrix::Entry> SparseMatrix::entries() const
{
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto& [key, value] : entries_)
        out.push_back({key.first, key.second, value});
    return out;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(field_, cols_, rows_);
    for (const auto& [key, value] : entries_)
        t.entries_[{key.second, key.first}] = value;
    return t;
}

SparseMatrix SparseMatrix::permuted(const std::vector<std::size_t>& row_order,
                                    const std::vector<std::size_t>& col_order) const
{
    if (row_order.size() != rows_ || col_order.size() != cols_)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<std::size_t> row_inv(rows_), col_inv(cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        row_inv.at(row_order[i]) = i;
    for (std::size_t j = 0; j < cols_; ++j)
        col_inv.at(col_order[j]) = j;
    SparseMatrix p(field_, rows_, cols_);
    for (const auto& [key, value] : entries_)
        p.entries_[{row_inv[key.first], col_inv[key.second]}] = value;
    return p;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const
{
    if (field_ != rhs.field_)
        throw std::invalid_argument("multiply: field mismatch");
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("multiply: shape mismatch");
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rhs_rows(rhs.rows_);
    for (const auto& [key, value] : rhs.entries_)
        rhs_rows[key.first].emplace_back(key.second, value);
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
    for (const auto& [key, value] : entries_)
        for (const auto& [col, v] : rhs_rows[key.second])
            acc[{key.first, col}] += value * v;
    SparseMatrix out(field_, rows_, rhs.cols_);
    for (const auto& [key, value] : acc)
        out.set(key.first, key.second, value);
    return out;
}

std::size_t rank(const SparseMatrix& matrix, FieldSpec field)
{
    if (matrix.field() != field)
        throw std::invalid_argument("rank: matrix is over " + matrix.field().name() + ", requested " + field.name());
    const std::size_t cols = matrix.cols();
    const std::vector<SparseMatrix::Entry> entries = matrix.entries();

    if (field.is_rational()) {
        // Clear denominators row by row; scaling a row keeps the rank.
        std::vector<std::vector<mpz_class>> rows(matrix.rows(), std::vector<mpz_class>(cols));
        std::vector<mpz_class> lcm(matrix.rows(), 1);
        for (const auto& e : entries)
            mpz_lcm(lcm[e.row].get_mpz_t(), lcm[e.row].get_mpz_t(), e.value.get_den_mpz_t());
        for (const auto& e : entries)
            rows[e.row][e.col] = e.value.get_num() * (lcm[e.row] / e.value.get_den());
        return detail::rank_integer(std::move(rows), cols);
    }
    const std::uint32_t p = field.characteristic();
    if (p == 2) {
        const std::size_t words = (cols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(matrix.rows(), std::vector<std::uint64_t>(words, 0));
        for (const auto& e : entries)
            rows[e.row][e.col / 64] |= std::uint64_t{1} << (e.col % 64);
        return detail::rank_gf2(std::move(rows), cols);
    }
    std::vector<std::vector<std::uint32_t>> rows(matrix.rows(), std::vector<std::uint32_t>(cols, 0));
    for (const auto& e : entries)
        rows[e.row][e.col] = static_cast<std::uint32_t>(e.value.get_num().get_ui());
    return detail::rank_mod_p(std::move(rows), cols, p);
}

namespace detail {

std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols)
{
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::optional<std::size_t>> pivot_of(cols);
    std::vector<std::vector<std::uint64_t>> basis;
    for (auto& row : rows) {
        std::size_t w = 0;
        while (true) {
            while (w < words && row[w] == 0)
                ++w;
            if (w == words)
                break;
            const std::size_t col = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
            if (!pivot_of[col]) {
                pivot_of[col] = basis.size();
                basis.push_back(std::move(row));
                break;
            }
            const auto& piv = basis[*pivot_of[col]];
            for (std::size_t k = w; k < words; ++k)
                row[k] ^= piv[k];
        }
    }
    return basis.size();
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1U)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

} // namespace

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::size_t cols, std::uint32_t p)
{
    std::vector<std::optional<std::size_t>> pivot_of(cols);
    std::vector<std::vector<std::uint32_t>> basis;
    for (auto& row : rows) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (row[c] == 0)
                continue;
            if (!pivot_of[c]) {
                const std::uint64_t inv = inverse_mod(row[c], p);
                for (std::size_t k = c; k < cols; ++k)
                    row[k] = static_cast<std::uint32_t>(row[k] * inv % p);
                pivot_of[c] = basis.size();
                basis.push_back(std::move(row));
                break;
            }
            const auto& piv = basis[*pivot_of[c]];
            const std::uint64_t factor = p - row[c];
            for (std::size_t k = c; k < cols; ++k)
                row[k] = static_cast<std::uint32_t>((row[k] + factor * piv[k]) % p);
        }
    }
    return basis.size();
}

namespace {

struct Overflow {};

std::int64_t checked_combination(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y)
{
    // a*x - b*y
    std::int64_t ax = 0, by = 0, out = 0;
    if (__builtin_mul_overflow(a, x, &ax) || __builtin_mul_overflow(b, y, &by) ||
        __builtin_sub_overflow(ax, by, &out))
        throw Overflow{};
    return out;
}

template <typename Int>
Int gcd_abs(const Int& a, const Int& b)
{
    if constexpr (std::is_same_v<Int, mpz_class>) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    } else {
        return std::gcd(a, b);
    }
}

template <typename Int>
Int combine(const Int& a, const Int& x, const Int& b, const Int& y)
{
    if constexpr (std::is_same_v<Int, mpz_class>)
        return a * x - b * y;
    else
        return checked_combination(a, x, b, y);
}

// Fraction-free incremental elimination: each incoming row is reduced by the
// pivot rows in column order (row <- a*row - b*pivot) and divided by its content.
template <typename Int>
std::size_t rank_fraction_free(std::vector<std::vector<Int>> rows, std::size_t cols)
{
    std::vector<std::optional<std::size_t>> pivot_of(cols);
    std::vector<std::vector<Int>> basis;
    for (auto& row : rows) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (row[c] == 0)
                continue;
            if (!pivot_of[c]) {
                pivot_of[c] = basis.size();
                basis.push_back(std::move(row));
                break;
            }
            const auto& piv = basis[*pivot_of[c]];
            const Int g = gcd_abs<Int>(piv[c], row[c]);
            const Int a = piv[c] / g;
            const Int b = row[c] / g;
            Int content = 0;
            for (std::size_t k = c; k < cols; ++k) {
                row[k] = combine<Int>(a, row[k], b, piv[k]);
                if (row[k] != 0)
                    content = gcd_abs<Int>(content, row[k]);
            }
            if (content > 1)
                for (std::size_t k = c; k < cols; ++k)
                    row[k] /= content;
        }
    }
    return basis.size();
}

} // namespace

std::size_t rank_integer(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols)
{
    try {
        return rank_fraction_free<std::int64_t>(rows, cols);
    } catch (const Overflow&) {
        std::vector<std::vector<mpz_class>> big(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            big[i].reserve(cols);
            for (std::int64_t v : rows[i])
                big[i].emplace_back(static_cast<long>(v));
        }
        return rank_fraction_free<mpz_class>(std::move(big), cols);
    }
}

std::size_t rank_integer(std::vector<std::vector<mpz_class>> rows, std::size_t cols)
{
    return rank_fraction_free<mpz_class>(std::move(rows), cols);
}

} // namespace detail

} // namespace srkit
