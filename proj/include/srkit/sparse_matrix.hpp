#ifndef SRKIT_SPARSE_MATRIX_HPP
#define SRKIT_SPARSE_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "srkit/field.hpp"

namespace srkit {

using Rational = mpq_class;

/**
 * A sparse matrix over a fixed field. Over GF(p) entries are stored as
 * residues 0..p-1; over Q as exact fractions. No zero is ever stored and
 * each (row, col) appears at most once.
 */
class SparseMatrix {
public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        Rational value;
    };

    SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

    /// Over GF(p) the value must be an integer; it is reduced mod p.
    /// Setting zero erases the entry.
    void set(std::size_t row, std::size_t col, const Rational& value);
    Rational get(std::size_t row, std::size_t col) const;

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const { return entries_.size(); }
    /// Entries in (row, col) order.
    std::vector<Entry> entries() const;
    bool is_zero() const { return entries_.empty(); }

    SparseMatrix transpose() const;
    /// Row r of the result is row row_order[r] of this matrix, likewise columns.
    SparseMatrix permuted(const std::vector<std::size_t>& row_order,
                          const std::vector<std::size_t>& col_order) const;
    /// this * rhs; throws std::invalid_argument on shape or field mismatch.
    SparseMatrix multiply(const SparseMatrix& rhs) const;

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

/// Exact rank. Throws std::invalid_argument if the matrix was built over a
/// different field than `field`.
std::size_t rank(const SparseMatrix& matrix, FieldSpec field);

namespace detail {

/// Rank kernels. Rows are eliminated in order against pivots chosen by
/// first nonzero column, so results are deterministic.
std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols);
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::size_t cols, std::uint32_t p);
/// Exact rank over Q of an integer matrix (fraction-free elimination; 64-bit
/// arithmetic with a GMP fallback on overflow).
std::size_t rank_integer(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);
std::size_t rank_integer(std::vector<std::vector<mpz_class>> rows, std::size_t cols);

} // namespace detail

} // namespace srkit

#endif
