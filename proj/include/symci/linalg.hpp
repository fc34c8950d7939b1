#ifndef SYMCI_LINALG_HPP
#define SYMCI_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace symci {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// Exact determinant by Gaussian elimination over Q.
mpq_class determinant(RationalMatrix m);

/// Trace of the u-th exterior power of a square matrix: the sum of its
/// principal u x u minors.
mpq_class exterior_power_trace(const RationalMatrix& m, int u);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Sparse integer vector, entries sorted by column, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, mpz_class>>;

/// Scales a rational vector by the lcm of its denominators.
SparseVector to_integer_vector(const std::vector<mpq_class>& dense);

/// Row space of integer vectors, kept in fully reduced echelon form with
/// primitive integer rows (fraction-free elimination with content removal).
///
/// A row's pivot is its smallest column. Every pivot column is zero in every
/// other row, so each row is supported on its pivot plus free columns, and
/// coordinates of a vector in the span are read off at the pivot columns.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t columns) : columns_(columns), pivot_row_(columns, -1) {}

    std::size_t columns() const noexcept { return columns_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Adds v to the span; returns true when the rank grew.
    bool insert(SparseVector v);
    bool insert(const std::vector<mpq_class>& dense) { return insert(to_integer_vector(dense)); }

    bool is_pivot(std::size_t column) const { return pivot_row_.at(column) >= 0; }
    const SparseVector& row(std::size_t k) const { return rows_.at(k); }
    std::size_t pivot(std::size_t k) const { return pivots_.at(k); }
    /// Leading coefficient of row k (at its pivot), always positive.
    const mpz_class& leading(std::size_t k) const { return rows_.at(k).front().second; }
    std::optional<std::size_t> row_with_pivot(std::size_t column) const;
    /// Entry of row k at a column; zero when absent.
    mpz_class entry(std::size_t k, std::size_t column) const;

    /// Columns that are not pivots, ascending.
    std::vector<std::size_t> free_columns() const;

    /// Normal form modulo the span, supported on free columns.
    std::vector<mpq_class> reduce(const std::vector<mpq_class>& v) const;

    bool contains(const std::vector<mpq_class>& v) const;

    /// Coordinates of v in the row basis; nullopt when v is outside the span.
    std::optional<std::vector<mpq_class>> coordinates(const std::vector<mpq_class>& v) const;

private:
    std::size_t columns_;
    std::vector<SparseVector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<long> pivot_row_;
};

}  // namespace symci

#endif  // SYMCI_LINALG_HPP
