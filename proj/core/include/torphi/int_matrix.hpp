#pragma once

#include "torphi/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace torphi {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix diagonal(const IntVector& d);
    static IntMatrix fromRows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix fromColumns(const std::vector<IntVector>& cols, std::size_t rows);
    static IntMatrix column(const IntVector& v);
    static IntMatrix row(const IntVector& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector getColumn(std::size_t j) const;
    IntVector getRow(std::size_t i) const;
    std::vector<IntVector> columns() const;

    IntMatrix transpose() const;
    /// Horizontal concatenation [this | other]; row counts must match.
    IntMatrix hcat(const IntMatrix& other) const;
    IntMatrix leadingMinor(std::size_t k) const;

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Integer determinant() const;
    Integer content() const;
    bool isZero() const;
    bool isDiagonal() const;
    bool isSymmetric() const;

    void swapRows(std::size_t a, std::size_t b);
    void swapCols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void addRowMultiple(std::size_t dst, std::size_t src, const Integer& k);
    /// col[dst] += k * col[src]
    void addColMultiple(std::size_t dst, std::size_t src, const Integer& k);
    void negateRow(std::size_t i);
    void negateCol(std::size_t j);

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntVector operator*(const IntVector& v) const;
    friend IntMatrix operator*(const Integer& k, const IntMatrix& m);
    bool operator==(const IntMatrix& o) const = default;

    std::string toString() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Adjugate of a square matrix: adj(M) * M = det(M) * I.
IntMatrix adjugate(const IntMatrix& m);

Integer dot(const IntVector& a, const IntVector& b);

/// True when every leading principal minor is positive (exact test for
/// positive definiteness of a symmetric matrix).
bool isPositiveDefinite(const IntMatrix& symmetric);

}  // namespace torphi
