#pragma once

#include "bhk/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace bhk {

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Dense exact-integer matrix, row-major. Zero rows/columns are permitted only
/// for basis-shaped results (an empty kernel basis); domain constructors add
/// their own >= 1x1 requirements.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const IntVector& d);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix from_row_vectors(const std::vector<IntVector>& rows);
    static IntMatrix from_column_vectors(const std::vector<IntVector>& cols, std::size_t ambient_rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;

    IntMatrix transpose() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    IntVector apply(const IntVector& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// Dense exact-rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_int(const IntMatrix& m);
    static RatMatrix from_column_vectors(const std::vector<RatVector>& cols, std::size_t ambient_rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector col(std::size_t j) const;

    RatMatrix transpose() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

    RatVector apply(const RatVector& x) const;

    /// True when every entry is an integer.
    bool is_integral() const;
    IntMatrix to_int() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

Rat dot(const RatVector& a, const RatVector& b);
Int dot(const IntVector& a, const IntVector& b);

} // namespace bhk
