#pragma once

#include <cstddef>
#include <vector>

#include "lrcq/field.hpp"

namespace lrcq {

// Dense row-major matrix over a shared finite field.  Entries are element
// encodings.  All shape- or field-mismatches raise typed errors rather than
// being silently coerced.
class Matrix {
public:
    // Uninitialized placeholder (no field, 0 x 0); assign before use.
    Matrix() : field_(nullptr), rows_(0), cols_(0) {}
    Matrix(FieldPtr field, size_t rows, size_t cols);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<uint64_t>>& rows);
    static Matrix identity(FieldPtr field, size_t n);

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint64_t at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint64_t v);

    const std::vector<uint64_t>& data() const { return data_; }
    std::vector<uint64_t> row(size_t r) const;
    std::vector<uint64_t> col(size_t c) const;

    bool operator==(const Matrix& o) const;

private:
    FieldPtr field_;
    size_t rows_, cols_;
    std::vector<uint64_t> data_;
};

// Gaussian elimination rank; pivots are chosen as the first nonzero entry in
// scan order, so results are deterministic.
size_t rank(const Matrix& m);

// Reduced row echelon form; optionally reports the pivot column of each
// nonzero row.
Matrix rref(const Matrix& m, std::vector<size_t>* pivot_cols = nullptr);

// Basis of the right kernel {x : M x^T = 0}, returned as rows.  Always has
// cols - rank(m) rows, built from the RREF with free columns in ascending
// order.
Matrix nullspace(const Matrix& m);

// Keep the given 0-based columns (strictly increasing; IndexOutOfRange /
// NotStrictlyIncreasing otherwise).
Matrix select_columns(const Matrix& m, const std::vector<size_t>& cols);

Matrix stack_vertical(const Matrix& top, const Matrix& bottom);
Matrix stack_horizontal(const Matrix& left, const Matrix& right);
Matrix block_diagonal(const FieldPtr& field, const std::vector<Matrix>& blocks);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
// Entrywise x -> x^q (the GF(q^2) conjugation).
Matrix frobenius_entrywise(const Matrix& m, uint64_t q);
bool is_zero(const Matrix& m);

// True when the row spaces of a and b coincide.
bool same_row_space(const Matrix& a, const Matrix& b);

}  // namespace lrcq
