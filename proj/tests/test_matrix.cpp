#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "lrcq/error.hpp"
#include "lrcq/field.hpp"
#include "lrcq/matrix.hpp"

using lrcq::Error;
using lrcq::Field;
using lrcq::FieldPtr;
using lrcq::Matrix;

namespace {

// Laplace-expansion determinant of a square submatrix, written independently
// of the library's elimination code so rank results can be cross-checked.
uint64_t det_expansion(const Matrix& m, std::vector<size_t> rows, std::vector<size_t> cols) {
    const Field& f = *m.field();
    if (rows.empty()) return 1;
    uint64_t acc = 0;
    bool negate = false;
    for (size_t i = 0; i < rows.size(); ++i) {
        uint64_t pivot = m.at(rows[i], cols[0]);
        if (pivot != 0) {
            std::vector<size_t> sub_rows;
            for (size_t j = 0; j < rows.size(); ++j)
                if (j != i) sub_rows.push_back(rows[j]);
            std::vector<size_t> sub_cols(cols.begin() + 1, cols.end());
            uint64_t minor = det_expansion(m, sub_rows, sub_cols);
            uint64_t term = f.mul(pivot, minor);
            acc = negate ? f.sub(acc, term) : f.add(acc, term);
        }
        negate = !negate;
    }
    return acc;
}

// Rank as the largest size of a square submatrix with nonzero determinant.
size_t rank_by_minors(const Matrix& m) {
    size_t cap = std::min(m.rows(), m.cols());
    for (size_t size = cap; size >= 1; --size) {
        // Enumerate all row subsets and column subsets of the given size.
        std::vector<size_t> ridx(size);
        for (size_t i = 0; i < size; ++i) ridx[i] = i;
        while (true) {
            std::vector<size_t> cidx(size);
            for (size_t i = 0; i < size; ++i) cidx[i] = i;
            while (true) {
                if (det_expansion(m, ridx, cidx) != 0) return size;
                // next column combination
                size_t i = size;
                while (i > 0 && cidx[i - 1] == m.cols() - size + i - 1) --i;
                if (i == 0) break;
                ++cidx[i - 1];
                for (size_t j = i; j < size; ++j) cidx[j] = cidx[j - 1] + 1;
            }
            size_t i = size;
            while (i > 0 && ridx[i - 1] == m.rows() - size + i - 1) --i;
            if (i == 0) break;
            ++ridx[i - 1];
            for (size_t j = i; j < size; ++j) ridx[j] = ridx[j - 1] + 1;
        }
    }
    return 0;
}

Matrix random_matrix(const FieldPtr& f, size_t rows, size_t cols, std::mt19937& rng) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<uint64_t> dist(0, f->order() - 1);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set(i, j, dist(rng));
    return m;
}

}  // namespace

TEST_CASE("rank agrees with the determinant-minor definition") {
    std::mt19937 rng(12345);
    const std::vector<std::pair<uint64_t, uint32_t>> specs = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
    for (auto [p, m] : specs) {
        FieldPtr f = Field::create(p, m);
        for (int trial = 0; trial < 40; ++trial) {
            size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
            Matrix mat = random_matrix(f, rows, cols, rng);
            CAPTURE(p);
            CAPTURE(trial);
            size_t expected = rank_by_minors(mat);
            CHECK(lrcq::rank(mat) == expected);
            CHECK(lrcq::rank(lrcq::transpose(mat)) == expected);
            CHECK(expected + lrcq::nullspace(mat).rows() == cols);
        }
    }
}

TEST_CASE("rref is idempotent with increasing pivots and preserves the row space") {
    std::mt19937 rng(777);
    FieldPtr f = Field::create(5, 1);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(f, 2 + rng() % 4, 2 + rng() % 5, rng);
        std::vector<size_t> pivots;
        Matrix r = lrcq::rref(m, &pivots);
        CHECK(lrcq::rref(r) == r);
        CHECK(pivots.size() == lrcq::rank(m));
        for (size_t i = 0; i + 1 < pivots.size(); ++i) CHECK(pivots[i] < pivots[i + 1]);
        for (size_t i = 0; i < pivots.size(); ++i) {
            CHECK(r.at(i, pivots[i]) == 1);  // unit pivot, zeros above and below
            for (size_t row = 0; row < r.rows(); ++row)
                if (row != i) CHECK(r.at(row, pivots[i]) == 0);
        }
        CHECK(lrcq::same_row_space(m, r));
    }
}

TEST_CASE("nullspace rows annihilate the matrix") {
    std::mt19937 rng(999);
    FieldPtr f = Field::create(2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(f, 2 + rng() % 3, 3 + rng() % 4, rng);
        Matrix ns = lrcq::nullspace(m);
        CHECK(ns.rows() == m.cols() - lrcq::rank(m));
        if (ns.rows() > 0) {
            CHECK(lrcq::is_zero(lrcq::multiply(m, lrcq::transpose(ns))));
            CHECK(lrcq::rank(ns) == ns.rows());  // basis, not just spanning set
        }
    }
}

TEST_CASE("multiplication against identity and known products") {
    FieldPtr f = Field::create(3, 1);
    Matrix m = Matrix::from_rows(f, {{1, 2, 0}, {0, 1, 2}});
    Matrix i2 = Matrix::identity(f, 2);
    Matrix i3 = Matrix::identity(f, 3);
    CHECK(lrcq::multiply(i2, m) == m);
    CHECK(lrcq::multiply(m, i3) == m);

    Matrix a = Matrix::from_rows(f, {{1, 2}, {2, 1}});
    Matrix b = Matrix::from_rows(f, {{2, 1}, {1, 1}});
    // (1,2)*(2,1)^T = 2+2 = 1 mod 3, etc.
    Matrix expect = Matrix::from_rows(f, {{1, 0}, {2, 0}});
    CHECK(lrcq::multiply(a, b) == expect);

    Matrix wide = Matrix::from_rows(f, {{1, 0, 1}});
    CHECK_THROWS_WITH_AS(lrcq::multiply(wide, wide), doctest::Contains("DimensionMismatch"),
                         Error);
}

TEST_CASE("transpose is an involution") {
    std::mt19937 rng(4242);
    FieldPtr f = Field::create(7, 1);
    Matrix m = random_matrix(f, 3, 5, rng);
    CHECK(lrcq::transpose(lrcq::transpose(m)) == m);
    CHECK(lrcq::transpose(m).rows() == 5);
    CHECK(lrcq::transpose(m).cols() == 3);
}

TEST_CASE("select_columns extracts and validates") {
    FieldPtr f = Field::create(2, 1);
    Matrix m = Matrix::from_rows(f, {{1, 0, 1, 1}, {0, 1, 1, 0}});
    Matrix s = lrcq::select_columns(m, {0, 2, 3});
    CHECK(s == Matrix::from_rows(f, {{1, 1, 1}, {0, 1, 0}}));
    CHECK_THROWS_WITH_AS(lrcq::select_columns(m, {2, 1}),
                         doctest::Contains("NotStrictlyIncreasing"), Error);
    CHECK_THROWS_WITH_AS(lrcq::select_columns(m, {1, 1}),
                         doctest::Contains("NotStrictlyIncreasing"), Error);
    CHECK_THROWS_WITH_AS(lrcq::select_columns(m, {0, 4}), doctest::Contains("IndexOutOfRange"),
                         Error);
}

TEST_CASE("stacking and block-diagonal assembly") {
    FieldPtr f = Field::create(3, 1);
    Matrix a = Matrix::from_rows(f, {{1, 2}});
    Matrix b = Matrix::from_rows(f, {{2, 0}, {0, 1}});
    Matrix v = lrcq::stack_vertical(a, b);
    CHECK(v == Matrix::from_rows(f, {{1, 2}, {2, 0}, {0, 1}}));
    Matrix h = lrcq::stack_horizontal(b, b);
    CHECK(h == Matrix::from_rows(f, {{2, 0, 2, 0}, {0, 1, 0, 1}}));
    CHECK_THROWS_WITH_AS(lrcq::stack_vertical(a, lrcq::transpose(a)),
                         doctest::Contains("DimensionMismatch"), Error);

    Matrix d = lrcq::block_diagonal(f, {a, b});
    CHECK(d == Matrix::from_rows(f, {{1, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}}));
    Matrix empty = lrcq::block_diagonal(f, {});
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 0);
}

TEST_CASE("frobenius_entrywise squares every entry over GF(4)") {
    FieldPtr f = Field::create(2, 2);
    Matrix m = Matrix::from_rows(f, {{0, 1, 2, 3}});
    Matrix conj = lrcq::frobenius_entrywise(m, 2);
    for (size_t j = 0; j < 4; ++j) CHECK(conj.at(0, j) == f->mul(m.at(0, j), m.at(0, j)));
}

TEST_CASE("same_row_space detects equality up to row operations") {
    FieldPtr f = Field::create(2, 1);
    Matrix a = Matrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}});
    Matrix b = Matrix::from_rows(f, {{1, 1, 0}, {0, 1, 1}});  // row1+row2, row2
    CHECK(lrcq::same_row_space(a, b));
    Matrix c = Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 1}});
    CHECK_FALSE(lrcq::same_row_space(a, c));
}

TEST_CASE("matrix element access is bounds- and field-checked") {
    FieldPtr f = Field::create(3, 1);
    Matrix m(f, 2, 2);
    CHECK(lrcq::is_zero(m));
    m.set(1, 1, 2);
    CHECK_FALSE(lrcq::is_zero(m));
    CHECK(m.row(1) == std::vector<uint64_t>{0, 2});
    CHECK(m.col(1) == std::vector<uint64_t>{0, 2});
    CHECK_THROWS_WITH_AS(m.set(2, 0, 1), doctest::Contains("IndexOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(m.set(0, 0, 3), doctest::Contains("IndexOutOfRange"), Error);
}

TEST_CASE("default-constructed matrix is an empty placeholder") {
    Matrix m;
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 0);
    CHECK(m.field() == nullptr);
    Matrix assigned = Matrix::identity(Field::create(2, 1), 2);
    m = assigned;
    CHECK(m.rows() == 2);
}
