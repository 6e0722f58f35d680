#include "lrcq/matrix.hpp"

#include <algorithm>

#include "lrcq/error.hpp"

namespace lrcq {

namespace {
void require_same_field(const Matrix& a, const Matrix& b) {
    if (!a.field()->same_spec(*b.field()))
        fail_user("SpecMismatch", "matrices live over different fields");
}
}  // namespace

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<uint64_t>>& rows) {
    const size_t r = rows.size();
    const size_t c = r ? rows[0].size() : 0;
    Matrix m(field, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            fail_user("DimensionMismatch", "ragged rows in matrix literal");
        for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::identity(FieldPtr field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::set(size_t r, size_t c, uint64_t v) {
    if (r >= rows_ || c >= cols_)
        fail_user("IndexOutOfRange", "entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                         ") outside a " + std::to_string(rows_) + " x " +
                                         std::to_string(cols_) + " matrix");
    if (!field_->valid(v))
        fail_user("IndexOutOfRange", "element encoding " + std::to_string(v) + " out of range");
    data_[r * cols_ + c] = v;
}

std::vector<uint64_t> Matrix::row(size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

std::vector<uint64_t> Matrix::col(size_t c) const {
    std::vector<uint64_t> out(rows_);
    for (size_t i = 0; i < rows_; ++i) out[i] = data_[i * cols_ + c];
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_->same_spec(*o.field_) && rows_ == o.rows_ && cols_ == o.cols_ &&
           data_ == o.data_;
}

Matrix rref(const Matrix& m, std::vector<size_t>* pivot_cols) {
    Matrix r = m;
    const Field& f = *m.field();
    const size_t nr = m.rows(), nc = m.cols();
    if (pivot_cols) pivot_cols->clear();
    size_t rank_rows = 0;
    for (size_t col = 0; col < nc && rank_rows < nr; ++col) {
        size_t piv = rank_rows;
        while (piv < nr && r.at(piv, col) == 0) ++piv;
        if (piv == nr) continue;
        if (piv != rank_rows) {
            for (size_t j = 0; j < nc; ++j) {
                uint64_t t = r.at(rank_rows, j);
                r.set(rank_rows, j, r.at(piv, j));
                r.set(piv, j, t);
            }
        }
        const uint64_t inv = f.inv(r.at(rank_rows, col));
        for (size_t j = col; j < nc; ++j) r.set(rank_rows, j, f.mul(inv, r.at(rank_rows, j)));
        for (size_t i = 0; i < nr; ++i) {
            if (i == rank_rows) continue;
            const uint64_t c = r.at(i, col);
            if (c == 0) continue;
            for (size_t j = col; j < nc; ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(c, r.at(rank_rows, j))));
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank_rows;
    }
    return r;
}

size_t rank(const Matrix& m) {
    std::vector<size_t> piv;
    rref(m, &piv);
    return piv.size();
}

Matrix nullspace(const Matrix& m) {
    std::vector<size_t> pivots;
    Matrix r = rref(m, &pivots);
    const Field& f = *m.field();
    const size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (size_t p : pivots) is_pivot[p] = true;

    std::vector<size_t> free_cols;
    for (size_t c = 0; c < nc; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(m.field(), free_cols.size(), nc);
    for (size_t b = 0; b < free_cols.size(); ++b) {
        const size_t fc = free_cols[b];
        basis.set(b, fc, 1);
        for (size_t rr = 0; rr < pivots.size(); ++rr)
            basis.set(b, pivots[rr], f.neg(r.at(rr, fc)));
    }
    return basis;
}

Matrix select_columns(const Matrix& m, const std::vector<size_t>& cols) {
    for (size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] >= m.cols())
            fail_user("IndexOutOfRange",
                      "column " + std::to_string(cols[i]) + " out of range for " +
                          std::to_string(m.cols()) + " columns");
        if (i > 0 && cols[i] <= cols[i - 1])
            fail_user("NotStrictlyIncreasing", "column selection must be strictly increasing");
    }
    Matrix out(m.field(), m.rows(), cols.size());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t j = 0; j < cols.size(); ++j) out.set(r, j, m.at(r, cols[j]));
    return out;
}

Matrix stack_vertical(const Matrix& top, const Matrix& bottom) {
    require_same_field(top, bottom);
    if (top.cols() != bottom.cols())
        fail_user("DimensionMismatch", "vertical stack needs equal column counts");
    Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (size_t r = 0; r < top.rows(); ++r)
        for (size_t c = 0; c < top.cols(); ++c) out.set(r, c, top.at(r, c));
    for (size_t r = 0; r < bottom.rows(); ++r)
        for (size_t c = 0; c < bottom.cols(); ++c) out.set(top.rows() + r, c, bottom.at(r, c));
    return out;
}

Matrix stack_horizontal(const Matrix& left, const Matrix& right) {
    require_same_field(left, right);
    if (left.rows() != right.rows())
        fail_user("DimensionMismatch", "horizontal stack needs equal row counts");
    Matrix out(left.field(), left.rows(), left.cols() + right.cols());
    for (size_t r = 0; r < left.rows(); ++r) {
        for (size_t c = 0; c < left.cols(); ++c) out.set(r, c, left.at(r, c));
        for (size_t c = 0; c < right.cols(); ++c) out.set(r, left.cols() + c, right.at(r, c));
    }
    return out;
}

Matrix block_diagonal(const FieldPtr& field, const std::vector<Matrix>& blocks) {
    size_t R = 0, C = 0;
    for (const auto& b : blocks) {
        if (!b.field()->same_spec(*field))
            fail_user("SpecMismatch", "block field differs from the requested field");
        R += b.rows();
        C += b.cols();
    }
    Matrix out(field, R, C);
    size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (size_t r = 0; r < b.rows(); ++r)
            for (size_t c = 0; c < b.cols(); ++c) out.set(ro + r, co + c, b.at(r, c));
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) fail_user("DimensionMismatch", "inner dimensions differ");
    const Field& f = *a.field();
    Matrix out(a.field(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t k = 0; k < a.cols(); ++k) {
            const uint64_t av = a.at(i, k);
            if (av == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                const uint64_t bv = b.at(k, j);
                if (bv == 0) continue;
                out.set(i, j, f.add(out.at(i, j), f.mul(av, bv)));
            }
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.field(), m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out.set(c, r, m.at(r, c));
    return out;
}

Matrix frobenius_entrywise(const Matrix& m, uint64_t q) {
    Matrix out(m.field(), m.rows(), m.cols());
    const Field& f = *m.field();
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out.set(r, c, f.frobenius(m.at(r, c), q));
    return out;
}

bool is_zero(const Matrix& m) {
    for (uint64_t v : m.data())
        if (v != 0) return false;
    return true;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) return false;
    const size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    return rank(stack_vertical(a, b)) == ra;
}

}  // namespace lrcq
