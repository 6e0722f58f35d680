#include "lrcq/linear_code.hpp"

#include <algorithm>

#include "lrcq/error.hpp"

namespace lrcq {

namespace {

// q^k clamped so it never overflows; anything above the clamp fails the
// budget comparison anyway.
uint64_t pow_clamped(uint64_t base, size_t exp, uint64_t clamp) {
    uint64_t result = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (result > clamp / base) return clamp + 1;
        result *= base;
    }
    return result;
}

}  // namespace

LinearCode::LinearCode(Matrix G, Matrix H)
    : G_(std::move(G)), H_(std::move(H)), n_(G_.cols()), k_(G_.rows()) {}

LinearCode LinearCode::from_generator(const Matrix& G) {
    if (G.rows() == 0 || G.cols() == 0)
        fail_user("EmptyMatrix", "generator matrix must have at least one row and column");
    if (rank(G) != G.rows())
        fail_user("RankDeficientInput", "generator matrix rows are linearly dependent");
    Matrix h = nullspace(G);
    return LinearCode(G, std::move(h));
}

LinearCode LinearCode::from_parity(const Matrix& H) {
    if (H.rows() == 0 || H.cols() == 0)
        fail_user("EmptyMatrix", "parity-check matrix must have at least one row and column");
    if (rank(H) != H.rows())
        fail_user("RankDeficientInput", "parity-check matrix rows are linearly dependent");
    Matrix g = nullspace(H);  // a square H yields the zero code (k = 0)
    return LinearCode(std::move(g), H);
}

LinearCode LinearCode::from_parts_unchecked(Matrix G, Matrix H) {
    return LinearCode(std::move(G), std::move(H));
}

LinearCode LinearCode::puncture(const std::vector<size_t>& support) const {
    if (support.empty())
        fail_user("EmptySupport", "a punctured code needs at least one coordinate");
    Matrix sub = select_columns(G_, support);
    Matrix reduced = rref(sub);
    // Keep the nonzero rows; the result may have rank 0 (zero code).
    size_t r = 0;
    for (size_t i = 0; i < reduced.rows(); ++i) {
        bool nonzero = false;
        for (size_t j = 0; j < reduced.cols(); ++j)
            if (reduced.at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) ++r;
    }
    size_t nn = support.size();
    Matrix g(field(), r, nn);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < nn; ++j) g.set(i, j, reduced.at(i, j));
    Matrix h = r > 0 ? nullspace(g) : Matrix::identity(field(), nn);
    return LinearCode(std::move(g), std::move(h));
}

size_t LinearCode::min_distance(const DistanceBudget& budget) const {
    if (d_) return *d_;
    size_t d;
    if (k_ == 0) {
        d = 0;
    } else {
        uint64_t total = pow_clamped(field()->order(), k_, budget.max_codewords);
        if (total <= budget.max_codewords)
            d = min_distance_by_enumeration(*this, budget);
        else
            d = min_distance_by_column_search(*this, budget);
    }
    d_ = d;
    return d;
}

size_t min_distance_by_enumeration(const LinearCode& c, const DistanceBudget& budget) {
    if (c.k() == 0) return 0;
    const Field& f = *c.field();
    uint64_t q = f.order();
    size_t k = c.k(), n = c.n();
    uint64_t total = pow_clamped(q, k, budget.max_codewords);
    if (total > budget.max_codewords)
        fail_budget("codeword enumeration needs q^k = more than max_codewords messages");

    const Matrix& G = c.G();
    // partial[depth] = sum of the first `depth` message digits times G rows.
    std::vector<std::vector<uint64_t>> partial(k + 1, std::vector<uint64_t>(n, 0));
    size_t best = n + 1;

    std::function<void(size_t, bool)> rec = [&](size_t depth, bool nonzero) {
        if (best == 1) return;
        if (depth == k) {
            if (!nonzero) return;
            size_t w = 0;
            for (size_t j = 0; j < n; ++j)
                if (partial[depth][j] != 0) ++w;
            best = std::min(best, w);
            return;
        }
        for (uint64_t coeff = 0; coeff < q; ++coeff) {
            if (coeff == 0) {
                partial[depth + 1] = partial[depth];
            } else {
                for (size_t j = 0; j < n; ++j)
                    partial[depth + 1][j] =
                        f.add(partial[depth][j], f.mul(coeff, G.at(depth, j)));
            }
            rec(depth + 1, nonzero || coeff != 0);
            if (best == 1) return;
        }
    };
    rec(0, false);
    if (best > n)
        fail_internal("DistanceSearchFailed", "no nonzero codeword found in a k > 0 code");
    return best;
}

size_t min_distance_by_column_search(const LinearCode& c, const DistanceBudget& budget,
                                     std::vector<size_t>* witness_out) {
    if (c.k() == 0) return 0;
    const Matrix& H = c.H();
    size_t n = H.cols(), h = H.rows();
    if (h == 0) {
        // Full space: the weight-1 codewords are present.
        if (witness_out) *witness_out = {0};
        return 1;
    }
    const Field& f = *c.field();

    // Columns of H, each of height h.
    std::vector<std::vector<uint64_t>> cols(n, std::vector<uint64_t>(h));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < h; ++i) cols[j][i] = H.at(i, j);

    uint64_t visited = 0;
    // Reduce v against the pivot rows collected so far; each pivot is
    // normalized to lead with 1 at position lead[i].
    std::vector<std::vector<uint64_t>> pivots;
    std::vector<size_t> leads;
    std::vector<size_t> chosen;
    std::vector<size_t> witness;

    auto reduce = [&](std::vector<uint64_t> v) {
        for (size_t i = 0; i < pivots.size(); ++i) {
            uint64_t coef = v[leads[i]];
            if (coef == 0) continue;
            for (size_t t = 0; t < h; ++t)
                v[t] = f.sub(v[t], f.mul(coef, pivots[i][t]));
        }
        return v;
    };

    std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t remaining) -> bool {
        for (size_t j = start; j + remaining <= n; ++j) {
            if (++visited > budget.max_subsets)
                fail_budget("column-subset search exceeded max_subsets visited nodes");
            std::vector<uint64_t> v = reduce(cols[j]);
            size_t lead = h;
            for (size_t t = 0; t < h; ++t)
                if (v[t] != 0) { lead = t; break; }
            if (lead == h) {
                // Dependent on the chosen prefix.  By ascending subset size
                // this only happens at the final position of the subset.
                if (remaining == 1) {
                    witness = chosen;
                    witness.push_back(j);
                    return true;
                }
                continue;
            }
            if (remaining == 1) continue;
            uint64_t inv = f.inv(v[lead]);
            for (size_t t = 0; t < h; ++t) v[t] = f.mul(v[t], inv);
            pivots.push_back(std::move(v));
            leads.push_back(lead);
            chosen.push_back(j);
            bool found = rec(j + 1, remaining - 1);
            pivots.pop_back();
            leads.pop_back();
            chosen.pop_back();
            if (found) return true;
        }
        return false;
    };

    for (size_t w = 1; w <= h + 1; ++w) {
        if (rec(0, w)) {
            if (witness_out) *witness_out = witness;
            return w;
        }
    }
    fail_internal("DistanceSearchFailed",
                  "every h+1 column subset of an h-row parity check should be dependent");
}

void for_each_codeword(const LinearCode& c, const DistanceBudget& budget,
                       const std::function<bool(const std::vector<uint64_t>&)>& visit) {
    if (c.k() == 0) return;
    const Field& f = *c.field();
    uint64_t q = f.order();
    size_t k = c.k(), n = c.n();
    uint64_t total = pow_clamped(q, k, budget.max_codewords);
    if (total > budget.max_codewords)
        fail_budget("codeword enumeration needs q^k = more than max_codewords messages");

    const Matrix& G = c.G();
    std::vector<std::vector<uint64_t>> partial(k + 1, std::vector<uint64_t>(n, 0));
    bool stop = false;
    std::function<void(size_t, bool)> rec = [&](size_t depth, bool nonzero) {
        if (stop) return;
        if (depth == k) {
            if (nonzero && !visit(partial[depth])) stop = true;
            return;
        }
        for (uint64_t coeff = 0; coeff < q && !stop; ++coeff) {
            if (coeff == 0) {
                partial[depth + 1] = partial[depth];
            } else {
                for (size_t j = 0; j < n; ++j)
                    partial[depth + 1][j] =
                        f.add(partial[depth][j], f.mul(coeff, G.at(depth, j)));
            }
            rec(depth + 1, nonzero || coeff != 0);
        }
    };
    rec(0, false);
}

LinearCode dual_euclidean(const LinearCode& c) {
    return LinearCode::from_parts_unchecked(c.H(), c.G());
}

uint64_t quadratic_subfield_order(const Field& f) {
    if (f.m() % 2 != 0)
        fail_user("NotQuadraticField",
                  "Hermitian operations need a field of square order p^(2t)");
    uint64_t q = 1;
    for (size_t i = 0; i < f.m() / 2; ++i) q *= f.p();
    return q;
}

LinearCode dual_hermitian(const LinearCode& c) {
    uint64_t q = quadratic_subfield_order(*c.field());
    return LinearCode::from_parts_unchecked(frobenius_entrywise(c.H(), q),
                                            frobenius_entrywise(c.G(), q));
}

bool is_mds(const LinearCode& c, const DistanceBudget& budget) {
    if (c.k() == 0) return false;
    return c.min_distance(budget) == c.n() - c.k() + 1;
}

bool rows_self_orthogonal(const Matrix& M, Form form) {
    const Field& f = *M.field();
    uint64_t q = 0;
    if (form == Form::Hermitian) q = quadratic_subfield_order(f);
    for (size_t i = 0; i < M.rows(); ++i) {
        for (size_t j = i; j < M.rows(); ++j) {
            uint64_t acc = 0;
            for (size_t t = 0; t < M.cols(); ++t) {
                uint64_t rhs = M.at(j, t);
                if (form == Form::Hermitian) rhs = f.pow(rhs, q);
                acc = f.add(acc, f.mul(M.at(i, t), rhs));
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

bool is_dual_containing(const LinearCode& c, Form form) {
    return rows_self_orthogonal(c.H(), form);
}

bool is_self_orthogonal(const LinearCode& c, Form form) {
    return rows_self_orthogonal(c.G(), form);
}

}  // namespace lrcq
