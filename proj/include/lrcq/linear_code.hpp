#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lrcq/matrix.hpp"

namespace lrcq {

// Caps for the two exact-distance strategies and for support searches.  Both
// searches are exact or they fail loudly with BudgetExceeded; nothing is ever
// approximated.
struct DistanceBudget {
    uint64_t max_codewords = 10'000'000;  // full-codeword enumeration cap
    uint64_t max_subsets = 1'000'000;     // visited column-subset / support cap
};

enum class Form { Euclidean, Hermitian };

// An [n, k] linear code held as both a full-rank generator matrix G (k x n)
// and a full-rank parity-check matrix H ((n-k) x n) with G H^T = 0.  The
// zero code (k = 0) is representable; by convention its distance is 0.
class LinearCode {
public:
    // Reject rank-deficient inputs rather than silently reducing them.
    static LinearCode from_generator(const Matrix& G);  // RankDeficientInput
    static LinearCode from_parity(const Matrix& H);     // RankDeficientInput

    const FieldPtr& field() const { return G_.field(); }
    size_t n() const { return n_; }
    size_t k() const { return k_; }
    const Matrix& G() const { return G_; }
    const Matrix& H() const { return H_; }

    // Exact minimum distance.  Dispatches to full-codeword enumeration when
    // q^k fits the budget and to the ascending-weight column search on H
    // otherwise.  The result is cached (write-once); a cached value is
    // returned without re-search.
    size_t min_distance(const DistanceBudget& budget) const;
    std::optional<size_t> cached_distance() const { return d_; }

    // Restriction of the code to the given 0-based coordinates (strictly
    // increasing, nonempty).  The dimension is recomputed; the result may be
    // the zero code.
    LinearCode puncture(const std::vector<size_t>& support) const;

    // Internal-use constructor for codes derived from already-validated
    // matrices (e.g. duals and punctures).
    static LinearCode from_parts_unchecked(Matrix G, Matrix H);

private:
    LinearCode(Matrix G, Matrix H);
    Matrix G_, H_;
    size_t n_, k_;
    mutable std::optional<size_t> d_;
};

// Strategy (a): enumerate all q^k codewords (BudgetExceeded if q^k exceeds
// max_codewords).
size_t min_distance_by_enumeration(const LinearCode& c, const DistanceBudget& budget);

// Strategy (b): search for the smallest linearly dependent column subset of
// H, by ascending subset size, visiting supports in lexicographic order.
// Counts visited search nodes against max_subsets (BudgetExceeded).  If
// witness_out is given, it receives the lexicographically first minimum-size
// dependent column set (0-based).
size_t min_distance_by_column_search(const LinearCode& c, const DistanceBudget& budget,
                                     std::vector<size_t>* witness_out = nullptr);

// Visits every nonzero codeword until the visitor returns false.  Enumerates
// q^k messages (BudgetExceeded if over max_codewords).
void for_each_codeword(const LinearCode& c, const DistanceBudget& budget,
                       const std::function<bool(const std::vector<uint64_t>&)>& visit);

LinearCode dual_euclidean(const LinearCode& c);
// Hermitian dual over GF(q^2): the entrywise q-th-power image of the
// Euclidean dual.  NotQuadraticField when the field order is not a square.
LinearCode dual_hermitian(const LinearCode& c);

// The subfield size q with q^2 = field order (NotQuadraticField otherwise).
uint64_t quadratic_subfield_order(const Field& f);

bool is_mds(const LinearCode& c, const DistanceBudget& budget);

// All pairwise inner products <row_i, sigma(row_j)> vanish, where sigma is
// the identity (Euclidean) or the entrywise q-th power (Hermitian).
bool rows_self_orthogonal(const Matrix& M, Form form);

// C^dual subset of C, checked as pairwise (Euclidean or Hermitian) inner
// products of parity-check rows.
bool is_dual_containing(const LinearCode& c, Form form);
// C subset of C^dual: pairwise inner products of generator rows.
bool is_self_orthogonal(const LinearCode& c, Form form);

}  // namespace lrcq
