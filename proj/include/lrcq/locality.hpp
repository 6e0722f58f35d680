#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrcq/linear_code.hpp"

namespace lrcq {

struct LocalityParams {
    size_t r = 1;      // locality radius, >= 1
    size_t delta = 2;  // local distance guarantee, >= 2
};

// d <= n - k + 1 - (ceil(k/r) - 1)(delta - 1).  InvalidParams when the
// inputs are out of range or the bound is nonpositive.
uint64_t singleton_like_bound(size_t n, size_t k, const LocalityParams& p);

inline size_t ceil_div(size_t a, size_t b) { return (a + b - 1) / b; }

// A certified repair group: the punctured code on `support` has length at
// most r+delta-1 and exact minimum distance at least delta.
struct RepairGroup {
    std::vector<size_t> support;  // 0-based, strictly increasing
    LinearCode punct;             // C restricted to support
    size_t punct_distance;        // exact d(C|_support)
};

// Throws TooLarge when |S| > r+delta-1 and DistanceTooSmall when
// d(C|_S) < delta; `i` must lie in S.
RepairGroup verify_repair_group(const LinearCode& c, size_t i,
                                const std::vector<size_t>& support,
                                const LocalityParams& p, const DistanceBudget& budget);

// The lexicographically smallest repair group of minimum size that contains
// coordinate i.  Deterministic.  NoneFound when coordinate i has no
// (r,delta)-locality; BudgetExceeded when the support search runs out.
RepairGroup find_local_protection(const LinearCode& c, size_t i, const LocalityParams& p,
                                  const DistanceBudget& budget);

struct LocalityCertificate {
    LocalityParams params;
    std::vector<RepairGroup> groups;
    std::vector<size_t> cover;  // coordinate -> index into groups
};

// Builds a full cover of [n] by repair groups.  When user_groups is given,
// each is verified and the cover must be complete (UncoveredCoordinate);
// otherwise groups are searched greedily by ascending first-uncovered
// coordinate.
LocalityCertificate certify_lrc(const LinearCode& c, const LocalityParams& p,
                                const DistanceBudget& budget,
                                const std::vector<std::vector<size_t>>* user_groups = nullptr);

struct OptimalityReport {
    bool optimal;
    size_t d;
    uint64_t bound;
};

// Compares exact min_distance against the bound for the certificate's params.
OptimalityReport check_optimal_lrc(const LinearCode& c, const LocalityCertificate& cert,
                                   const DistanceBudget& budget);
bool is_optimal_lrc(const LinearCode& c, const LocalityCertificate& cert,
                    const DistanceBudget& budget);

// Output of the iterative rank-attainment procedure: groups C_1..C_{t-1},
// an optional terminal coordinate list (Case I), and the residual set U.
// s_list/r_list are the per-step size and rank increments (terminal step
// included in Case I).
struct Decomposition {
    int case_id = 0;  // 1 or 2
    std::vector<std::vector<size_t>> groups;
    std::vector<size_t> terminal;  // ascending; empty in Case II
    std::vector<size_t> residual;  // ascending
    std::vector<size_t> s_list;
    std::vector<size_t> r_list;
};

// Runs the deterministic procedure: repeatedly pick the smallest coordinate
// outside the accumulated set, adjoin its minimal repair group, and stop at
// rank k-1 either by truncating the last group (Case I terminal, greedy by
// ascending index) or because the union landed there exactly (Case II).
// InvariantViolation when the output fails the decomposition conditions
// (signals a non-optimal input or a bug).
Decomposition decompose(const LinearCode& c, const LocalityCertificate& cert,
                        const DistanceBudget& budget);

struct DecompositionReport {
    bool ok;
    std::vector<std::string> violations;
};

// Re-derives every decomposition condition from scratch: group count, MDS
// local codes with distance exactly delta, rank-size equations, terminal /
// case rank, residual size |U| = d(C), disjointness, coverage, and the
// Case II corollaries (r | (k-1), groups exactly [r+delta-1, r, delta]).
DecompositionReport verify_decomposition(const LinearCode& c, const Decomposition& d,
                                         const LocalityParams& p,
                                         const DistanceBudget& budget);

// Enumerates every support S with |S| <= r+delta-1 and d(C|_S) >= delta and
// confirms each punctured code is MDS with distance exactly delta.  True iff
// no counterexample; violating supports are reported when requested.
bool rigidity_check(const LinearCode& c, const LocalityParams& p, const DistanceBudget& budget,
                    std::vector<std::vector<size_t>>* violations_out = nullptr);

// For verified repair groups with rank(union) < k and positive incremental
// ranks, checks the rank-cardinality relation
//   rank gain at step i+1 = size gain at step i+1 - (delta - 1)
// for every step.  PreconditionViolated when the hypotheses fail.
bool mutual_rigidity_check(const LinearCode& c, const std::vector<std::vector<size_t>>& groups,
                           const LocalityParams& p, const DistanceBudget& budget);

// Staircase parity-check form extracted from a minimal decomposition
// (t = ceil(k/r) repair groups covering [n], only adjacent overlaps).
// A[i] is the (delta-1)-row parity block of C|_{groups[i]} over the group's
// own columns; B is the l-row full-width bottom band.
struct StructuredParityCheck {
    size_t delta = 2;
    size_t l = 0;
    std::string layout;  // "disjoint" | "interleaved"
    std::vector<std::vector<size_t>> groups;
    std::vector<Matrix> A;
    Matrix B;
};

// NotMinimalDecomposition when the groups fail the minimality shape;
// AssemblyFailed when a local block is not MDS-extractable or the assembled
// matrix does not span the parity space (never expected for optimal inputs).
StructuredParityCheck extract_structured_parity(const LinearCode& c,
                                                const std::vector<std::vector<size_t>>& groups,
                                                const LocalityParams& p,
                                                const DistanceBudget& budget);

// Rebuilds the full (t(delta-1)+l) x n staircase matrix.
Matrix assemble_structured(const StructuredParityCheck& s);

// Size of the smallest linearly dependent column subset of m when that size
// is at most wmax; 0 when every subset of size <= wmax is independent.
// Searches ascending sizes in lexicographic order (BudgetExceeded against
// max_subsets).
size_t smallest_dependent_columns(const Matrix& m, size_t wmax, const DistanceBudget& budget);

}  // namespace lrcq
