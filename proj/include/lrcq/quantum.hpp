#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrcq/linear_code.hpp"
#include "lrcq/locality.hpp"

namespace lrcq {

struct QuantumParams {
    size_t n = 0;
    int64_t k = 0;  // logical dimension
    size_t d = 0;
    uint64_t q = 0;           // base field order of the quantum alphabet
    std::string construction;  // "css" | "hermitian"
    bool d_exact = false;      // true when d is certified exact, else a lower bound
};

// [[n, k1+k2-n, d]] from a Euclidean pair with C2-dual inside C1; d is
// min(d1,d2) when the dual equals C1 and the two-sided coset minimum weight
// otherwise (exact enumeration, budget-gated).
QuantumParams css_params(const LinearCode& c1, const LinearCode& c2,
                         const DistanceBudget& budget);

// [[n, 2k-n, >= d(C)]]_q from a Hermitian dual-containing code over GF(q^2).
QuantumParams hermitian_params(const LinearCode& c, const DistanceBudget& budget);

struct QuantumLrcVerdict {
    bool optimal = false;
    size_t n = 0;
    int64_t k = 0;
    size_t d = 0;
    uint64_t q = 0;
    std::string construction;
    int64_t identity_lhs = 0, identity_rhs = 0;
    size_t delta = 0;
    size_t dual_distance = 0;         // exact when below delta, else the certified bound delta
    bool dual_distance_exact = false;  // see above
    bool dual_containing = false;
    bool locality = false;
    bool delta_le_dual = false;
    bool identity_holds = false;
};

// Checks every clause of the optimal-quantum-LRC definition: dual containment
// in the chosen form, (r,delta)-locality of C (using the supplied groups when
// given), delta <= d(C-dual) (certified by column independence up to
// delta-1), and the integer identity
//   k + 2 d(C) + 2 (ceil((n+k)/(2r)) - 1)(delta - 1) = n + 2.
QuantumLrcVerdict verify_optimal_quantum_lrc(const LinearCode& c, const LocalityParams& p,
                                             Form form, const DistanceBudget& budget,
                                             const std::vector<std::vector<size_t>>* groups =
                                                 nullptr);

// For a certified optimal LRC that is dual-containing in the chosen form,
// returns the induced quantum parameters with d exact.  The parity deficit
// bound n-k >= ceil(k/r)(delta-1) and the full definition verdict are
// cross-checked (InternalInvariantViolated on failure — never expected).
QuantumParams induce_optimal_quantum(const LinearCode& c, const LocalityCertificate& cert,
                                     Form form, const DistanceBudget& budget);

// True iff every per-group stack (A_i over the band columns of its group)
// and every adjacent-overlap stack (A_i and A_{i+1} restricted to their
// shared columns) generates a self-orthogonal code in the chosen form.
bool block_self_orthogonality_criterion(const StructuredParityCheck& s, Form form);

}  // namespace lrcq
