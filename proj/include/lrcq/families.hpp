#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lrcq/locality.hpp"
#include "lrcq/quantum.hpp"

namespace lrcq {

// Parameters of the block-diagonal Vandermonde family over GF(q^2):
// t disjoint blocks of q-1 columns, u local parity rows per block, a v-row
// bottom band.
struct Family1Params {
    uint64_t q = 0;
    size_t u = 0, v = 0, t = 0;
};

// Parameters of the shared-middle family over GF(q^2): t super-blocks of
// 2q+v-2 columns (two point sets of size q-1 sharing v middle columns),
// s local parity rows per half, a single-row band.
struct Family2Params {
    uint64_t q = 0;
    size_t s = 0, v = 0, t = 0;
};

// As Family2Params but with an independent second point set per super-block
// and a two-row band.
struct Family3Params {
    uint64_t q = 0;
    size_t s = 0, v = 0, t = 0;
};

// Element encodings chosen during construction, recorded so an instance is
// reproducible bit-for-bit.
struct FamilyProvenance {
    uint64_t g = 0;               // canonical primitive element of GF(q^2)
    std::vector<uint64_t> omega;  // per-block (q-1)th primitive roots
    uint64_t zeta = 0;            // vth root of unity (families 2 and 3)
    std::vector<uint64_t> lambda;  // per-block scalars (families 2 and 3)
    std::vector<uint64_t> mu;      // per-block scalars (family 3)
};

// A fully certified construction: the classical code, its locality
// certificate, the staircase parity-check decomposition, the induced quantum
// parameters with the full verdict, and the element choices made.
struct FamilyInstance {
    int family = 0;
    std::map<std::string, uint64_t> params;
    LinearCode classical;
    LocalityCertificate cert;
    StructuredParityCheck structured;
    QuantumParams quantum;
    QuantumLrcVerdict verdict;
    FamilyProvenance provenance;
};

// Each validator returns one human-readable line per violated hypothesis
// (empty means the tuple is admissible).
std::vector<std::string> validate_family1(const Family1Params& p);
std::vector<std::string> validate_family2(const Family2Params& p);
std::vector<std::string> validate_family3(const Family3Params& p);

// Builders construct the parity-check matrix, then certify everything about
// the instance before returning: exact distance, locality-bound attainment,
// staircase extraction, block self-orthogonality, and the quantum verdict.
// InvalidParams on inadmissible tuples; NoValidLambdaMu when the scalar scan
// finds no admissible pair (family 3); CertificationFailed (internal) when a
// certification step contradicts the construction.
FamilyInstance build_family1(const Family1Params& p, const DistanceBudget& budget = {});
FamilyInstance build_family2(const Family2Params& p, const DistanceBudget& budget = {});
FamilyInstance build_family3(const Family3Params& p, const DistanceBudget& budget = {});

}  // namespace lrcq
