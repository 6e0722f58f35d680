#include "lrcq/families.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "lrcq/error.hpp"

namespace lrcq {

namespace {

struct PrimePower {
    uint64_t p;
    uint32_t m;
};

std::optional<PrimePower> prime_power_split(uint64_t q) {
    if (q < 2) return std::nullopt;
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    uint32_t m = 0;
    uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) return std::nullopt;
    return PrimePower{p, m};
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "; ";
        out += parts[i];
    }
    return out;
}

std::vector<size_t> contiguous(size_t first, size_t count) {
    std::vector<size_t> out(count);
    std::iota(out.begin(), out.end(), first);
    return out;
}

// Smallest encoding in F^x outside the order-(q-1) subgroup (equivalently,
// outside the base subfield of GF(q^2)).
uint64_t smallest_nonbase(const Field& f, uint64_t q) {
    for (uint64_t a = 1; a < f.order(); ++a)
        if (f.pow(a, q - 1) != 1) return a;
    fail_internal("CertificationFailed", "no element outside the base subfield");
}

// Runs every certification predicate on a freshly built code and bundles the
// instance.  Everything the construction promises is re-derived here; any
// contradiction is a construction bug, surfaced as CertificationFailed.
FamilyInstance certify_instance(int family, std::map<std::string, uint64_t> params,
                                LinearCode code,
                                const std::vector<std::vector<size_t>>& groups,
                                const LocalityParams& lp, size_t expect_k, size_t expect_d,
                                size_t expect_l, int64_t expect_qk, FamilyProvenance prov,
                                const DistanceBudget& budget) {
    try {
        if (code.k() != expect_k)
            fail_internal("CertificationFailed", "dimension differs from the parameter formula");
        LocalityCertificate cert = certify_lrc(code, lp, budget, &groups);
        OptimalityReport rep = check_optimal_lrc(code, cert, budget);
        if (rep.d != expect_d)
            fail_internal("CertificationFailed", "distance differs from the parameter formula");
        if (!rep.optimal)
            fail_internal("CertificationFailed", "distance misses the locality Singleton bound");
        StructuredParityCheck sp = extract_structured_parity(code, groups, lp, budget);
        if (sp.l != expect_l)
            fail_internal("CertificationFailed", "band height differs from the construction");
        if (!block_self_orthogonality_criterion(sp, Form::Hermitian))
            fail_internal("CertificationFailed", "a block stack is not Hermitian self-orthogonal");
        QuantumParams qp = induce_optimal_quantum(code, cert, Form::Hermitian, budget);
        if (qp.k != expect_qk || qp.d != expect_d)
            fail_internal("CertificationFailed",
                          "induced quantum parameters differ from the formulas");
        QuantumLrcVerdict verdict =
            verify_optimal_quantum_lrc(code, lp, Form::Hermitian, budget, &groups);
        if (!verdict.optimal)
            fail_internal("CertificationFailed", "the quantum verdict is not optimal");
        return FamilyInstance{family,          std::move(params), std::move(code),
                              std::move(cert), std::move(sp),     qp,
                              verdict,         std::move(prov)};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Budget || e.name() == "CertificationFailed") throw;
        fail_internal("CertificationFailed", e.what());
    }
}

}  // namespace

std::vector<std::string> validate_family1(const Family1Params& p) {
    std::vector<std::string> out;
    if (!prime_power_split(p.q))
        out.push_back("q = " + std::to_string(p.q) + " must be a prime power");
    if (p.q < 5) out.push_back("q = " + std::to_string(p.q) + " must be at least 5");
    if (p.u < 1) out.push_back("u must be positive");
    if (p.v < 1) out.push_back("v must be positive");
    if (p.t < 1) out.push_back("t must be positive");
    if (p.v > p.u)
        out.push_back("v = " + std::to_string(p.v) + " must not exceed u = " +
                      std::to_string(p.u));
    if (p.q >= 1) {
        int64_t cap = static_cast<int64_t>((p.q - 1) / 2) - 1;
        if (static_cast<int64_t>(p.u + p.v) > cap)
            out.push_back("u+v = " + std::to_string(p.u + p.v) +
                          " exceeds floor((q-1)/2)-1 = " + std::to_string(cap));
    }
    return out;
}

std::vector<std::string> validate_family2(const Family2Params& p) {
    std::vector<std::string> out;
    if (!prime_power_split(p.q))
        out.push_back("q = " + std::to_string(p.q) + " must be a prime power");
    if (p.q < 7) out.push_back("q = " + std::to_string(p.q) + " must be at least 7");
    if (p.s < 1) out.push_back("s must be positive");
    if (p.t < 1) out.push_back("t must be positive");
    if (p.v < 6) out.push_back("v = " + std::to_string(p.v) + " must be at least 6");
    if (p.v >= 1 && p.q >= 2 && (p.q - 1) % p.v != 0)
        out.push_back("v = " + std::to_string(p.v) + " must divide q-1 = " +
                      std::to_string(p.q - 1));
    int64_t scap = static_cast<int64_t>(p.v / 2) - 2;
    if (static_cast<int64_t>(p.s) > scap)
        out.push_back("s = " + std::to_string(p.s) + " exceeds floor(v/2)-2 = " +
                      std::to_string(scap));
    int64_t vtcap = static_cast<int64_t>(p.q) + static_cast<int64_t>(p.v) -
                    static_cast<int64_t>(p.s) - 3;
    if (static_cast<int64_t>(p.v * p.t) > vtcap)
        out.push_back("v*t = " + std::to_string(p.v * p.t) + " exceeds q+v-s-3 = " +
                      std::to_string(vtcap));
    return out;
}

std::vector<std::string> validate_family3(const Family3Params& p) {
    std::vector<std::string> out;
    if (!prime_power_split(p.q))
        out.push_back("q = " + std::to_string(p.q) + " must be a prime power");
    if (p.q < 9) out.push_back("q = " + std::to_string(p.q) + " must be at least 9");
    if (p.s < 1) out.push_back("s must be positive");
    if (p.t < 1) out.push_back("t must be positive");
    if (p.v < 8) out.push_back("v = " + std::to_string(p.v) + " must be at least 8");
    if (p.v >= 1 && p.q >= 2 && (p.q - 1) % p.v != 0)
        out.push_back("v = " + std::to_string(p.v) + " must divide q-1 = " +
                      std::to_string(p.q - 1));
    int64_t scap = static_cast<int64_t>(p.v / 2) - 3;
    if (static_cast<int64_t>(p.s) > scap)
        out.push_back("s = " + std::to_string(p.s) + " exceeds floor(v/2)-3 = " +
                      std::to_string(scap));
    int64_t vtcap = static_cast<int64_t>(p.q) + static_cast<int64_t>(p.v) -
                    static_cast<int64_t>(p.s) - 4;
    if (static_cast<int64_t>(p.v * p.t) > vtcap)
        out.push_back("v*t = " + std::to_string(p.v * p.t) + " exceeds q+v-s-4 = " +
                      std::to_string(vtcap));
    return out;
}

FamilyInstance build_family1(const Family1Params& fp, const DistanceBudget& budget) {
    auto violations = validate_family1(fp);
    if (!violations.empty()) fail_user("InvalidParams", join(violations));
    auto split = prime_power_split(fp.q);
    FieldPtr F = Field::create(split->p, 2 * split->m);
    const uint64_t q = fp.q;
    const size_t u = fp.u, v = fp.v, t = fp.t;
    const size_t cols = static_cast<size_t>(q - 1);
    const size_t n = t * cols;

    FamilyProvenance prov;
    prov.g = F->primitive_element();
    for (size_t i = 1; i <= t; ++i) prov.omega.push_back(F->root_of_unity(q - 1, i));

    // Block-diagonal local rows (powers 1..u of each root) over a full-width
    // band (powers u+1..u+v).
    Matrix H(F, t * u + v, n);
    for (size_t bi = 0; bi < t; ++bi) {
        uint64_t w = prov.omega[bi];
        for (size_t j = 0; j < u; ++j)
            for (size_t l = 0; l < cols; ++l)
                H.set(bi * u + j, bi * cols + l, F->pow(w, (j + 1) * l));
        for (size_t j = 0; j < v; ++j)
            for (size_t l = 0; l < cols; ++l)
                H.set(t * u + j, bi * cols + l, F->pow(w, (u + j + 1) * l));
    }

    std::vector<std::vector<size_t>> groups;
    for (size_t bi = 0; bi < t; ++bi) groups.push_back(contiguous(bi * cols, cols));

    LocalityParams lp{static_cast<size_t>(q - 1) - u, u + 1};
    std::map<std::string, uint64_t> params{{"q", q}, {"u", u}, {"v", v}, {"t", t}};
    return certify_instance(1, std::move(params), LinearCode::from_parity(H), groups, lp,
                            n - (t * u + v), u + v + 1, v,
                            static_cast<int64_t>(n) - 2 * static_cast<int64_t>(t * u + v),
                            std::move(prov), budget);
}

FamilyInstance build_family2(const Family2Params& fp, const DistanceBudget& budget) {
    auto violations = validate_family2(fp);
    if (!violations.empty()) fail_user("InvalidParams", join(violations));
    auto split = prime_power_split(fp.q);
    FieldPtr F = Field::create(split->p, 2 * split->m);
    const uint64_t q = fp.q;
    const size_t s = fp.s, v = fp.v, t = fp.t;
    const size_t xlen = static_cast<size_t>(q - 1);
    const size_t block_len = 2 * xlen + v;
    const size_t n = t * block_len;
    const size_t rows = 2 * s * t + 1;

    FamilyProvenance prov;
    prov.g = F->primitive_element();
    for (size_t i = 1; i <= t; ++i) prov.omega.push_back(F->root_of_unity(q - 1, i));
    prov.zeta = F->root_of_unity(v, 1);
    uint64_t lambda = smallest_nonbase(*F, q);
    prov.lambda.assign(t, lambda);

    std::vector<uint64_t> y(v);
    for (size_t l = 0; l < v; ++l) y[l] = F->pow(prov.zeta, l);

    Matrix H(F, rows, n);
    for (size_t bi = 0; bi < t; ++bi) {
        std::vector<uint64_t> x(xlen);
        for (size_t j = 0; j < xlen; ++j) x[j] = F->mul(lambda, F->pow(prov.omega[bi], j));
        // The scalar sets of the two halves must be disjoint, or the local
        // point sets collide and the distance argument collapses.
        for (uint64_t xv : x)
            for (uint64_t yv : y)
                if (xv == yv)
                    fail_internal("CertificationFailed",
                                  "point sets x and y intersect despite the scalar exclusion");
        const size_t base = bi * block_len;
        for (size_t j = 0; j < s; ++j) {
            for (size_t c = 0; c < xlen; ++c) {
                H.set(bi * 2 * s + j, base + c, F->pow(x[c], j + 1));
                H.set(bi * 2 * s + s + j, base + xlen + v + c, F->pow(x[c], j + 1));
            }
            for (size_t c = 0; c < v; ++c) {
                H.set(bi * 2 * s + j, base + xlen + c, F->pow(y[c], j + 1));
                H.set(bi * 2 * s + s + j, base + xlen + c, F->pow(y[c], j + 1));
            }
        }
        for (size_t c = 0; c < xlen; ++c) {
            H.set(rows - 1, base + c, F->pow(x[c], s + 1));
            H.set(rows - 1, base + xlen + v + c, F->pow(x[c], s + 1));
        }
        for (size_t c = 0; c < v; ++c) H.set(rows - 1, base + xlen + c, F->pow(y[c], s + 1));
    }

    // Two overlapping repair groups per super-block, sharing the middle
    // v columns.
    std::vector<std::vector<size_t>> groups;
    for (size_t bi = 0; bi < t; ++bi) {
        groups.push_back(contiguous(bi * block_len, xlen + v));
        groups.push_back(contiguous(bi * block_len + xlen, v + xlen));
    }

    LocalityParams lp{static_cast<size_t>(q) + v - s - 1, s + 1};
    std::map<std::string, uint64_t> params{{"q", q}, {"s", s}, {"v", v}, {"t", t}};
    return certify_instance(2, std::move(params), LinearCode::from_parity(H), groups, lp,
                            n - rows, s + 2, 1,
                            static_cast<int64_t>(n) - 4 * static_cast<int64_t>(s * t) - 2,
                            std::move(prov), budget);
}

FamilyInstance build_family3(const Family3Params& fp, const DistanceBudget& budget) {
    auto violations = validate_family3(fp);
    if (!violations.empty()) fail_user("InvalidParams", join(violations));
    auto split = prime_power_split(fp.q);
    FieldPtr F = Field::create(split->p, 2 * split->m);
    const uint64_t q = fp.q;
    const size_t s = fp.s, v = fp.v, t = fp.t;
    const size_t xlen = static_cast<size_t>(q - 1);
    const size_t block_len = 2 * xlen + v;
    const size_t n = t * block_len;
    const size_t rows = 2 * s * t + 2;

    FamilyProvenance prov;
    prov.g = F->primitive_element();
    for (size_t i = 1; i <= t; ++i) prov.omega.push_back(F->root_of_unity(q - 1, i));
    prov.zeta = F->root_of_unity(v, 1);

    // Lexicographically smallest pair with lambda, mu, and mu/lambda all
    // outside the base subfield.
    uint64_t lambda = 0, mu = 0;
    bool found = false;
    for (uint64_t a = 1; a < F->order() && !found; ++a) {
        if (F->pow(a, q - 1) == 1) continue;
        for (uint64_t b = 1; b < F->order(); ++b) {
            if (F->pow(b, q - 1) == 1) continue;
            if (F->pow(F->div(b, a), q - 1) == 1) continue;
            lambda = a;
            mu = b;
            found = true;
            break;
        }
    }
    if (!found)
        fail_user("NoValidLambdaMu",
                  "no pair (lambda, mu) keeps lambda, mu, and mu/lambda outside the base "
                  "subfield");
    prov.lambda.assign(t, lambda);
    prov.mu.assign(t, mu);

    std::vector<uint64_t> y(v);
    for (size_t l = 0; l < v; ++l) y[l] = F->pow(prov.zeta, l);

    Matrix H(F, rows, n);
    for (size_t bi = 0; bi < t; ++bi) {
        std::vector<uint64_t> x(xlen), z(xlen);
        for (size_t j = 0; j < xlen; ++j) {
            x[j] = F->mul(lambda, F->pow(prov.omega[bi], j));
            z[j] = F->mul(mu, F->pow(prov.omega[bi], j));
        }
        // All three local point sets must be pairwise disjoint.
        for (size_t j = 0; j < xlen; ++j) {
            for (uint64_t yv : y)
                if (x[j] == yv || z[j] == yv)
                    fail_internal("CertificationFailed",
                                  "point sets intersect despite the scalar exclusions");
            for (size_t u2 = 0; u2 < xlen; ++u2)
                if (x[j] == z[u2])
                    fail_internal("CertificationFailed",
                                  "point sets x and z intersect despite the scalar exclusions");
        }
        const size_t base = bi * block_len;
        for (size_t j = 0; j < s; ++j) {
            for (size_t c = 0; c < xlen; ++c) {
                H.set(bi * 2 * s + j, base + c, F->pow(x[c], j + 1));
                H.set(bi * 2 * s + s + j, base + xlen + v + c, F->pow(z[c], j + 1));
            }
            for (size_t c = 0; c < v; ++c) {
                H.set(bi * 2 * s + j, base + xlen + c, F->pow(y[c], j + 1));
                H.set(bi * 2 * s + s + j, base + xlen + c, F->pow(y[c], j + 1));
            }
        }
        for (size_t b = 0; b < 2; ++b) {
            for (size_t c = 0; c < xlen; ++c) {
                H.set(rows - 2 + b, base + c, F->pow(x[c], s + 1 + b));
                H.set(rows - 2 + b, base + xlen + v + c, F->pow(z[c], s + 1 + b));
            }
            for (size_t c = 0; c < v; ++c)
                H.set(rows - 2 + b, base + xlen + c, F->pow(y[c], s + 1 + b));
        }
    }

    std::vector<std::vector<size_t>> groups;
    for (size_t bi = 0; bi < t; ++bi) {
        groups.push_back(contiguous(bi * block_len, xlen + v));
        groups.push_back(contiguous(bi * block_len + xlen, v + xlen));
    }

    LocalityParams lp{static_cast<size_t>(q) + v - s - 1, s + 1};
    std::map<std::string, uint64_t> params{{"q", q}, {"s", s}, {"v", v}, {"t", t}};
    return certify_instance(3, std::move(params), LinearCode::from_parity(H), groups, lp,
                            n - rows, s + 3, 2,
                            static_cast<int64_t>(n) - 4 * static_cast<int64_t>(s * t) - 4,
                            std::move(prov), budget);
}

}  // namespace lrcq
