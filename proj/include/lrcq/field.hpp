#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace lrcq {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^m) with a fixed monic irreducible modulus.  Elements are carried as
// integer encodings enc = sum_i c_i * p^i of their polynomial coordinates,
// so the encoding is part of the external contract and is bit-stable across
// runs.  When no modulus is supplied, a built-in table provides one for every
// prime power up to 2^16 (degree-1 fields use the polynomial x).
//
// Arithmetic uses discrete-log tables for multiplication whenever the order
// fits the table (<= 2^16) and falls back to polynomial arithmetic otherwise.
class Field : public std::enable_shared_from_this<Field> {
public:
    // Both creators validate their inputs: p must be prime (NonPrimeP), an
    // explicit modulus must be monic, degree m, and irreducible
    // (ReducibleModulus); without a modulus, p^m must be covered by the
    // built-in table (UnsupportedOrder).  Results are cached, so two creates
    // with the same spec return the same object.
    static FieldPtr create(uint64_t p, uint32_t m);
    static FieldPtr create(uint64_t p, uint32_t m, const std::vector<uint64_t>& modulus);

    uint64_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint64_t order() const { return order_; }
    // Ascending coefficients, length m+1, leading coefficient 1.
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t inv(uint64_t a) const;  // a != 0
    uint64_t div(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t a, uint64_t e) const;  // pow(0,0) == 1

    // x -> x^q, the subfield Frobenius for GF(q^2); requires q*q == order
    // (BadSubfieldOrder otherwise).
    uint64_t frobenius(uint64_t x, uint64_t q) const;

    // Multiplicative order of a nonzero element.
    uint64_t element_order(uint64_t a) const;

    // Smallest-encoding generator of the multiplicative group (cached).
    uint64_t primitive_element() const;

    // g^(((order-1)/n) * e) where e is the index-th positive integer coprime
    // to n (index >= 1).  Requires n | order-1 (NonDivisorN).
    uint64_t root_of_unity(uint64_t n, uint64_t index) const;

    // Overrides the built-in modulus table for one (p, m) pair; subsequent
    // table-based creates use the given modulus (validated like any explicit
    // modulus).  Existing Field objects are unaffected.
    static void add_modulus_override(uint64_t p, uint32_t m, std::vector<uint64_t> modulus);
    static void clear_modulus_overrides();

    bool same_spec(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    // True for element encodings in range.
    bool valid(uint64_t enc) const { return enc < order_; }

private:
    Field(uint64_t p, uint32_t m, std::vector<uint64_t> modulus);
    void build_tables() const;

    uint64_t p_;
    uint32_t m_;
    uint64_t order_;
    std::vector<uint64_t> modulus_;

    // Lazily built; guarded by a once-flag in the implementation.
    mutable std::vector<uint32_t> exp_, log_;
    mutable std::vector<uint32_t> add_table_;  // only when order is small
    mutable uint64_t generator_ = 0;
    mutable bool tables_ready_ = false;

    uint64_t poly_mul(uint64_t a, uint64_t b) const;
    uint64_t pow_generic(uint64_t a, uint64_t e) const;
};

}  // namespace lrcq
