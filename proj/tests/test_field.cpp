#include "doctest.h"

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "lrcq/error.hpp"
#include "lrcq/field.hpp"

using lrcq::Error;
using lrcq::ErrorKind;
using lrcq::Field;
using lrcq::FieldPtr;

namespace {

// Encodes a modulus polynomial the same way elements are encoded: sum of
// coefficient_i * p^i.
uint64_t modulus_enc(const Field& f) {
    uint64_t enc = 0, weight = 1;
    for (uint64_t c : f.modulus()) {
        enc += c * weight;
        weight *= f.p();
    }
    return enc;
}

void check_axioms_exhaustive(const FieldPtr& fp) {
    const Field& f = *fp;
    uint64_t n = f.order();
    // Identities and inverses.
    for (uint64_t a = 0; a < n; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
        CHECK(f.add(a, f.neg(a)) == 0);
        CHECK(f.sub(a, a) == 0);
        if (a != 0) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.div(a, a) == 1);
        }
    }
    // Commutativity, associativity, distributivity.
    for (uint64_t a = 0; a < n; ++a)
        for (uint64_t b = 0; b < n; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (uint64_t c = 0; c < n; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
}

}  // namespace

TEST_CASE("field axioms hold exhaustively on small fields") {
    const std::vector<std::pair<uint64_t, uint32_t>> specs = {
        {2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}};
    for (auto [p, m] : specs) {
        CAPTURE(p);
        CAPTURE(m);
        check_axioms_exhaustive(Field::create(p, m));
    }
}

TEST_CASE("characteristic and Frobenius additivity") {
    const std::vector<std::pair<uint64_t, uint32_t>> specs = {
        {2, 2}, {2, 3}, {3, 2}, {5, 2}, {7, 2}};
    for (auto [p, m] : specs) {
        FieldPtr fp = Field::create(p, m);
        const Field& f = *fp;
        uint64_t acc = 0;
        for (uint64_t i = 0; i < p; ++i) acc = f.add(acc, 1);
        CHECK(acc == 0);  // characteristic p
        for (uint64_t a = 0; a < f.order(); ++a)
            for (uint64_t b = 0; b < f.order(); ++b)
                CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
    }
}

TEST_CASE("power conventions") {
    FieldPtr fp = Field::create(3, 2);
    const Field& f = *fp;
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 5) == 0);
    for (uint64_t a = 0; a < f.order(); ++a) {
        CHECK(f.pow(a, 0) == 1);
        uint64_t acc = 1;
        for (uint64_t e = 1; e <= 10; ++e) {
            acc = f.mul(acc, a);
            CHECK(f.pow(a, e) == acc);
        }
    }
}

TEST_CASE("built-in moduli are pinned") {
    // (p, m, encoding of the monic irreducible modulus).  These values are
    // frozen: changing any of them silently changes every serialized matrix
    // over the corresponding field.
    struct Entry {
        uint64_t p;
        uint32_t m;
        uint64_t enc;
    };
    const Entry entries[] = {
        {2, 2, 7},    {2, 3, 11},   {2, 4, 19},    {2, 6, 67},   {2, 8, 283},
        {2, 12, 4105}, {2, 16, 65579}, {3, 2, 10},  {3, 4, 86},   {5, 2, 27},
        {7, 2, 50},   {11, 2, 122}, {13, 2, 171},  {17, 2, 292},
    };
    for (const auto& e : entries) {
        CAPTURE(e.p);
        CAPTURE(e.m);
        FieldPtr f = Field::create(e.p, e.m);
        CHECK(modulus_enc(*f) == e.enc);
        uint64_t expect_order = 1;
        for (uint32_t i = 0; i < e.m; ++i) expect_order *= e.p;
        CHECK(f->order() == expect_order);
    }
}

TEST_CASE("prime fields use the modulus x") {
    FieldPtr f = Field::create(13, 1);
    CHECK(f->modulus() == std::vector<uint64_t>{0, 1});
    CHECK(f->order() == 13);
    CHECK(f->add(7, 9) == 3);
    CHECK(f->mul(7, 9) == 63 % 13);
}

TEST_CASE("primitive elements are the smallest-encoding generators") {
    struct Entry {
        uint64_t p;
        uint32_t m;
        uint64_t g;
    };
    const Entry entries[] = {
        {2, 1, 1},  {3, 1, 2},  {5, 1, 2},  {7, 1, 3},  {11, 1, 2}, {13, 1, 2},
        {2, 2, 2},  {2, 4, 2},  {2, 6, 2},  {3, 2, 4},  {3, 4, 3},  {5, 2, 6},
        {7, 2, 9},  {11, 2, 15}, {13, 2, 15}, {17, 2, 19},
    };
    for (const auto& e : entries) {
        CAPTURE(e.p);
        CAPTURE(e.m);
        FieldPtr f = Field::create(e.p, e.m);
        uint64_t g = f->primitive_element();
        CHECK(g == e.g);
        CHECK(f->element_order(g) == f->order() - 1);
        // No smaller nonzero encoding generates the whole group.
        for (uint64_t a = 1; a < g; ++a) CHECK(f->element_order(a) < f->order() - 1);
    }
}

TEST_CASE("roots of unity have exact order and are pinned for GF(121)") {
    FieldPtr f = Field::create(11, 2);
    CHECK(f->primitive_element() == 15);
    CHECK(f->root_of_unity(10, 1) == 6);
    CHECK(f->root_of_unity(10, 2) == 7);
    CHECK(f->element_order(6) == 10);
    CHECK(f->element_order(7) == 10);

    // Powers of a (q-1)th root enumerate the base-field multiplicative group.
    std::set<uint64_t> powers;
    for (uint64_t j = 0; j < 10; ++j) powers.insert(f->pow(6, j));
    CHECK(powers.size() == 10);
    for (uint64_t x : powers) CHECK(f->pow(x, 10) == 1);

    // Any valid index yields the same subgroup.
    FieldPtr g81 = Field::create(3, 4);
    for (uint64_t idx = 1; idx <= 4; ++idx)
        CHECK(g81->element_order(g81->root_of_unity(8, idx)) == 8);

    CHECK_THROWS_WITH_AS(f->root_of_unity(7, 1), doctest::Contains("NonDivisorN"), Error);
}

TEST_CASE("subfield Frobenius is the conjugation of GF(q^2)") {
    FieldPtr fp = Field::create(7, 2);
    const Field& f = *fp;
    for (uint64_t x = 0; x < f.order(); ++x) {
        CHECK(f.frobenius(x, 7) == f.pow(x, 7));
        CHECK(f.frobenius(f.frobenius(x, 7), 7) == x);  // involution
    }
    // Fixed points are exactly the prime subfield copy.
    size_t fixed = 0;
    for (uint64_t x = 0; x < f.order(); ++x)
        if (f.frobenius(x, 7) == x) ++fixed;
    CHECK(fixed == 7);

    FieldPtr g8 = Field::create(2, 3);
    CHECK_THROWS_WITH_AS(g8->frobenius(1, 2), doctest::Contains("BadSubfieldOrder"), Error);
}

TEST_CASE("field construction rejects bad inputs") {
    CHECK_THROWS_WITH_AS(Field::create(4, 1), doctest::Contains("NonPrimeP"), Error);
    CHECK_THROWS_WITH_AS(Field::create(1, 1), doctest::Contains("NonPrimeP"), Error);
    CHECK_THROWS_WITH_AS(Field::create(2, 17), doctest::Contains("UnsupportedOrder"), Error);
    // x^2 + 1 = (x+1)^2 over GF(2).
    CHECK_THROWS_WITH_AS(Field::create(2, 2, {1, 0, 1}), doctest::Contains("ReducibleModulus"),
                         Error);
    // Wrong degree / not monic / coefficient out of range.
    CHECK_THROWS_WITH_AS(Field::create(2, 2, {1, 1}), doctest::Contains("ReducibleModulus"),
                         Error);
    CHECK_THROWS_WITH_AS(Field::create(3, 2, {1, 0, 2}), doctest::Contains("ReducibleModulus"),
                         Error);
    CHECK_THROWS_WITH_AS(Field::create(3, 2, {4, 0, 1}), doctest::Contains("ReducibleModulus"),
                         Error);

    try {
        Field::create(6, 1);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::User);
        CHECK(e.name() == "NonPrimeP");
    }
}

TEST_CASE("division by zero is rejected") {
    FieldPtr f = Field::create(5, 1);
    CHECK_THROWS_WITH_AS(f->inv(0), doctest::Contains("DivisionByZero"), Error);
    CHECK_THROWS_WITH_AS(f->div(3, 0), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("field creation is cached per modulus") {
    FieldPtr a = Field::create(3, 2);
    FieldPtr b = Field::create(3, 2);
    CHECK(a.get() == b.get());
    FieldPtr c = Field::create(3, 2, {2, 1, 1});  // x^2 + x + 2, also irreducible
    CHECK(c.get() != a.get());
    CHECK(a->same_spec(*b));
    CHECK_FALSE(a->same_spec(*c));
}

TEST_CASE("modulus overrides redirect table lookups") {
    Field::clear_modulus_overrides();
    FieldPtr before = Field::create(3, 2);
    CHECK(before->modulus() == std::vector<uint64_t>{1, 0, 1});

    Field::add_modulus_override(3, 2, {2, 1, 1});
    FieldPtr after = Field::create(3, 2);
    CHECK(after->modulus() == std::vector<uint64_t>{2, 1, 1});
    check_axioms_exhaustive(after);

    Field::clear_modulus_overrides();
    FieldPtr restored = Field::create(3, 2);
    CHECK(restored.get() == before.get());
}

TEST_CASE("element encodings validate against the order") {
    FieldPtr f = Field::create(3, 2);
    CHECK(f->valid(0));
    CHECK(f->valid(8));
    CHECK_FALSE(f->valid(9));
}
