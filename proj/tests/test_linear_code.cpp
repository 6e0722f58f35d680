#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "lrcq/error.hpp"
#include "lrcq/field.hpp"
#include "lrcq/linear_code.hpp"
#include "lrcq/matrix.hpp"

using lrcq::DistanceBudget;
using lrcq::Error;
using lrcq::ErrorKind;
using lrcq::Field;
using lrcq::FieldPtr;
using lrcq::Form;
using lrcq::LinearCode;
using lrcq::Matrix;

namespace {

LinearCode binary_code_642() {
    FieldPtr f = Field::create(2, 1);
    return LinearCode::from_generator(Matrix::from_rows(
        f, {{1, 0, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 1}, {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}}));
}

LinearCode binary_code_532() {
    FieldPtr f = Field::create(2, 1);
    return LinearCode::from_generator(
        Matrix::from_rows(f, {{1, 0, 1, 0, 0}, {0, 1, 1, 0, 1}, {0, 0, 0, 1, 1}}));
}

LinearCode hamming_743() {
    FieldPtr f = Field::create(2, 1);
    return LinearCode::from_generator(Matrix::from_rows(f, {{1, 0, 0, 0, 0, 1, 1},
                                                            {0, 1, 0, 0, 1, 0, 1},
                                                            {0, 0, 1, 0, 1, 1, 0},
                                                            {0, 0, 0, 1, 1, 1, 1}}));
}

}  // namespace

TEST_CASE("generator and parity matrices are consistent") {
    LinearCode c = binary_code_642();
    CHECK(c.n() == 6);
    CHECK(c.k() == 4);
    CHECK(c.H().rows() == 2);
    CHECK(lrcq::rank(c.G()) == 4);
    CHECK(lrcq::rank(c.H()) == 2);
    CHECK(lrcq::is_zero(lrcq::multiply(c.G(), lrcq::transpose(c.H()))));

    FieldPtr f = Field::create(2, 1);
    CHECK_THROWS_WITH_AS(LinearCode::from_generator(Matrix::from_rows(f, {{1, 1}, {1, 1}})),
                         doctest::Contains("RankDeficientInput"), Error);
}

TEST_CASE("both distance strategies agree on pinned examples") {
    DistanceBudget budget;
    struct Entry {
        LinearCode code;
        size_t d;
    };
    std::vector<Entry> entries;
    entries.push_back({binary_code_642(), 2});
    entries.push_back({binary_code_532(), 2});
    entries.push_back({hamming_743(), 3});
    entries.push_back({lrcq::dual_euclidean(hamming_743()), 4});  // simplex [7,3,4]
    for (auto& e : entries) {
        CHECK(lrcq::min_distance_by_enumeration(e.code, budget) == e.d);
        CHECK(lrcq::min_distance_by_column_search(e.code, budget) == e.d);
        CHECK(e.code.min_distance(budget) == e.d);
        CHECK(e.code.cached_distance() == e.d);
    }
}

TEST_CASE("distance strategies agree on random codes over four fields") {
    std::mt19937 rng(20240817);
    DistanceBudget budget;
    const std::vector<std::pair<uint64_t, uint32_t>> specs = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
    for (auto [p, m] : specs) {
        FieldPtr f = Field::create(p, m);
        std::uniform_int_distribution<uint64_t> dist(0, f->order() - 1);
        int built = 0;
        while (built < 12) {
            size_t n = 4 + rng() % 5, k = 1 + rng() % std::min<size_t>(n - 1, 4);
            Matrix g(f, k, n);
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < n; ++j) g.set(i, j, dist(rng));
            if (lrcq::rank(g) != k) continue;
            LinearCode c = LinearCode::from_generator(g);
            CAPTURE(p);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(lrcq::min_distance_by_enumeration(c, budget) ==
                  lrcq::min_distance_by_column_search(c, budget));
            ++built;
        }
    }
}

TEST_CASE("column-search witness is the lexicographically first minimal set") {
    FieldPtr f = Field::create(2, 1);
    LinearCode c =
        LinearCode::from_generator(Matrix::from_rows(f, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    DistanceBudget budget;
    std::vector<size_t> witness;
    CHECK(lrcq::min_distance_by_column_search(c, budget, &witness) == 2);
    // H's first two columns are equal, so {0,1} is the first dependent pair.
    CHECK(witness == std::vector<size_t>{0, 1});
}

TEST_CASE("degenerate codes have conventional distances") {
    FieldPtr f = Field::create(2, 1);
    DistanceBudget budget;
    LinearCode zero = LinearCode::from_parity(Matrix::identity(f, 3));
    CHECK(zero.k() == 0);
    CHECK(zero.min_distance(budget) == 0);
    LinearCode full = LinearCode::from_generator(Matrix::identity(f, 3));
    CHECK(full.H().rows() == 0);
    CHECK(full.min_distance(budget) == 1);
}

TEST_CASE("distance searches respect their budgets") {
    LinearCode c = binary_code_642();
    DistanceBudget tiny;
    tiny.max_codewords = 3;  // 2^4 = 16 messages exceed this
    CHECK_THROWS_WITH_AS(lrcq::min_distance_by_enumeration(c, tiny),
                         doctest::Contains("BudgetExceeded"), Error);
    DistanceBudget starved;
    starved.max_subsets = 1;
    try {
        lrcq::min_distance_by_column_search(c, starved);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Budget);
        CHECK(e.name() == "BudgetExceeded");
    }
}

TEST_CASE("for_each_codeword visits every nonzero codeword once") {
    FieldPtr f = Field::create(3, 1);
    LinearCode c = LinearCode::from_generator(Matrix::from_rows(f, {{1, 1}}));
    DistanceBudget budget;
    std::vector<std::vector<uint64_t>> seen;
    lrcq::for_each_codeword(c, budget, [&](const std::vector<uint64_t>& w) {
        seen.push_back(w);
        return true;
    });
    CHECK(seen.size() == 2);  // (1,1) and (2,2) in some order
    size_t stopped = 0;
    lrcq::for_each_codeword(c, budget, [&](const std::vector<uint64_t>&) {
        ++stopped;
        return false;
    });
    CHECK(stopped == 1);
}

TEST_CASE("puncturing restricts to the chosen coordinates") {
    FieldPtr f = Field::create(2, 1);
    LinearCode c =
        LinearCode::from_generator(Matrix::from_rows(f, {{1, 0, 1, 0}, {0, 1, 1, 1}}));
    LinearCode punct = c.puncture({0, 1, 3});
    CHECK(punct.n() == 3);
    CHECK(punct.k() == 2);
    CHECK(lrcq::same_row_space(punct.G(), Matrix::from_rows(f, {{1, 0, 0}, {0, 1, 1}})));

    // Rank may drop: both generator rows agree on columns 2 and 3.
    LinearCode rep = LinearCode::from_generator(Matrix::from_rows(f, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    LinearCode dropped = rep.puncture({0, 1});
    CHECK(dropped.k() == 1);

    CHECK_THROWS_WITH_AS(c.puncture({}), doctest::Contains("EmptySupport"), Error);
    CHECK_THROWS_WITH_AS(c.puncture({3, 1}), doctest::Contains("NotStrictlyIncreasing"), Error);
    CHECK_THROWS_WITH_AS(c.puncture({0, 4}), doctest::Contains("IndexOutOfRange"), Error);
}

TEST_CASE("Euclidean duality swaps generator and parity roles") {
    LinearCode c = binary_code_532();
    LinearCode dual = lrcq::dual_euclidean(c);
    CHECK(dual.n() == 5);
    CHECK(dual.k() == 2);
    CHECK(lrcq::same_row_space(dual.G(), c.H()));
    LinearCode dd = lrcq::dual_euclidean(dual);
    CHECK(lrcq::same_row_space(dd.G(), c.G()));
}

TEST_CASE("Hermitian duality conjugates the Euclidean dual") {
    FieldPtr f = Field::create(2, 2);
    LinearCode c = LinearCode::from_generator(Matrix::from_rows(f, {{1, 2}}));
    LinearCode herm = lrcq::dual_hermitian(c);
    LinearCode eucl = lrcq::dual_euclidean(c);
    CHECK(herm.G() == lrcq::frobenius_entrywise(eucl.G(), 2));
    // This code is Hermitian self-dual.
    CHECK(lrcq::same_row_space(herm.G(), c.G()));
    CHECK(lrcq::is_self_orthogonal(c, Form::Hermitian));
    CHECK(lrcq::is_dual_containing(c, Form::Hermitian));
    DistanceBudget budget;
    CHECK(c.min_distance(budget) == 2);
    CHECK(herm.min_distance(budget) == 2);
}

TEST_CASE("quadratic subfield orders") {
    CHECK(lrcq::quadratic_subfield_order(*Field::create(2, 2)) == 2);
    CHECK(lrcq::quadratic_subfield_order(*Field::create(3, 2)) == 3);
    CHECK(lrcq::quadratic_subfield_order(*Field::create(7, 2)) == 7);
    CHECK(lrcq::quadratic_subfield_order(*Field::create(2, 4)) == 4);
    CHECK_THROWS_WITH_AS(lrcq::quadratic_subfield_order(*Field::create(2, 3)),
                         doctest::Contains("NotQuadraticField"), Error);
    CHECK_THROWS_WITH_AS(lrcq::quadratic_subfield_order(*Field::create(3, 1)),
                         doctest::Contains("NotQuadraticField"), Error);
}

TEST_CASE("MDS detection meets the Singleton bound exactly") {
    DistanceBudget budget;
    FieldPtr f5 = Field::create(5, 1);
    // Reed-Solomon [4,2,3]: evaluations of degree-<2 polynomials at 0,1,2,3.
    LinearCode rs =
        LinearCode::from_generator(Matrix::from_rows(f5, {{1, 1, 1, 1}, {0, 1, 2, 3}}));
    CHECK(rs.min_distance(budget) == 3);
    CHECK(lrcq::is_mds(rs, budget));

    FieldPtr f2 = Field::create(2, 1);
    LinearCode not_mds =
        LinearCode::from_generator(Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK_FALSE(lrcq::is_mds(not_mds, budget));
    CHECK(lrcq::is_mds(LinearCode::from_generator(Matrix::identity(f2, 3)), budget));
}

TEST_CASE("self-orthogonality of explicit rows") {
    FieldPtr f2 = Field::create(2, 1);
    Matrix even = Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(lrcq::rows_self_orthogonal(even, Form::Euclidean));
    Matrix odd = Matrix::from_rows(f2, {{1, 1, 1, 0}});
    CHECK_FALSE(lrcq::rows_self_orthogonal(odd, Form::Euclidean));

    FieldPtr f4 = Field::create(2, 2);
    Matrix herm = Matrix::from_rows(f4, {{1, 2}});
    CHECK(lrcq::rows_self_orthogonal(herm, Form::Hermitian));
    // <(1,0),(1,0)> = 1 under the Hermitian form; note (1,1) would pass, as
    // 1*conj(1) + 1*conj(1) vanishes in characteristic 2.
    Matrix not_herm = Matrix::from_rows(f4, {{1, 0}});
    CHECK_FALSE(lrcq::rows_self_orthogonal(not_herm, Form::Hermitian));
}

TEST_CASE("dual containment in both forms") {
    FieldPtr f2 = Field::create(2, 1);
    LinearCode self_dual =
        LinearCode::from_generator(Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK(lrcq::is_dual_containing(self_dual, Form::Euclidean));
    CHECK(lrcq::is_self_orthogonal(self_dual, Form::Euclidean));

    LinearCode not_containing = binary_code_642();
    CHECK_FALSE(lrcq::is_dual_containing(not_containing, Form::Euclidean));
    CHECK_THROWS_WITH_AS(lrcq::is_dual_containing(not_containing, Form::Hermitian),
                         doctest::Contains("NotQuadraticField"), Error);
}
