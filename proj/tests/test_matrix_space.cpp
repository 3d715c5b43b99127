#include "oracles.hpp"

#include "msw/constructions.hpp"
#include "msw/error.hpp"
#include "msw/linalg.hpp"
#include "msw/matrix_space.hpp"

#include <doctest.h>

using namespace msw;

TEST_CASE("spans are canonical") {
    const Field f(3);
    const auto a = Matrix::from_rows(f, {{1, 2}, {0, 1}});
    const auto b = Matrix::from_rows(f, {{0, 1}, {1, 0}});
    const std::vector<Matrix> g1{a, b}, g2{a.scaled(2), b, a + b};
    const auto s = MatrixSpace::span(f, 2, 2, g1);
    CHECK(s.dim() == 2);
    CHECK(s == MatrixSpace::span(f, 2, 2, g2));
    CHECK(MatrixSpace::span(f, 2, 2, s.basis()) == s);
    CHECK(s.contains(a + b.scaled(2)));
    CHECK(!s.contains(Matrix::identity(f, 2)));
    CHECK_THROWS_AS(s.coefficients(Matrix::identity(f, 2)), NotMember);
    const auto c = s.coefficients(a + b);
    CHECK(s.combination(c) == a + b);
}

TEST_CASE("element enumeration is little-endian in basis coefficients") {
    const Field f(3);
    const auto s = MatrixSpace::full(f, 1, 2);
    CHECK(s.element_count() == 9);
    CHECK(s.element(0).is_zero());
    CHECK(s.element(1) == s.basis()[0]);
    CHECK(s.element(3) == s.basis()[1]);
    CHECK(s.element(5) == s.basis()[0].scaled(2) + s.basis()[1]);
    std::set<std::vector<Scalar>> seen;
    std::uint64_t k = 0;
    for (const auto& m : elements(s)) {
        CHECK(m == s.element(k++));
        seen.insert(vectorize(m));
    }
    CHECK(seen.size() == 9);
}

TEST_CASE("enumeration past the cap is refused") {
    const auto s = MatrixSpace::full(Field(5), 3, 3);
    CHECK_THROWS_AS(elements(s, 1000), EnumerationTooLarge);
    CHECK_THROWS_AS(upper_rank(s, 1000), EnumerationTooLarge);
}

TEST_CASE("upper rank and rank profile against brute force") {
    Rng rng(21);
    for (std::uint32_t p : {2u, 3u}) {
        const Field f(p);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t r = 1 + rng.below(3), c = 1 + rng.below(3);
            const auto s = random_space(rng, f, r, c, rng.below(std::min<std::size_t>(r * c, 4) + 1));
            const auto u = upper_rank(s);
            CHECK(u.rank == oracle::brute_upper_rank(s));
            CHECK(s.contains(u.witness));
            CHECK(rank(u.witness) == u.rank);
            const auto prof = rank_profile(s);
            std::vector<std::uint64_t> counts(std::min(r, c) + 1, 0);
            for (const auto& m : oracle::all_elements(s)) ++counts[oracle::brute_rank(m)];
            CHECK(prof.counts == counts);
        }
    }
}

TEST_CASE("equivalence preserves upper rank and rank profile") {
    Rng rng(4);
    const Field f(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng.below(3), c = 1 + rng.below(3);
        const auto s = random_space(rng, f, r, c, 1 + rng.below(std::min<std::size_t>(r * c, 2)));
        const auto t = transform_equivalent(s, random_invertible(rng, f, r), random_invertible(rng, f, c));
        CHECK(t.dim() == s.dim());
        CHECK(upper_rank(t).rank == upper_rank(s).rank);
        CHECK(rank_profile(t) == rank_profile(s));
    }
    CHECK_THROWS_AS(transform_equivalent(MatrixSpace::full(f, 2, 2), Matrix(f, 2, 2), Matrix::identity(f, 2)), Singular);
}

TEST_CASE("column restriction and row compression") {
    const Field f2(2);
    const auto m12 = MatrixSpace::full(f2, 1, 2);
    const auto line = VectorSubspace::span(f2, 2, std::vector<Vector>{{1, 1}});
    CHECK(upper_rank(restrict_columns(m12, line)).rank == 1);

    const Field f5(5);
    const auto ut3 = strict_upper_triangular_space(3, f5);
    const auto e1 = VectorSubspace::span(f5, 3, std::vector<Vector>{{1, 0, 0}});
    CHECK(restrict_columns(ut3, e1).dim() == 0);

    const auto m21 = MatrixSpace::full(f2, 2, 1);
    const auto first = VectorSubspace::span(f2, 2, std::vector<Vector>{{1, 0}});
    CHECK(compress_rows(m21, first) == MatrixSpace::full(f2, 1, 1));
    CHECK(compress_rows(ut3, VectorSubspace::full(f5, 3)) == ut3);

    Rng rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const auto s = random_space(rng, Field(3), 3, 3, 1 + rng.below(3));
        const auto w = random_subspace_of(rng, MatrixSpace::full(Field(3), 1, 3), 2);
        const auto hyperplane = VectorSubspace::span(Field(3), 3, std::vector<Vector>{w.basis()[0].row(0), w.basis()[1].row(0)});
        const auto restricted = restrict_columns(s, hyperplane);
        const auto urk = upper_rank(s).rank;
        CHECK(upper_rank(restricted).rank <= urk);
        CHECK(upper_rank(restricted).rank + 1 >= urk);
    }
}

TEST_CASE("sum, intersection and transpose") {
    const Field f(3);
    const auto ut = strict_upper_triangular_space(3, f);
    const auto lt = ut.transpose();
    CHECK(ut.sum(lt).dim() == 6);
    CHECK(ut.intersection(lt).dim() == 0);
    CHECK(ut.intersection(alternating_space(3, f)).dim() == 0);
    CHECK(ut.sum(alternating_space(3, f)).contains(lt));
}
