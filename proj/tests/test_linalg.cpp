#include "oracles.hpp"

#include "msw/error.hpp"
#include "msw/linalg.hpp"
#include "msw/random.hpp"

#include <doctest.h>

using namespace msw;

TEST_CASE("rref of a small matrix over GF(5)") {
    const Field f(5);
    const auto a = Matrix::from_rows(f, {{0, 2, 4}, {1, 1, 1}, {1, 3, 1}});
    const auto e = rref(a);
    CHECK(e.rank == 3);
    CHECK(e.reduced == Matrix::identity(f, 3));
    CHECK(e.transform * a == e.reduced);
}

TEST_CASE("rref invariants on random matrices") {
    Rng rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const Field f(p);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
            Matrix a = rng.matrix(f, r, c);
            if (trial % 3 == 0 && r > 1) a.set_block(r - 1, 0, a.block(0, 0, 1, c));
            const auto e = rref(a);
            CHECK(e.transform * a == e.reduced);
            CHECK(is_invertible(e.transform));
            CHECK(e.pivots.size() == e.rank);
            for (std::size_t i = 0; i < e.rank; ++i) {
                CHECK(e.reduced(i, e.pivots[i]) == 1);
                for (std::size_t k = 0; k < r; ++k)
                    if (k != i) CHECK(e.reduced(k, e.pivots[i]) == 0);
                for (std::size_t j = 0; j < e.pivots[i]; ++j) CHECK(e.reduced(i, j) == 0);
                if (i > 0) CHECK(e.pivots[i] > e.pivots[i - 1]);
            }
            for (std::size_t i = e.rank; i < r; ++i) CHECK(e.reduced.row(i) == Vector(c, 0));
            CHECK(rref(e.reduced).reduced == e.reduced);
            CHECK(e.rank == oracle::brute_rank(a));
        }
    }
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
    Rng rng(5);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        const Field f(p);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 1 + rng.below(5);
            const Matrix a = rng.matrix(f, n, n);
            CHECK(determinant(a) == oracle::leibniz_det(a));
            CHECK(is_invertible(a) == (oracle::leibniz_det(a) != 0));
        }
    }
}

TEST_CASE("inverse and kernel") {
    Rng rng(3);
    const Field f(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        const Matrix a = rng.matrix(f, r, c);
        const auto k = kernel(a);
        CHECK(k.dim() == c - rank(a));
        for (const auto& v : k.basis_vectors()) CHECK(is_zero_vector(a * v));
        if (r == c && is_invertible(a)) {
            CHECK(inverse(a) * a == Matrix::identity(f, r));
            CHECK(a * inverse(a) == Matrix::identity(f, r));
        }
    }
    CHECK_THROWS_AS(inverse(Matrix(f, 2, 3)), NotSquare);
    CHECK_THROWS_AS(inverse(Matrix::from_rows(f, {{1, 2}, {2, 4}})), Singular);
}

TEST_CASE("eigenvalues in the field") {
    const Field f(5);
    CHECK(eigenvalues_in_field(Matrix::from_rows(f, {{2, 1}, {0, 3}})) == std::vector<Scalar>{2, 3});
    // x^2 + 1 has no roots mod 3
    CHECK(eigenvalues_in_field(Matrix::from_rows(Field(3), {{0, -1}, {1, 0}})).empty());
    CHECK(first_nonzero_eigenvalue(Matrix::from_rows(f, {{0, 1}, {0, 0}})) == 0);
    Rng rng(8);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        const Matrix a = rng.matrix(f, n, n);
        const auto ev = eigenvalues_in_field(a);
        CHECK(std::is_sorted(ev.begin(), ev.end()));
        CHECK((first_nonzero_eigenvalue(a) != 0) == oracle::has_nonzero_eigenvalue(a));
    }
}

TEST_CASE("nilpotency and powers") {
    const Field f(3);
    const auto n = Matrix::from_rows(f, {{0, 1, 2}, {0, 0, 1}, {0, 0, 0}});
    CHECK(is_nilpotent(n));
    CHECK(!power(n, 2).is_zero());
    CHECK(power(n, 3).is_zero());
    CHECK(power(n, 0) == Matrix::identity(f, 3));
    CHECK(!is_nilpotent(Matrix::identity(f, 2)));
}
