#include "oracles.hpp"

#include "msw/constructions.hpp"
#include "msw/error.hpp"
#include "msw/linalg.hpp"
#include "msw/primitivity.hpp"
#include "msw/spectral.hpp"

#include <doctest.h>

using namespace msw;

TEST_CASE("alternating and strictly upper-triangular spaces") {
    const Field f(2);
    CHECK(alternating_space(1, f).dim() == 0);
    CHECK(alternating_space(2, f).dim() == 1);
    CHECK(alternating_space(4, f).dim() == 6);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(strict_upper_triangular_space(n, f).dim() == alternating_space(n, f).dim());
    for (const auto& e : oracle::all_elements(alternating_space(3, Field(3)))) CHECK(is_alternating(e));
    // symmetric with zero diagonal is alternating in characteristic 2 only
    CHECK(!is_alternating(Matrix::identity(f, 2) + Matrix::from_rows(f, {{0, 1}, {1, 0}})));
    CHECK(is_alternating(Matrix::from_rows(f, {{0, 1}, {1, 0}})));
    const std::vector<Matrix> e12{Matrix::unit(f, 2, 2, 0, 1)};
    CHECK(strict_upper_triangular_space(2, f) == MatrixSpace::span(f, 2, 2, e12));
    const auto ut3 = oracle::all_elements(strict_upper_triangular_space(3, f));
    CHECK(ut3.size() == 8);
    for (const auto& m : ut3) CHECK(is_nilpotent(m));
}

TEST_CASE("wedge operators compute x wedge y in lexicographic coordinates") {
    const Field f(5);
    Rng rng(1);
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto pairs = wedge_pairs(n);
        CHECK(pairs.size() == n * (n - 1) / 2);
        CHECK(std::is_sorted(pairs.begin(), pairs.end()));
        for (int trial = 0; trial < 20; ++trial) {
            const Vector x = rng.vector(f, n), y = rng.vector(f, n);
            const Vector z = wedge_operator(f, x) * y;
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                const auto [i, j] = pairs[k];
                CHECK(z[k] == f.sub(f.mul(x[i], y[j]), f.mul(x[j], y[i])));
            }
        }
    }
    const auto w = wedge_operator(Field(3), Vector{1, 0, 0});
    CHECK(w == Matrix::from_rows(Field(3), {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST_CASE("wedge spaces have the extremal shape") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Field f(p);
        CHECK(wedge_space(2, f) == MatrixSpace::full(f, 1, 2));
        for (std::size_t n = 2; n <= 4; ++n) {
            const auto w = wedge_space(n, f);
            CHECK(w.dim() == n);
            CHECK(w.rows() == n * (n - 1) / 2);
            const std::size_t r = upper_rank(w).rank;
            CHECK(r == n - 1);
            CHECK(w.rows() == r * (r + 1) / 2);
        }
    }
    CHECK(classify(wedge_space(3, Field(3))).is_primitive());
    CHECK_THROWS_AS(wedge_space(1, Field(3)), PreconditionViolated);
}

TEST_CASE("transformed wedge spaces") {
    const Field f(3);
    CHECK(transformed_wedge_space(3, f, alternating_basis(f, 3), Matrix::identity(f, 3)) == wedge_space(3, f));
    Rng rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const auto t = transformed_wedge_space(3, f, random_alt_basis(rng, f, 3), random_invertible(rng, f, 3));
        CHECK(rank_profile(t) == rank_profile(wedge_space(3, f)));
    }
    CHECK(transformed_wedge_space(2, f, random_alt_basis(rng, f, 2), random_invertible(rng, f, 2)) ==
          MatrixSpace::full(f, 1, 2));
    auto bad = alternating_basis(f, 3);
    bad[2] = bad[1];
    CHECK_THROWS_AS(transformed_wedge_space(3, f, bad, Matrix::identity(f, 3)), NotABasis);
    CHECK_THROWS_AS(transformed_wedge_space(3, f, alternating_basis(f, 3), Matrix(f, 3, 3)), Singular);
}

TEST_CASE("scaled alternating spaces") {
    const Field f(5);
    CHECK(scaled_alternating_space(Matrix::identity(f, 3)) == alternating_space(3, f));
    Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) CHECK(scaled_alternating_space(random_invertible(rng, f, 4)).dim() == 6);
    CHECK_THROWS_AS(scaled_alternating_space(Matrix(f, 2, 2)), Singular);
}

TEST_CASE("isotropy of quadratic forms") {
    CHECK(!is_isotropic(QuadraticForm(Matrix::identity(Field(3), 2))).isotropic);
    const auto i3 = is_isotropic(QuadraticForm(Matrix::identity(Field(3), 3)));
    CHECK(i3.isotropic);
    CHECK(*i3.witness == Vector{1, 1, 1});
    const auto i2 = is_isotropic(QuadraticForm(Matrix::identity(Field(2), 2)));
    CHECK(*i2.witness == Vector{1, 1});
    Rng rng(10);
    for (int trial = 0; trial < 30; ++trial) {
        const Field f(trial % 2 ? 5 : 3);
        const QuadraticForm q(random_invertible(rng, f, 2));
        bool brute = false;
        for (const auto& x : oracle::all_vectors(f, 2))
            if (x != Vector{0, 0} && q.evaluate(x) == 0) brute = true;
        CHECK(is_isotropic(q).isotropic == brute);
    }
}

TEST_CASE("non-isotropic forms are exactly the irreducible trivial-spectrum P Alt_n") {
    const Field f(3);
    std::size_t count = 0;
    for (const auto& v : oracle::all_vectors(f, 4)) {
        const Matrix p(f, 2, 2, v);
        if (!is_invertible(p)) continue;
        ++count;
        const auto s = scaled_alternating_space(p);
        const bool both = is_trivial_spectrum(s).holds && is_irreducible(s).irreducible;
        CHECK(both == !is_isotropic(QuadraticForm(p)).isotropic);
    }
    CHECK(count == 48);
    // Every ternary form over a finite field is isotropic, so the conjunction never holds for n = 3.
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix p = random_invertible(rng, f, 3);
        const auto s = scaled_alternating_space(p);
        CHECK(is_isotropic(QuadraticForm(p)).isotropic);
        CHECK(!(is_trivial_spectrum(s).holds && is_irreducible(s).irreducible));
    }
}

TEST_CASE("random generators are reproducible and well-formed") {
    const Field f(7);
    Rng a(99), b(99);
    CHECK(random_invertible(a, f, 4) == random_invertible(b, f, 4));
    CHECK(random_space(a, f, 2, 3, 4) == random_space(b, f, 2, 3, 4));
    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        CHECK(is_invertible(random_invertible(rng, f, 1 + rng.below(4))));
        const std::size_t dim = rng.below(7);
        CHECK(random_space(rng, f, 2, 3, dim).dim() == dim);
    }
    const auto basis = random_alt_basis(rng, f, 4);
    CHECK(basis.size() == 6);
    CHECK(MatrixSpace::span(f, 4, 4, basis) == alternating_space(4, f));
}
