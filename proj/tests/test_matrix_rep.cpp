#include "doctest.h"

#include <random>

#include "cuntz/endomorphism.hpp"
#include "cuntz/matrix_rep.hpp"
#include "fixtures.hpp"

using namespace cuntz;

TEST_CASE("word indexing is lexicographic, first letter most significant") {
    CHECK(word_index({1, 1}, 2) == 0);
    CHECK(word_index({1, 2}, 2) == 1);
    CHECK(word_index({2, 1}, 2) == 2);
    CHECK(word_index({2, 2}, 2) == 3);
    CHECK(word_index({3, 1, 2}, 3) == 2 * 9 + 0 * 3 + 1);
    for (int n : {2, 3}) {
        for (int k = 0; k <= 3; ++k) {
            for (long i = 0; i < level_dim(n, k); ++i) {
                CHECK(word_index(word_at(i, n, k), n) == i);
            }
        }
    }
}

TEST_CASE("level cap") {
    CHECK(level_dim(2, 0) == 1);
    CHECK(level_dim(2, 3) == 8);
    CHECK_THROWS_AS(level_dim(2, 13), resource_error);
    auto saved = limits();
    limits().max_level = 2;
    CHECK_THROWS_AS(level_dim(2, 3), resource_error);
    limits() = saved;
}

TEST_CASE("to_matrix on a concrete permutation unitary") {
    Matrix m = to_matrix(fixtures::block_swap_u(), 2);
    REQUIRE(m.rows() == 4);
    // swaps words 11 and 12, fixes 21 and 22
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 1) = 1.0;
    expected(1, 0) = 1.0;
    expected(2, 2) = 1.0;
    expected(3, 3) = 1.0;
    CHECK((m - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("to_matrix validates input") {
    CHECK((to_matrix(AlgebraElement::identity(2), 2) -
           Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(to_matrix(AlgebraElement::word(2, {1}, {}), 1), value_error);
    CHECK_THROWS_AS(to_matrix(fixtures::block_swap_u(), 1), value_error);
}

TEST_CASE("matrix representation is a *-homomorphism on F_n^k") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix a(4, 4), b(4, 4);
        for (long r = 0; r < 4; ++r) {
            for (long c = 0; c < 4; ++c) {
                a(r, c) = Complex(gauss(rng), gauss(rng));
                b(r, c) = Complex(gauss(rng), gauss(rng));
            }
        }
        auto ea = from_matrix(a, 2, 2);
        auto eb = from_matrix(b, 2, 2);
        CHECK((to_matrix(ea * eb, 2) - a * b).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((to_matrix(ea.adjoint(), 2) - a.adjoint()).cwiseAbs().maxCoeff() <
              1e-15);
        CHECK((to_matrix(ea + eb, 2) - (a + b)).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("from_matrix round trip") {
    std::mt19937_64 rng(12);
    Matrix u = random_unitary_matrix(8, rng);
    auto e = from_matrix(u, 2, 3);
    CHECK((to_matrix(e, 3) - u).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(from_matrix(Matrix::Identity(3, 3), 2, 2), usage_error);
}

TEST_CASE("unitarity tests") {
    CHECK(is_unitary(fixtures::block_swap_u(), 2));
    CHECK(is_unitary(fixtures::su2_real(0.3), 1));
    CHECK(is_unitary(fixtures::rot45_z(), 1));
    AlgebraElement bad(2);
    bad.add_term({1}, {1}, 0.5);
    bad.add_term({2}, {2}, 1.0);
    CHECK_FALSE(is_unitary(bad, 1));
}

TEST_CASE("monomial test") {
    CHECK(is_monomial(fixtures::block_swap_u(), 2));
    CHECK(is_monomial(AlgebraElement::identity(2), 1));
    CHECK_FALSE(is_monomial(fixtures::su2_real(0.3), 1));
    // phases on a permutation stay monomial
    AlgebraElement m(2);
    m.add_term({1}, {2}, Complex(0.0, 1.0));
    m.add_term({2}, {1}, 1.0);
    CHECK(is_monomial(m, 1));
    AlgebraElement bad(2);
    bad.add_term({1}, {1}, 2.0);
    CHECK_THROWS_AS(is_monomial(bad, 1), value_error);
}

TEST_CASE("matrix_is_diagonal scales its tolerance") {
    Matrix m = Matrix::Identity(4, 4);
    CHECK(matrix_is_diagonal(m, 1e-9));
    m(0, 1) = 1e-6;
    CHECK_FALSE(matrix_is_diagonal(m, 1e-9));
    CHECK(matrix_is_diagonal(m, 1e-5));
}

TEST_CASE("subspace growth and containment") {
    Subspace s(3, 1e-9);
    CHECK(s.dimension() == 0);
    Vector e1 = Vector::Zero(3), e2 = Vector::Zero(3);
    e1(0) = 1.0;
    e2(1) = 1.0;
    CHECK(s.add(e1));
    CHECK_FALSE(s.add(2.0 * e1));
    CHECK(s.add(e1 + e2));
    CHECK(s.dimension() == 2);
    CHECK(s.contains(e2));
    Vector e3 = Vector::Zero(3);
    e3(2) = 1.0;
    CHECK_FALSE(s.contains(e3));
    CHECK(s.extend({e3}));
    CHECK(s.dimension() == 3);
    CHECK_FALSE(s.extend({e1, e2, e3}));
}

TEST_CASE("subspace distance vanishes for equal spans") {
    std::mt19937_64 rng(13);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Subspace a(4, 1e-10), b(4, 1e-10);
    Vector v1(4), v2(4);
    for (int i = 0; i < 4; ++i) {
        v1(i) = Complex(gauss(rng), gauss(rng));
        v2(i) = Complex(gauss(rng), gauss(rng));
    }
    a.extend({v1, v2});
    b.extend({v1 + v2, v1 - v2});
    CHECK(subspace_distance(a, b) < 1e-9);
    Subspace c(4, 1e-10);
    c.add(v1);
    CHECK(subspace_distance(a, c) > 0.1);
}
