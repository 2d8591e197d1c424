#include "dialg/error.hpp"
#include "dialg/matrix.hpp"

#include <doctest.h>

#include <random>

using namespace dialg;

namespace {

const Field Q = Field::rationals();

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng, long range = 2)
{
    std::uniform_int_distribution<long> dist(-range, range);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Scalar(f, dist(rng));
    return m;
}

// Counts kernel vectors by enumerating all of GF(p)^cols.
std::size_t brute_kernel_size(const Matrix& m)
{
    const std::uint64_t p = m.field().characteristic();
    std::size_t count = 0;
    std::vector<long> digits(m.cols(), 0);
    while (true) {
        Vector v;
        for (long d : digits)
            v.emplace_back(m.field(), d);
        if (is_zero(m.apply(v)))
            ++count;
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == static_cast<long>(p))
            digits[k++] = 0;
        if (k == digits.size())
            break;
    }
    return count;
}

} // namespace

TEST_CASE("scalar arithmetic over the rationals")
{
    const Scalar a = Scalar::parse(Q, "3/4");
    const Scalar b = Scalar::parse(Q, "-1/6");
    CHECK((a + b).to_string() == "7/12");
    CHECK((a * b).to_string() == "-1/8");
    CHECK((a / b).to_string() == "-9/2");
    CHECK(Scalar::parse(Q, "4/6").to_string() == "2/3");
    CHECK(Scalar::parse(Q, "-5").to_string() == "-5");
    CHECK_THROWS_AS(Scalar(Q).inverse(), Error);
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), Error);
    CHECK_THROWS_AS(Scalar::parse(Q, "x"), Error);
    CHECK_THROWS_AS(Scalar::parse(Q, "1.5"), Error);
}

TEST_CASE("scalar arithmetic over GF(p)")
{
    const Field f = Field::gf(7);
    CHECK(f.name() == "gf 7");
    const Scalar three(f, 3L);
    CHECK((three * three).to_string() == "2");
    CHECK(three.inverse().to_string() == "5");
    CHECK(Scalar(f, -1L).to_string() == "6");
    CHECK(Scalar::parse(f, "1/3").to_string() == "5");
    CHECK((Scalar(f, 5L) - Scalar(f, 6L)).to_string() == "6");
    CHECK_THROWS_AS(Field::gf(8), Error);
    CHECK_THROWS_AS(Field::gf(1), Error);
}

TEST_CASE("mixing fields is an error")
{
    const Scalar a(Q, 1L);
    const Scalar b(Field::gf(5), 1L);
    try {
        (void)(a + b);
        FAIL("expected MixedFields");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MixedFields);
    }
    Matrix m(Q, 1, 2);
    m(0, 1) = b;
    CHECK_THROWS_AS(rank(m), Error);
}

TEST_CASE("rank examples")
{
    CHECK(rank(Matrix::identity(Q, 2)) == 2);
    CHECK(rank(Matrix::from_ints(Q, {{1}, {1}})) == 1);
    CHECK(rank(Matrix(Q, 0, 4)) == 0);
    CHECK(rank(Matrix(Q, 3, 3)) == 0);
    CHECK(rank(Matrix::from_ints(Q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
    // Full rank over Q, singular mod 3 (det = 3).
    const auto m = Matrix::from_ints(Q, {{1, 1}, {1, -2}});
    CHECK(rank(m) == 2);
    CHECK(rank(Matrix::from_ints(Field::gf(3), {{1, 1}, {1, -2}})) == 1);
}

TEST_CASE("solve examples")
{
    const auto id = Matrix::identity(Q, 3);
    const Vector b{Scalar(Q, 4L), Scalar(Q, -2L), Scalar::parse(Q, "1/3")};
    CHECK(*solve(id, b) == b);

    const auto col = Matrix::from_ints(Q, {{1}, {1}});
    auto x = solve(col, Vector{Scalar(Q, 1L), Scalar(Q, 1L)});
    REQUIRE(x);
    CHECK(*x == Vector{Scalar(Q, 1L)});
    CHECK_FALSE(solve(col, Vector{Scalar(Q, 1L), Scalar(Q, 0L)}));
    CHECK_THROWS_AS(solve(col, Vector{Scalar(Q, 1L)}), Error);
}

TEST_CASE("kernel examples")
{
    CHECK(kernel_basis(Matrix::identity(Q, 3)).empty());
    const auto k = kernel_basis(Matrix::from_ints(Q, {{1, -1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{Scalar(Q, 1L), Scalar(Q, 1L)});
    CHECK(kernel_basis(Matrix(Q, 3, 3)).size() == 3);
}

TEST_CASE("rank-nullity and solver agreement on random matrices")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        const Field f = trial % 3 == 0 ? Field::gf(5) : Q;
        Matrix m = random_matrix(f, r, c, rng);
        if (trial % 4 == 0) // force dependencies
            for (std::size_t j = 0; j < c; ++j)
                m(r - 1, j) = m(0, j) * Scalar(f, 2L);
        const std::size_t rk = rank(m);
        CHECK(rk == rank(m.transpose()));
        const auto ker = kernel_basis(m);
        CHECK(ker.size() == c - rk);
        for (const auto& v : ker)
            CHECK(is_zero(m.apply(v)));
        CHECK(rank(Matrix::from_columns(f, c, ker)) == ker.size());

        // b in the image is solvable by both paths and the answers check out.
        const Vector x0 = random_matrix(f, c, 1, rng).column(0);
        const Vector b = m.apply(x0);
        const LinearSolver s(m);
        CHECK(s.rank() == rk);
        for (const auto& x : {solve(m, b), s.solve(b)}) {
            REQUIRE(x);
            CHECK(m.apply(*x) == b);
        }
        CHECK(s.augmented_rank(b) == rk);

        // A random b is solvable exactly when it does not raise the rank.
        const Vector b2 = random_matrix(f, r, 1, rng).column(0);
        Matrix aug(f, r, c + 1);
        aug.set_block(0, 0, m);
        for (std::size_t i = 0; i < r; ++i)
            aug(i, c) = b2[i];
        const bool consistent = rank(aug) == rk;
        CHECK(solve(m, b2).has_value() == consistent);
        CHECK(s.solve(b2).has_value() == consistent);
        CHECK(s.augmented_rank(b2) == rank(aug));
    }
}

TEST_CASE("rank agrees with a brute-force kernel count over small prime fields")
{
    std::mt19937_64 rng(5);
    for (std::uint64_t p : {2u, 3u}) {
        const Field f = Field::gf(p);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
            const Matrix m = random_matrix(f, r, c, rng, 1);
            std::size_t expected = 1;
            for (std::size_t i = 0; i < c - rank(m); ++i)
                expected *= p;
            CHECK(brute_kernel_size(m) == expected);
        }
    }
}

TEST_CASE("matrix algebra")
{
    const auto a = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
    const auto b = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
    CHECK(a * b == Matrix::from_ints(Q, {{2, 1}, {4, 3}}));
    CHECK(a.transpose() == Matrix::from_ints(Q, {{1, 3}, {2, 4}}));
    CHECK(a.block(1, 0, 1, 2) == Matrix::from_ints(Q, {{3, 4}}));
    CHECK_THROWS_AS(a * Matrix(Q, 3, 1), Error);
    CHECK(unit_vector(Q, 3, 1) == Vector{Scalar(Q), Scalar(Q, 1L), Scalar(Q)});
}
