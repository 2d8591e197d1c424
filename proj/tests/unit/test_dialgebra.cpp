#include "dialg/error.hpp"
#include "dialg/examples.hpp"

#include <doctest.h>

#include <random>

using namespace dialg;

namespace {

const Field Q = Field::rationals();

Dialgebra one_dim(long l, long r)
{
    Dialgebra d = Dialgebra::zero("X", Q, 1);
    d.left(0, 0, 0) = Scalar(Q, l);
    d.right(0, 0, 0) = Scalar(Q, r);
    return d;
}

// Naive axiom check through multiply() on random vectors, independent of check_dialgebra.
bool axioms_hold_on_vectors(const Dialgebra& d, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> dist(-3, 3);
    auto rv = [&] {
        Vector v;
        for (std::size_t i = 0; i < d.dim; ++i)
            v.emplace_back(d.field, dist(rng));
        return v;
    };
    const auto L = Product::Left, R = Product::Right;
    for (int trial = 0; trial < 10; ++trial) {
        const Vector x = rv(), y = rv(), z = rv();
        auto m = [&](Product p, const Vector& a, const Vector& b) { return d.multiply(p, a, b); };
        const Vector c1 = m(L, x, m(L, y, z)), c2 = m(L, m(L, x, y), z), c3 = m(L, x, m(R, y, z));
        const Vector c4 = m(L, m(R, x, y), z), c5 = m(R, x, m(L, y, z));
        const Vector c6 = m(R, m(L, x, y), z), c7 = m(R, x, m(R, y, z)), c8 = m(R, m(R, x, y), z);
        if (c1 != c2 || c2 != c3 || c4 != c5 || c6 != c7 || c7 != c8)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("one-dimensional dialgebra checks")
{
    CHECK(check_dialgebra(one_dim(0, 0)).valid);
    CHECK(check_dialgebra(one_dim(1, 1)).valid);
    const CheckReport bad = check_dialgebra(one_dim(1, 0));
    CHECK_FALSE(bad.valid);
    REQUIRE_FALSE(bad.violations.empty());
    CHECK(bad.violations.front().axiom == 2);
    CHECK(bad.violations.front().lhs == Vector{Scalar(Q, 1L)});
    CHECK(bad.violations.front().rhs == Vector{Scalar(Q)});
}

TEST_CASE("enumerator: one-dimensional dialgebras are exactly L = R")
{
    // Axioms reduce to l(l - r) = 0 and r(l - r) = 0.
    const auto all = enumerate_small_dialgebras(Q, 1, 2);
    REQUIRE(all.size() == 3);
    for (const auto& d : all)
        CHECK(d.left == d.right);
}

TEST_CASE("enumerated two-dimensional dialgebras pass an independent check")
{
    std::mt19937_64 rng(3);
    const auto all = enumerate_small_dialgebras(Q, 2, 3);
    CHECK(all.size() == 29);
    for (const auto& d : all) {
        CHECK(axioms_hold_on_vectors(d, rng));
        CHECK(check_representation(d, adjoint_rep(d)).valid);
    }
}

TEST_CASE("bundled dialgebras")
{
    for (const auto& d : examples::dialgebras(Q))
        CHECK_MESSAGE(check_dialgebra(d).valid, d.name);
    const Dialgebra n = examples::noncommutative_n(Q);
    CHECK_FALSE(n.left == n.right);
    CHECK_FALSE(n.left(1, 0, 1) == n.left(0, 1, 1));
    const Dialgebra m = examples::noncommutative_m(Q);
    CHECK_FALSE(m.left == m.right);
    CHECK_FALSE(m.left(0, 1, 0) == m.left(1, 0, 0));
}

TEST_CASE("representation checks")
{
    const Dialgebra k = examples::multiplication(Q);
    const Representation adj = adjoint_rep(k);
    CHECK(check_representation(k, adj).valid);
    for (const Tensor3* t : {&adj.act_dl, &adj.act_dr, &adj.act_ld, &adj.act_rd})
        CHECK((*t)(0, 0, 0).is_one());

    CHECK(check_representation(k, Representation::zero(Q, 1, 3)).valid);

    Representation doubled = adj;
    doubled.act_dl(0, 0, 0) = Scalar(Q, 2L);
    const CheckReport r = check_representation(k, doubled);
    CHECK_FALSE(r.valid);
    bool axiom1_z_in_m = false;
    for (const auto& v : r.violations)
        if (v.axiom == 1 && v.module_slot == 2)
            axiom1_z_in_m = true;
    CHECK(axiom1_z_in_m);

    const Dialgebra z = examples::zero_dialgebra(Q, 2);
    const Representation za = adjoint_rep(z);
    CHECK(za.act_dl == Representation::zero(Q, 2, 2).act_dl);
}

TEST_CASE("morphism checks")
{
    const Dialgebra k = examples::multiplication(Q);
    for (long c = -2; c <= 2; ++c) {
        DialgebraMorphism psi{"scale", k, k, Matrix::from_ints(Q, {{c}})};
        CHECK(check_morphism(psi).valid == (c == 0 || c == 1));
    }
    for (const auto& m : examples::morphisms(Q))
        CHECK_MESSAGE(check_morphism(m).valid, m.name);

    const Dialgebra z1 = examples::zero_dialgebra(Q, 1);
    const Dialgebra z2 = examples::zero_dialgebra(Q, 2);
    CHECK(check_morphism({"any", z2, z1, Matrix::from_ints(Q, {{3, -7}})}).valid);

    CHECK_THROWS_AS(check_morphism({"bad", z2, z1, Matrix::from_ints(Q, {{1}})}), Error);
    const Dialgebra kp = examples::multiplication(Field::gf(5));
    CHECK_THROWS_AS(check_morphism({"mixed", k, kp, Matrix::from_ints(Q, {{1}})}), Error);

    // N -> K sending e1 to e fails: e1 ⊣ e0 = e1 but e ⊣ 0 = 0.
    const Dialgebra n = examples::noncommutative_n(Q);
    CHECK_FALSE(check_morphism({"bad", n, k, Matrix::from_ints(Q, {{1, 1}})}).valid);
}

TEST_CASE("pullback representations")
{
    for (const auto& d : examples::dialgebras(Q)) {
        const Representation p = pullback_rep(identity_morphism(d));
        const Representation a = adjoint_rep(d);
        CHECK(p.act_dl == a.act_dl);
        CHECK(p.act_dr == a.act_dr);
        CHECK(p.act_ld == a.act_ld);
        CHECK(p.act_rd == a.act_rd);
    }
    for (const auto& m : examples::morphisms(Q))
        CHECK_MESSAGE(check_representation(m.source, pullback_rep(m)).valid, m.name);

    const Dialgebra z1 = examples::zero_dialgebra(Q, 1);
    const Representation zp = pullback_rep({"zero", z1, z1, Matrix(Q, 1, 1)});
    CHECK(zp.act_dl == Representation::zero(Q, 1, 1).act_dl);
}

TEST_CASE("composition of morphisms")
{
    const auto incl = examples::find_morphism(Q, "incl_K_N");
    const auto proj = examples::find_morphism(Q, "proj_N_K");
    const DialgebraMorphism c = compose(proj, incl);
    CHECK(c.map == Matrix::identity(Q, 1));
    CHECK(check_morphism(c).valid);
    CHECK_THROWS_AS(compose(incl, incl), Error);
}
