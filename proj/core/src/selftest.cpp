#include "dialg/selftest.hpp"

#include "dialg/examples.hpp"

#include <fmt/format.h>

#include <functional>
#include <random>
#include <vector>

namespace dialg {

namespace {

const Field Q = Field::rationals();

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    Check& done(const std::string& summary)
    {
        if (ok)
            detail = summary;
        return *this;
    }
};

struct Sample {
    DialgebraMorphism psi;
    MorphismComplex complex;
    std::vector<TruncatedDeformation> deformations;
};

std::vector<Sample> make_samples()
{
    std::vector<Sample> out;
    std::mt19937_64 rng(7);
    for (const auto& psi : examples::morphisms(Q)) {
        Sample s{psi, MorphismComplex(psi), {}};
        for (int i = 0; i < 8; ++i) {
            GeneratorOptions opts;
            opts.order = 1 + i % 4;
            opts.leading_zeros = (i == 5 || i == 7) ? 1 : 0;
            s.deformations.push_back(random_deformation(s.complex, opts, rng));
        }
        out.push_back(std::move(s));
    }
    return out;
}

Check catalan_counts()
{
    Check c;
    const std::size_t counts[] = {1, 2, 5, 14, 42};
    for (int m = 1; m <= 5; ++m)
        c.require(enumerate_trees(m).size() == counts[m - 1], fmt::format("|Y_{}| = {}", m, enumerate_trees(m).size()));
    return c.done("|Y_1..5| = 1 2 5 14 42");
}

Check simplicial_identities()
{
    Check c;
    std::size_t n = 0;
    for (int m = 2; m <= 5; ++m)
        for (std::size_t y = 0; y < catalan(m); ++y)
            for (int j = 0; j <= m; ++j)
                for (int i = 0; i < j; ++i, ++n)
                    c.require(face_index(m - 1, face_index(m, y, j), i) == face_index(m - 1, face_index(m, y, i), j - 1),
                              fmt::format("d_{} d_{} on tree {} of Y_{}", i, j, y, m));
    return c.done(fmt::format("{} identities through Y_5", n));
}

Check combs_closed()
{
    Check c;
    for (int m = 2; m <= 5; ++m)
        for (int i = 0; i <= m; ++i) {
            c.require(face_index(m, right_comb_index(m), i) == right_comb_index(m - 1), fmt::format("⊣ comb, Y_{}", m));
            c.require(face_index(m, left_comb_index(m), i) == left_comb_index(m - 1), fmt::format("⊢ comb, Y_{}", m));
        }
    return c.done("both combs through Y_5");
}

Check representations()
{
    Check c;
    std::size_t n = 0;
    for (const auto& d : examples::dialgebras(Q)) {
        c.require(check_dialgebra(d).valid, d.name + " violates the axioms");
        c.require(check_representation(d, adjoint_rep(d)).valid, "adjoint of " + d.name);
        ++n;
    }
    for (const auto& psi : examples::morphisms(Q)) {
        c.require(check_morphism(psi).valid, psi.name + " is not a morphism");
        c.require(check_representation(psi.source, pullback_rep(psi)).valid, "pullback along " + psi.name);
        ++n;
    }
    return c.done(fmt::format("{} dialgebras and morphisms", n));
}

Check cochain_delta_squared()
{
    Check c;
    std::mt19937_64 rng(11);
    std::size_t n = 0;
    std::vector<std::pair<Dialgebra, Representation>> pairs;
    for (const auto& d : examples::dialgebras(Q))
        pairs.emplace_back(d, adjoint_rep(d));
    for (const auto& psi : examples::morphisms(Q))
        pairs.emplace_back(psi.source, pullback_rep(psi));
    for (const auto& [d, m] : pairs)
        for (int deg = 0; deg <= 3; ++deg)
            for (int t = 0; t < 5; ++t, ++n) {
                const Cochain f = random_cochain(Q, cochain_shape(d, m, deg), rng);
                c.require(coboundary(d, m, coboundary(d, m, f)).is_zero(), fmt::format("{} degree {}", d.name, deg));
            }
    return c.done(fmt::format("{} random cochains, degrees 0..3", n));
}

Check morphism_delta_squared(const std::vector<Sample>& samples)
{
    Check c;
    std::mt19937_64 rng(12);
    std::size_t n = 0;
    for (const auto& s : samples)
        for (int deg = 1; deg <= 3; ++deg)
            for (int t = 0; t < 5; ++t, ++n)
                c.require(s.complex.coboundary(s.complex.coboundary(s.complex.random(deg, rng))).is_zero(),
                          fmt::format("{} degree {}", s.psi.name, deg));
    return c.done(fmt::format("{} random cochains, degrees 1..3", n));
}

Check samples_verify(const std::vector<Sample>& samples)
{
    Check c;
    std::size_t n = 0, nontrivial = 0;
    for (const auto& s : samples)
        for (const auto& th : s.deformations) {
            c.require(verify_deformation(th).valid, s.psi.name + " sample is invalid");
            nontrivial += leading_order(th).has_value();
            ++n;
        }
    return c.done(fmt::format("{} samples, {} nontrivial", n, nontrivial));
}

Check leading_cocycles(const std::vector<Sample>& samples)
{
    Check c;
    std::size_t n = 0;
    for (const auto& s : samples)
        for (const auto& th : s.deformations) {
            const CocycleReport r = leading_cocycle_check(s.complex, th);
            c.require(r.ok, fmt::format("{}: {}", s.psi.name, r.residual));
            ++n;
        }
    return c.done(fmt::format("{} samples", n));
}

Check obstruction_cocycles(const std::vector<Sample>& samples)
{
    Check c;
    std::size_t n = 0;
    for (const auto& s : samples)
        for (const auto& th : s.deformations) {
            const CocycleReport r = obstruction_cocycle_check(s.complex, obstruction(th));
            c.require(r.ok, fmt::format("{} order {}: {}", s.psi.name, th.order(), r.residual));
            ++n;
        }
    return c.done(fmt::format("{} samples, orders 1..4", n));
}

Check extensions(const std::vector<Sample>& samples)
{
    Check c;
    std::size_t ok = 0, blocked = 0;
    for (const auto& s : samples)
        for (const auto& th : s.deformations) {
            const ExtendOutcome out = extend_step(s.complex, th);
            c.require((out.rank_augmented == out.rank_coboundary) == out.extended.has_value(),
                      s.psi.name + ": rank certificate disagrees with the solve");
            if (out.extended) {
                c.require(verify_deformation(*out.extended).valid, s.psi.name + ": extension does not verify");
                ++ok;
            } else {
                ++blocked;
            }
        }
    return c.done(fmt::format("{} extended, {} obstructed", ok, blocked));
}

Check z_family()
{
    Check c;
    std::size_t n = 0;
    for (long l = -2; l <= 2; ++l)
        for (long r = -2; r <= 2; ++r, ++n) {
            const ExtendOutcome out = extend_step(examples::z_family(Q, l, r, l, r, 1));
            c.require(out.extended.has_value() == (l == r), fmt::format("l = {}, r = {}", l, r));
            const long want[] = {0, l * (l - r), 0, r * (l - r), 0};
            const std::size_t args[] = {0, 0, 0};
            for (std::size_t y = 0; y < 5; ++y)
                c.require(out.obstruction.cochain.xi.value(y, args)[0] == Scalar(Q, want[y]),
                          fmt::format("l = {}, r = {}: tree {}", l, r, y));
        }
    return c.done(fmt::format("{} (l, r) pairs", n));
}

Check infinitesimal_shift(const std::vector<Sample>& samples)
{
    Check c;
    std::mt19937_64 rng(13);
    std::size_t n = 0;
    for (const auto& s : samples)
        for (const auto& th : s.deformations) {
            const FormalIso phi = random_formal_iso(Q, s.psi.source.dim, s.psi.target.dim, th.order(), rng);
            const TruncatedDeformation moved = apply_formal_iso(th, phi);
            c.require(verify_deformation(moved).valid, s.psi.name + ": transported deformation is invalid");
            MorphismCochain beta = s.complex.zero(1);
            beta.xi = map_cochain(Q, phi.phiD[1]);
            beta.pi = map_cochain(Q, phi.phiE[1]);
            c.require(infinitesimal(th) - infinitesimal(moved) == s.complex.coboundary(beta), s.psi.name);
            ++n;
        }
    return c.done(fmt::format("{} (deformation, iso) pairs", n));
}

Check normalization(const std::vector<Sample>& samples)
{
    Check c;
    std::mt19937_64 rng(14);
    std::size_t n = 0;
    for (const auto& s : samples)
        for (int t = 0; t < 5; ++t, ++n) {
            const MorphismCochain a = s.complex.random(1, rng);
            const MorphismCochain b = s.complex.normalize_1cochain(a);
            c.require(b.phi.is_zero() && s.complex.coboundary(a) == s.complex.coboundary(b), s.psi.name);
        }
    return c.done(fmt::format("{} degree-1 cochains", n));
}

Check trivialization(const std::vector<Sample>& samples)
{
    Check c;
    std::size_t n = 0;
    for (const auto& s : samples) {
        if (s.complex.cohomology_dim(2) != 0)
            continue;
        for (const auto& th : s.deformations) {
            const TrivializeResult t = trivialize_step(s.complex, th);
            c.require(verify_deformation(t.result).valid, s.psi.name + ": result does not verify");
            for (int i = 1; i <= std::min(t.m + 1, th.order()); ++i)
                c.require(t.result.theta(i).is_zero(), fmt::format("{}: θ_{} survives", s.psi.name, i));
            ++n;
        }
    }
    const TrivializeResult one = trivialize_step(examples::one_plus_t(Q, 1));
    c.require(one.result == TruncatedDeformation::trivial(one.result.psi, 1), "(1+t) is not trivialized");
    return c.done(fmt::format("{} samples with vanishing HY^2, and the (1+t) deformation", n));
}

Check cohomology_values(const std::vector<Sample>& samples)
{
    Check c;
    struct Fixture {
        const char* name;
        std::size_t hy[4];
    };
    const Fixture fixtures[] = {
        {"Z1", {1, 1, 2, 5}}, {"Z2", {2, 4, 16, 80}}, {"K", {1, 0, 0, 0}}, {"N", {1, 0, 0, 0}}, {"M", {1, 0, 0, 0}},
    };
    std::size_t n = 0;
    for (const auto& d : examples::dialgebras(Q))
        for (const auto& fx : fixtures)
            if (d.name == fx.name)
                for (int deg = 0; deg <= 3; ++deg, ++n)
                    c.require(cohomology_dim(d, adjoint_rep(d), deg) == fx.hy[deg], fmt::format("HY^{}({})", deg, d.name));
    struct MorFixture {
        const char* name;
        std::size_t hy[3];
    };
    const MorFixture mor[] = {
        {"id_Z1", {2, 2, 5}},   {"id_Z2", {6, 16, 80}},   {"id_K", {1, 0, 0}},
        {"id_N", {3, 0, 0}},    {"id_M", {3, 0, 0}},      {"proj_N_K", {2, 0, 0}},
        {"incl_K_N", {3, 0, 0}}, {"incl_K_M", {3, 0, 0}}, {"sum_Z2_Z1", {4, 10, 45}},
    };
    for (const auto& s : samples)
        for (const auto& fx : mor)
            if (s.psi.name == fx.name)
                for (int deg = 1; deg <= 3; ++deg, ++n)
                    c.require(s.complex.cohomology_dim(deg) == fx.hy[deg - 1], fmt::format("HY^{}({})", deg, s.psi.name));
    return c.done(fmt::format("{} frozen dimensions", n));
}

} // namespace

SelftestReport run_selftest()
{
    const std::vector<Sample> samples = make_samples();
    struct Entry {
        const char* name;
        std::function<Check()> run;
    };
    const Entry entries[] = {
        {"trees: Catalan counts", catalan_counts},
        {"trees: simplicial identities", simplicial_identities},
        {"trees: combs closed under faces", combs_closed},
        {"dialgebras: axioms, adjoint and pullback representations", representations},
        {"cochains: δ² = 0", cochain_delta_squared},
        {"morphism cochains: δ² = 0", [&] { return morphism_delta_squared(samples); }},
        {"deformations: generated samples verify", [&] { return samples_verify(samples); }},
        {"deformations: leading coefficient is a 2-cocycle", [&] { return leading_cocycles(samples); }},
        {"deformations: obstruction is a 3-cocycle", [&] { return obstruction_cocycles(samples); }},
        {"deformations: solved extensions verify", [&] { return extensions(samples); }},
        {"deformations: Z family extends iff l = r", z_family},
        {"equivalence: θ_1 - θ̃_1 = δ(φ_D1; φ_E1; 0)", [&] { return infinitesimal_shift(samples); }},
        {"equivalence: normalization preserves δ", [&] { return normalization(samples); }},
        {"equivalence: trivialization clears the leading term", [&] { return trivialization(samples); }},
        {"cohomology: frozen dimensions", [&] { return cohomology_values(samples); }},
    };
    SelftestReport report;
    for (const auto& e : entries) {
        Check c;
        try {
            c = e.run();
        } catch (const std::exception& ex) {
            c.ok = false;
            c.detail = std::string("exception: ") + ex.what();
        }
        ++report.total;
        report.passed += c.ok;
        report.text += fmt::format("{} {}: {}\n", c.ok ? "PASS" : "FAIL", e.name, c.detail);
    }
    report.ok = report.passed == report.total;
    report.text += fmt::format("selftest: {}/{} checks passed\n", report.passed, report.total);
    return report;
}

} // namespace dialg
