#include "dialg/deformation.hpp"

#include "dialg/error.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace dialg {

namespace {

std::size_t slot(Product p)
{
    return p == Product::Left ? right_comb_index(2) : left_comb_index(2);
}

Cochain zero_cochain(Field f, int degree, std::size_t dim_d, std::size_t dim_m)
{
    return Cochain::zero(f, CochainShape{degree, dim_d, dim_m});
}

/// F(y ⊗ (x, z)) for a 2-cochain F, bilinear in the vectors x and z.
Vector eval2(const Cochain& F, std::size_t tree, std::span<const Scalar> x, std::span<const Scalar> z)
{
    Vector out = zero_vector(F.field, F.shape.dim_m);
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero())
            continue;
        for (std::size_t b = 0; b < z.size(); ++b) {
            if (z[b].is_zero())
                continue;
            Scalar c = x[a] * z[b];
            const std::size_t args[] = {a, b};
            const auto v = F.value(tree, args);
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k].add_product(c, v[k]);
        }
    }
    return out;
}

void add_to(Vector& acc, std::span<const Scalar> v)
{
    for (std::size_t k = 0; k < acc.size(); ++k)
        acc[k] += v[k];
}

void sub_from(Vector& acc, std::span<const Scalar> v)
{
    for (std::size_t k = 0; k < acc.size(); ++k)
        acc[k] -= v[k];
}

std::vector<Matrix> psi_matrices(const TruncatedDeformation& th)
{
    std::vector<Matrix> out;
    out.reserve(th.psis.size());
    for (const auto& c : th.psis)
        out.push_back(cochain_map(c));
    return out;
}

std::string format_vector(std::span<const Scalar> v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

/// Location of the first nonzero coordinate of c, or nullopt.
std::optional<std::string> first_nonzero(const Cochain& c, std::string_view block)
{
    for (std::size_t idx = 0; idx < c.coeffs.size(); ++idx) {
        if (c.coeffs[idx].is_zero())
            continue;
        const std::size_t out = idx % c.shape.dim_m;
        std::size_t rest = idx / c.shape.dim_m;
        std::size_t arg = rest % c.shape.arg_count();
        const std::size_t tree = rest / c.shape.arg_count();
        std::vector<std::size_t> args(static_cast<std::size_t>(c.degree()));
        for (std::size_t s = args.size(); s-- > 0;) {
            args[s] = arg % c.shape.dim_d;
            arg /= c.shape.dim_d;
        }
        std::string at;
        for (std::size_t s = 0; s < args.size(); ++s)
            at += fmt::format("{}e{}", s ? "," : "", args[s]);
        return fmt::format("{} tree {} args ({}) component {} = {}", block,
                           trees_of_degree(c.degree())[tree].name(), at, out, c.coeffs[idx].to_string());
    }
    return std::nullopt;
}

std::optional<std::string> first_nonzero(const MorphismCochain& a)
{
    if (auto s = first_nonzero(a.xi, "D"))
        return s;
    if (auto s = first_nonzero(a.pi, "E"))
        return s;
    return first_nonzero(a.phi, "psi");
}

void check_shapes(const TruncatedDeformation& th)
{
    const std::size_t dd = th.psi.source.dim;
    const std::size_t de = th.psi.target.dim;
    if (th.fD.empty() || th.fE.size() != th.fD.size() || th.psis.size() != th.fD.size())
        throw Error(ErrorKind::ShapeMismatch, "deformation coefficient lists have different lengths");
    const Field f = th.psi.source.field;
    for (std::size_t n = 0; n < th.fD.size(); ++n) {
        if (!(th.fD[n].shape == CochainShape{2, dd, dd}) || !(th.fE[n].shape == CochainShape{2, de, de}) ||
            !(th.psis[n].shape == CochainShape{1, dd, de}))
            throw Error(ErrorKind::ShapeMismatch, fmt::format("deformation coefficient {} has the wrong shape", n));
        if (th.fD[n].field != f || th.fE[n].field != f || th.psis[n].field != f)
            throw Error(ErrorKind::FieldMismatch, fmt::format("deformation coefficient {} is over another field", n));
    }
    if (!(th.fD[0] == product_cochain(th.psi.source)))
        throw Error(ErrorKind::BaseMismatch, "F_{D,0} differs from the products of D");
    if (!(th.fE[0] == product_cochain(th.psi.target)))
        throw Error(ErrorKind::BaseMismatch, "F_{E,0} differs from the products of E");
    if (!(cochain_map(th.psis[0]) == th.psi.map))
        throw Error(ErrorKind::BaseMismatch, "psi_0 differs from the morphism");
}

/// Order-ν coefficient of one side of an axiom on (e_a, e_b, e_c).
Vector axiom_side(const Bracketing& br, const std::vector<Cochain>& fs, int nu, std::size_t a, std::size_t b,
                  std::size_t c, std::size_t dim)
{
    const Field f = fs[0].field;
    const Vector ea = unit_vector(f, dim, a), eb = unit_vector(f, dim, b), ec = unit_vector(f, dim, c);
    Vector acc = zero_vector(f, dim);
    for (int i = 0; i <= nu; ++i) {
        const int j = nu - i;
        if (br.left_nested)
            add_to(acc, eval2(fs[i], slot(br.outer), eval2(fs[j], slot(br.inner), ea, eb), ec));
        else
            add_to(acc, eval2(fs[i], slot(br.outer), ea, eval2(fs[j], slot(br.inner), eb, ec)));
    }
    return acc;
}

/// Σ_{i+j=N+1, i,j>0} F_i(d1y ⊗ (F_j(d3y ⊗ (a,b)), c)) − F_i(d2y ⊗ (a, F_j(d0y ⊗ (b,c)))).
Cochain square(const std::vector<Cochain>& fs, int n, std::size_t dim)
{
    const Field f = fs[0].field;
    Cochain out = zero_cochain(f, 3, dim, dim);
    for (std::size_t y = 0; y < catalan(3); ++y) {
        const std::size_t d0 = face_index(3, y, 0), d1 = face_index(3, y, 1);
        const std::size_t d2 = face_index(3, y, 2), d3 = face_index(3, y, 3);
        for (MultiIndex abc(3, dim); !abc.done(); ++abc) {
            const auto& idx = *abc;
            const Vector ea = unit_vector(f, dim, idx[0]);
            const Vector eb = unit_vector(f, dim, idx[1]);
            const Vector ec = unit_vector(f, dim, idx[2]);
            auto dst = out.value(y, idx);
            Vector acc = zero_vector(f, dim);
            for (int i = 1; i <= n; ++i) {
                const int j = n + 1 - i;
                add_to(acc, eval2(fs[i], d1, eval2(fs[j], d3, ea, eb), ec));
                sub_from(acc, eval2(fs[i], d2, ea, eval2(fs[j], d0, eb, ec)));
            }
            for (std::size_t k = 0; k < dim; ++k)
                dst[k] = acc[k];
        }
    }
    return out;
}

/// Σ_{i+j+k+l=n} φ_i F_j(y ⊗ (G_k a, G_l b)) for both 2-trees.
std::vector<Cochain> transport_products(const std::vector<Cochain>& fs, const std::vector<Matrix>& phi,
                                        const std::vector<Matrix>& inv, std::size_t dim)
{
    const int order = static_cast<int>(fs.size()) - 1;
    const Field f = fs[0].field;
    std::vector<Cochain> out;
    for (int n = 0; n <= order; ++n) {
        Cochain c = zero_cochain(f, 2, dim, dim);
        for (std::size_t tree = 0; tree < 2; ++tree)
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t b = 0; b < dim; ++b) {
                    Vector acc = zero_vector(f, dim);
                    for (int k = 0; k <= n; ++k) {
                        const Vector ga = inv[k].column(a);
                        if (is_zero(ga))
                            continue;
                        for (int l = 0; k + l <= n; ++l) {
                            const Vector gb = inv[l].column(b);
                            if (is_zero(gb))
                                continue;
                            for (int j = 0; k + l + j <= n; ++j) {
                                const Vector w = eval2(fs[j], tree, ga, gb);
                                if (is_zero(w))
                                    continue;
                                add_to(acc, phi[n - k - l - j].apply(w));
                            }
                        }
                    }
                    const std::size_t args[] = {a, b};
                    auto dst = c.value(tree, args);
                    for (std::size_t r = 0; r < dim; ++r)
                        dst[r] = acc[r];
                }
        out.push_back(std::move(c));
    }
    return out;
}

/// Random combination of cocycle basis vectors; sparse picks a single one.
MorphismCochain random_cocycle(const std::vector<MorphismCochain>& basis, const MorphismComplex& complex, long range,
                               bool sparse, std::mt19937_64& rng)
{
    MorphismCochain c = complex.zero(2);
    std::uniform_int_distribution<long> coin(0, 1);
    std::uniform_int_distribution<long> coef(1, range);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    const std::size_t only = pick(rng);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (sparse ? i != only : coin(rng) == 0)
            continue;
        long v = coef(rng);
        if (coin(rng))
            v = -v;
        MorphismCochain t = basis[i];
        const Scalar s(complex.field(), v);
        t.xi *= s;
        t.pi *= s;
        t.phi *= s;
        c += t;
    }
    return c;
}

} // namespace

Cochain map_cochain(Field f, const Matrix& m)
{
    Cochain c = zero_cochain(f, 1, m.cols(), m.rows());
    for (std::size_t a = 0; a < m.cols(); ++a) {
        const std::size_t args[] = {a};
        auto dst = c.value(0, args);
        for (std::size_t k = 0; k < m.rows(); ++k)
            dst[k] = m(k, a);
    }
    return c;
}

Matrix cochain_map(const Cochain& c)
{
    if (c.degree() != 1)
        throw Error(ErrorKind::ShapeMismatch, "a linear map is a 1-cochain");
    Matrix m(c.field, c.shape.dim_m, c.shape.dim_d);
    for (std::size_t a = 0; a < c.shape.dim_d; ++a) {
        const std::size_t args[] = {a};
        const auto v = c.value(0, args);
        for (std::size_t k = 0; k < c.shape.dim_m; ++k)
            m(k, a) = v[k];
    }
    return m;
}

TruncatedDeformation TruncatedDeformation::trivial(const DialgebraMorphism& psi, int order)
{
    if (order < 0)
        throw Error(ErrorKind::IndexOutOfRange, "negative deformation order");
    const Field f = psi.source.field;
    const std::size_t dd = psi.source.dim, de = psi.target.dim;
    TruncatedDeformation th;
    th.name = "trivial";
    th.psi = psi;
    th.fD.push_back(product_cochain(psi.source));
    th.fE.push_back(product_cochain(psi.target));
    th.psis.push_back(map_cochain(f, psi.map));
    for (int n = 1; n <= order; ++n) {
        th.fD.push_back(zero_cochain(f, 2, dd, dd));
        th.fE.push_back(zero_cochain(f, 2, de, de));
        th.psis.push_back(zero_cochain(f, 1, dd, de));
    }
    return th;
}

MorphismCochain TruncatedDeformation::theta(int n) const
{
    if (n < 1 || n > order())
        throw Error(ErrorKind::IndexOutOfRange, fmt::format("theta_{} outside orders 1..{}", n, order()));
    return {fD[n], fE[n], psis[n]};
}

void TruncatedDeformation::append(const MorphismCochain& theta)
{
    if (theta.degree() != 2 || !(theta.xi.shape == fD[0].shape) || !(theta.pi.shape == fE[0].shape) ||
        !(theta.phi.shape == psis[0].shape))
        throw Error(ErrorKind::ShapeMismatch, "appended coefficient must lie in CY^2(psi,psi)");
    fD.push_back(theta.xi);
    fE.push_back(theta.pi);
    psis.push_back(theta.phi);
}

TruncatedDeformation TruncatedDeformation::truncated(int n) const
{
    if (n < 0 || n > order())
        throw Error(ErrorKind::IndexOutOfRange, "truncation above the deformation order");
    TruncatedDeformation out = *this;
    out.fD.resize(static_cast<std::size_t>(n) + 1, fD[0]);
    out.fE.resize(static_cast<std::size_t>(n) + 1, fE[0]);
    out.psis.resize(static_cast<std::size_t>(n) + 1, psis[0]);
    return out;
}

FormalIso FormalIso::identity(Field f, std::size_t dim_d, std::size_t dim_e, int order)
{
    FormalIso phi;
    phi.phiD.push_back(Matrix::identity(f, dim_d));
    phi.phiE.push_back(Matrix::identity(f, dim_e));
    for (int n = 1; n <= order; ++n) {
        phi.phiD.emplace_back(f, dim_d, dim_d);
        phi.phiE.emplace_back(f, dim_e, dim_e);
    }
    return phi;
}

FormalIso FormalIso::shift(const Matrix& xi, const Matrix& pi, int k, int order)
{
    FormalIso phi = identity(xi.field(), xi.rows(), pi.rows(), order);
    if (k >= 1 && k <= order) {
        phi.phiD[k] += xi;
        phi.phiE[k] += pi;
    }
    return phi;
}

std::vector<Matrix> series_inverse(const std::vector<Matrix>& phi)
{
    if (phi.empty() || !(phi[0] == Matrix::identity(phi[0].field(), phi[0].rows())))
        throw Error(ErrorKind::NonIdentityConstantTerm, "series constant term is not the identity");
    std::vector<Matrix> g{phi[0]};
    for (std::size_t n = 1; n < phi.size(); ++n) {
        Matrix acc(phi[0].field(), phi[0].rows(), phi[0].cols());
        for (std::size_t k = 1; k <= n; ++k)
            acc -= phi[k] * g[n - k];
        g.push_back(std::move(acc));
    }
    return g;
}

FormalIso compose(const FormalIso& second, const FormalIso& first)
{
    if (second.order() != first.order())
        throw Error(ErrorKind::OrderMismatch, "formal isomorphisms of different orders");
    auto product = [](const std::vector<Matrix>& s, const std::vector<Matrix>& t) {
        std::vector<Matrix> out;
        for (std::size_t n = 0; n < s.size(); ++n) {
            Matrix acc(s[0].field(), s[0].rows(), t[0].cols());
            for (std::size_t i = 0; i <= n; ++i)
                acc += s[i] * t[n - i];
            out.push_back(std::move(acc));
        }
        return out;
    };
    return {product(second.phiD, first.phiD), product(second.phiE, first.phiE)};
}

DeformationReport verify_deformation(const TruncatedDeformation& th)
{
    check_shapes(th);
    const std::size_t dd = th.psi.source.dim, de = th.psi.target.dim;
    const Field f = th.psi.source.field;
    const std::vector<Matrix> psi = psi_matrices(th);

    DeformationReport rep;
    auto fail = [&](int nu, std::string what) {
        rep.valid = false;
        rep.first_failing_order = nu;
        rep.failing_identity = std::move(what);
        return rep;
    };

    for (int nu = 0; nu <= th.order(); ++nu) {
        for (int obj = 0; obj < 2; ++obj) {
            const auto& fs = obj == 0 ? th.fD : th.fE;
            const std::size_t dim = obj == 0 ? dd : de;
            for (const Axiom& ax : dialgebra_axioms())
                for (MultiIndex abc(3, dim); !abc.done(); ++abc) {
                    const auto& i = *abc;
                    const Vector l = axiom_side(ax.lhs, fs, nu, i[0], i[1], i[2], dim);
                    const Vector r = axiom_side(ax.rhs, fs, nu, i[0], i[1], i[2], dim);
                    if (l != r)
                        return fail(nu, fmt::format("axiom {} ({}) on {} at (e{}, e{}, e{}): {} != {}", ax.number,
                                                    ax.text, obj == 0 ? "D" : "E", i[0], i[1], i[2],
                                                    format_vector(l), format_vector(r)));
                }
        }
        for (Product p : {Product::Left, Product::Right})
            for (std::size_t a = 0; a < dd; ++a)
                for (std::size_t b = 0; b < dd; ++b) {
                    const Vector ea = unit_vector(f, dd, a), eb = unit_vector(f, dd, b);
                    Vector lhs = zero_vector(f, de);
                    for (int i = 0; i <= nu; ++i)
                        add_to(lhs, psi[i].apply(eval2(th.fD[nu - i], slot(p), ea, eb)));
                    Vector rhs = zero_vector(f, de);
                    for (int i = 0; i <= nu; ++i)
                        for (int j = 0; i + j <= nu; ++j) {
                            const Vector x = psi[j].apply(ea);
                            const Vector y = psi[nu - i - j].apply(eb);
                            add_to(rhs, eval2(th.fE[i], slot(p), x, y));
                        }
                    if (lhs != rhs)
                        return fail(nu, fmt::format("morphism identity for {} at (e{}, e{}): {} != {}", symbol(p), a,
                                                    b, format_vector(lhs), format_vector(rhs)));
                }
    }
    return rep;
}

MorphismCochain infinitesimal(const TruncatedDeformation& th)
{
    if (th.order() < 1)
        throw Error(ErrorKind::OrderTooLow, "an order-0 deformation has no infinitesimal");
    return th.theta(1);
}

std::optional<int> leading_order(const TruncatedDeformation& th)
{
    for (int n = 1; n <= th.order(); ++n)
        if (!th.theta(n).is_zero())
            return n;
    return std::nullopt;
}

CocycleReport leading_cocycle_check(const MorphismComplex& complex, const TruncatedDeformation& th)
{
    CocycleReport rep;
    rep.leading_order = leading_order(th);
    if (!rep.leading_order)
        return rep;
    const MorphismCochain d = complex.coboundary(th.theta(*rep.leading_order));
    if (auto where = first_nonzero(d)) {
        rep.ok = false;
        rep.residual = *where;
    }
    return rep;
}

CocycleReport leading_cocycle_check(const TruncatedDeformation& th)
{
    return leading_cocycle_check(MorphismComplex(th.psi), th);
}

std::vector<std::array<int, 3>> sigma_prime_triples(int n)
{
    const int total = n + 1;
    std::vector<std::array<int, 3>> out;
    // One index zero, the other two positive.
    for (int j = 1; j < total; ++j)
        out.push_back({0, j, total - j});
    for (int i = 1; i < total; ++i)
        out.push_back({i, 0, total - i});
    for (int i = 1; i < total; ++i)
        out.push_back({i, total - i, 0});
    // All three positive.
    for (int i = 1; i < total; ++i)
        for (int j = 1; i + j < total; ++j)
            out.push_back({i, j, total - i - j});
    return out;
}

ObstructionClass obstruction(const TruncatedDeformation& th)
{
    if (th.order() < 1)
        throw Error(ErrorKind::OrderTooLow, "the obstruction needs a deformation of order at least 1");
    const DeformationReport rep = verify_deformation(th);
    if (!rep.valid)
        throw Error(ErrorKind::InvalidDeformation,
                    fmt::format("deformation fails at order {}: {}", *rep.first_failing_order, rep.failing_identity));

    const int n = th.order();
    const Field f = th.psi.source.field;
    const std::size_t dd = th.psi.source.dim, de = th.psi.target.dim;
    const std::vector<Matrix> psi = psi_matrices(th);

    ObstructionClass ob;
    ob.order = n;
    ob.cochain.xi = square(th.fD, n, dd);
    ob.cochain.pi = square(th.fE, n, de);
    ob.cochain.phi = zero_cochain(f, 2, dd, de);
    const auto triples = sigma_prime_triples(n);
    for (Product p : {Product::Left, Product::Right})
        for (std::size_t a = 0; a < dd; ++a)
            for (std::size_t b = 0; b < dd; ++b) {
                const Vector ea = unit_vector(f, dd, a), eb = unit_vector(f, dd, b);
                Vector acc = zero_vector(f, de);
                for (const auto& [i, j, k] : triples)
                    add_to(acc, eval2(th.fE[i], slot(p), psi[j].apply(ea), psi[k].apply(eb)));
                for (int i = 1; i <= n; ++i)
                    sub_from(acc, psi[i].apply(eval2(th.fD[n + 1 - i], slot(p), ea, eb)));
                const std::size_t args[] = {a, b};
                auto dst = ob.cochain.phi.value(slot(p), args);
                for (std::size_t k = 0; k < de; ++k)
                    dst[k] = acc[k];
            }
    return ob;
}

CocycleReport obstruction_cocycle_check(const MorphismComplex& complex, const ObstructionClass& ob)
{
    CocycleReport rep;
    rep.leading_order = ob.order + 1;
    if (auto where = first_nonzero(complex.coboundary(ob.cochain))) {
        rep.ok = false;
        rep.residual = *where;
    }
    return rep;
}

CocycleReport obstruction_cocycle_check(const DialgebraMorphism& psi, const ObstructionClass& ob)
{
    return obstruction_cocycle_check(MorphismComplex(psi), ob);
}

ExtendOutcome extend_step(const MorphismComplex& complex, const TruncatedDeformation& th, const MorphismCochain* shift)
{
    ExtendOutcome out;
    out.obstruction = obstruction(th);
    const LinearSolver& d2 = complex.solver(2);
    const Vector rhs = complex.flatten(out.obstruction.cochain);
    auto x = d2.solve(rhs);
    out.rank_coboundary = d2.rank();
    out.rank_augmented = d2.augmented_rank(rhs);
    if (!x)
        return out;
    MorphismCochain theta = complex.unflatten(2, *x);
    if (shift)
        theta += *shift;
    TruncatedDeformation next = th;
    next.append(theta);
    const DeformationReport rep = verify_deformation(next);
    if (!rep.valid)
        throw std::logic_error("solved extension fails verification at order " +
                               std::to_string(*rep.first_failing_order) + ": " + rep.failing_identity);
    out.theta = std::move(theta);
    out.extended = std::move(next);
    return out;
}

ExtendOutcome extend_step(const TruncatedDeformation& th)
{
    return extend_step(MorphismComplex(th.psi), th);
}

ExtendReport extend_to_order(const TruncatedDeformation& th, int target, int cap)
{
    if (target > cap)
        throw Error(ErrorKind::CapExceeded, fmt::format("target order {} above cap {}", target, cap));
    const MorphismComplex complex(th.psi);
    ExtendReport rep{th, target, complex.cohomology_dim(3) == 0, std::nullopt};
    if (target < th.order())
        rep.reached = th.truncated(target);
    while (rep.reached.order() < target) {
        if (rep.reached.order() == 0) {
            // Every order-0 deformation extends by θ_1 = 0.
            rep.reached.append(complex.zero(2));
            continue;
        }
        ExtendOutcome step = extend_step(complex, rep.reached);
        if (!step.extended) {
            rep.halted = std::move(step);
            break;
        }
        rep.reached = std::move(*step.extended);
    }
    return rep;
}

TruncatedDeformation apply_formal_iso(const TruncatedDeformation& th, const FormalIso& phi)
{
    check_shapes(th);
    if (phi.order() != th.order() || phi.phiE.size() != phi.phiD.size())
        throw Error(ErrorKind::OrderMismatch,
                    fmt::format("formal isomorphism of order {} applied to deformation of order {}", phi.order(),
                                th.order()));
    const std::size_t dd = th.psi.source.dim, de = th.psi.target.dim;
    for (std::size_t n = 0; n < phi.phiD.size(); ++n)
        if (phi.phiD[n].rows() != dd || phi.phiD[n].cols() != dd || phi.phiE[n].rows() != de ||
            phi.phiE[n].cols() != de)
            throw Error(ErrorKind::ShapeMismatch, fmt::format("formal isomorphism coefficient {} has the wrong shape", n));
    const std::vector<Matrix> gD = series_inverse(phi.phiD);
    const std::vector<Matrix> gE = series_inverse(phi.phiE);

    TruncatedDeformation out = th;
    out.fD = transport_products(th.fD, phi.phiD, gD, dd);
    out.fE = transport_products(th.fE, phi.phiE, gE, de);
    const std::vector<Matrix> psi = psi_matrices(th);
    const Field f = th.psi.source.field;
    for (int n = 0; n <= th.order(); ++n) {
        Matrix acc(f, de, dd);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j)
                acc += phi.phiE[i] * psi[j] * gD[n - i - j];
        out.psis[n] = map_cochain(f, acc);
    }
    return out;
}

TrivializeResult trivialize_step(const MorphismComplex& complex, const TruncatedDeformation& th)
{
    check_shapes(th);
    const Field f = th.psi.source.field;
    const auto lead = leading_order(th);
    if (!lead)
        return {th.order(), FormalIso::identity(f, th.psi.source.dim, th.psi.target.dim, th.order()), th};

    const int k = *lead;
    const MorphismCochain theta = th.theta(k);
    auto beta = complex.solve_primitive(theta);
    if (!beta) {
        const LinearSolver& d1 = complex.solver(1);
        const Vector rhs = complex.flatten(theta);
        throw Error(ErrorKind::NotACoboundary,
                    fmt::format("theta_{} is not a coboundary: rank delta^1 = {}, rank [delta^1 | theta] = {}", k,
                                d1.rank(), d1.augmented_rank(rhs)));
    }
    const MorphismCochain norm = complex.normalize_1cochain(*beta);
    TrivializeResult res;
    res.m = k - 1;
    res.phi = FormalIso::shift(cochain_map(norm.xi), cochain_map(norm.pi), k, th.order());
    res.result = apply_formal_iso(th, res.phi);
    for (int i = 1; i <= k; ++i)
        if (!res.result.theta(i).is_zero())
            throw std::logic_error("trivialize_step left theta_" + std::to_string(i) + " nonzero");
    return res;
}

TrivializeResult trivialize_step(const TruncatedDeformation& th)
{
    return trivialize_step(MorphismComplex(th.psi), th);
}

std::optional<FormalIso> trivializing_iso(const MorphismComplex& complex, const TruncatedDeformation& th)
{
    const Field f = th.psi.source.field;
    FormalIso total = FormalIso::identity(f, th.psi.source.dim, th.psi.target.dim, th.order());
    TruncatedDeformation cur = th;
    while (leading_order(cur)) {
        TrivializeResult step;
        try {
            step = trivialize_step(complex, cur);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NotACoboundary)
                return std::nullopt;
            throw;
        }
        total = compose(step.phi, total);
        cur = std::move(step.result);
    }
    return total;
}

TruncatedDeformation random_deformation(const MorphismComplex& complex, const GeneratorOptions& opts,
                                        std::mt19937_64& rng)
{
    const DialgebraMorphism& psi = complex.morphism();
    const int n = opts.order;
    if (n < 0)
        throw Error(ErrorKind::IndexOutOfRange, "negative deformation order");
    const int lz = std::min(opts.leading_zeros, n);
    if (lz == n)
        return TruncatedDeformation::trivial(psi, n);
    const std::vector<MorphismCochain> basis = complex.cocycle_basis(2);
    if (basis.empty())
        return TruncatedDeformation::trivial(psi, n);

    // Extends lead (placed after lz zero coefficients) to order n, or gives up.
    auto grow = [&](const MorphismCochain& lead, int shift_mode) -> std::optional<TruncatedDeformation> {
        TruncatedDeformation cur = TruncatedDeformation::trivial(psi, lz);
        cur.append(lead);
        while (cur.order() < n) {
            std::optional<MorphismCochain> shift;
            if (shift_mode == 1 || (shift_mode == 2 && rng() % 2 == 0))
                shift = random_cocycle(basis, complex, opts.range, shift_mode == 2, rng);
            ExtendOutcome step = extend_step(complex, cur, shift ? &*shift : nullptr);
            if (!step.extended)
                return std::nullopt;
            cur = std::move(*step.extended);
        }
        cur.name = "random";
        return cur;
    };

    // Attempts cycle through dense and sparse leading terms and shifts.
    for (int attempt = 0; attempt < opts.attempts; ++attempt) {
        const bool sparse = attempt % 2 == 1;
        MorphismCochain lead = random_cocycle(basis, complex, opts.range, sparse, rng);
        if (lead.is_zero())
            continue;
        if (auto th = grow(lead, attempt % 3))
            return *th;
    }
    // Deterministic fallback: single basis cocycles, particular solutions only.
    for (const auto& b : basis)
        if (auto th = grow(b, 0))
            return *th;
    return TruncatedDeformation::trivial(psi, n);
}

FormalIso random_formal_iso(Field f, std::size_t dim_d, std::size_t dim_e, int order, std::mt19937_64& rng,
                            long range)
{
    std::uniform_int_distribution<long> dist(-range, range);
    FormalIso phi = FormalIso::identity(f, dim_d, dim_e, order);
    for (int n = 1; n <= order; ++n) {
        for (std::size_t r = 0; r < dim_d; ++r)
            for (std::size_t c = 0; c < dim_d; ++c)
                phi.phiD[n](r, c) = Scalar(f, dist(rng));
        for (std::size_t r = 0; r < dim_e; ++r)
            for (std::size_t c = 0; c < dim_e; ++c)
                phi.phiE[n](r, c) = Scalar(f, dist(rng));
    }
    return phi;
}

RigidityReport rigidity_probe(const DialgebraMorphism& psi, const RigidityOptions& opts)
{
    const MorphismComplex complex(psi);
    RigidityReport rep;
    rep.hy2_dim = complex.cohomology_dim(2);
    rep.rigid = rep.hy2_dim == 0;
    rep.verdict = rep.rigid ? "rigid (HY^2 vanishes)" : "not decided (HY^2 nonzero)";
    if (!rep.rigid)
        for (const auto& c : complex.cocycle_basis(2))
            if (!complex.solve_primitive(c)) {
                rep.witness = c;
                break;
            }

    std::mt19937_64 rng(opts.seed);
    const TruncatedDeformation trivial = TruncatedDeformation::trivial(psi, opts.order);
    for (int s = 0; s < opts.samples; ++s) {
        GeneratorOptions g;
        g.order = opts.order;
        g.leading_zeros = s % 2;
        const TruncatedDeformation th = random_deformation(complex, g, rng);
        ++rep.samples;
        if (auto iso = trivializing_iso(complex, th); iso && apply_formal_iso(th, *iso) == trivial)
            ++rep.trivialized;
    }
    return rep;
}

} // namespace dialg
