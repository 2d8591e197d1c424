#include "dialg/morphism_complex.hpp"

#include "dialg/error.hpp"

namespace dialg {

MorphismCochain& MorphismCochain::operator+=(const MorphismCochain& o)
{
    xi += o.xi;
    pi += o.pi;
    phi += o.phi;
    return *this;
}

MorphismCochain& MorphismCochain::operator-=(const MorphismCochain& o)
{
    xi -= o.xi;
    pi -= o.pi;
    phi -= o.phi;
    return *this;
}

MorphismComplex::MorphismComplex(DialgebraMorphism psi, int cap)
    : psi_(std::move(psi)),
      cap_(cap),
      adj_d_(adjoint_rep(psi_.source)),
      adj_e_(adjoint_rep(psi_.target)),
      pull_(pullback_rep(psi_)),
      cache_(std::make_shared<Cache>())
{
    if (psi_.source.field != psi_.target.field)
        throw Error(ErrorKind::FieldMismatch, "morphism between dialgebras over different fields");
    if (psi_.map.rows() != psi_.target.dim || psi_.map.cols() != psi_.source.dim)
        throw Error(ErrorKind::ShapeMismatch, "morphism matrix has the wrong shape");
}

void MorphismComplex::check_degree(int n, int needed_tree_degree) const
{
    if (n < 1)
        throw Error(ErrorKind::IndexOutOfRange, "morphism cochains start in degree 1");
    if (needed_tree_degree > cap_)
        throw Error(ErrorKind::CapExceeded, "degree " + std::to_string(n) + " needs trees of degree " +
                                                std::to_string(needed_tree_degree) + ", above cap " +
                                                std::to_string(cap_));
}

void MorphismComplex::check_member(const MorphismCochain& a) const
{
    const int n = a.degree();
    if (n < 1 || !(a.xi.shape == cochain_shape(source(), adj_d_, n)) ||
        !(a.pi.shape == cochain_shape(target(), adj_e_, n)) ||
        !(a.phi.shape == cochain_shape(source(), pull_, n - 1)))
        throw Error(ErrorKind::ShapeMismatch, "not a cochain of this morphism complex");
}

std::size_t MorphismComplex::dim(int n) const
{
    if (n < 1)
        return 0;
    return cochain_shape(source(), adj_d_, n).size() + cochain_shape(target(), adj_e_, n).size() +
           cochain_shape(source(), pull_, n - 1).size();
}

MorphismCochain MorphismComplex::zero(int n) const
{
    if (n < 1)
        throw Error(ErrorKind::IndexOutOfRange, "morphism cochains start in degree 1");
    return {Cochain::zero(source(), adj_d_, n), Cochain::zero(target(), adj_e_, n),
            Cochain::zero(source(), pull_, n - 1)};
}

MorphismCochain MorphismComplex::random(int n, std::mt19937_64& rng, long range) const
{
    const Field f = field();
    return {random_cochain(f, cochain_shape(source(), adj_d_, n), rng, range),
            random_cochain(f, cochain_shape(target(), adj_e_, n), rng, range),
            random_cochain(f, cochain_shape(source(), pull_, n - 1), rng, range)};
}

Vector MorphismComplex::flatten(const MorphismCochain& a) const
{
    check_member(a);
    Vector v;
    v.reserve(a.xi.coeffs.size() + a.pi.coeffs.size() + a.phi.coeffs.size());
    v.insert(v.end(), a.xi.coeffs.begin(), a.xi.coeffs.end());
    v.insert(v.end(), a.pi.coeffs.begin(), a.pi.coeffs.end());
    v.insert(v.end(), a.phi.coeffs.begin(), a.phi.coeffs.end());
    return v;
}

MorphismCochain MorphismComplex::unflatten(int n, std::span<const Scalar> v) const
{
    if (v.size() != dim(n))
        throw Error(ErrorKind::ShapeMismatch, "flat vector does not match CY^n(ψ,ψ)");
    MorphismCochain a = zero(n);
    std::size_t pos = 0;
    for (Cochain* c : {&a.xi, &a.pi, &a.phi})
        for (auto& x : c->coeffs)
            x = v[pos++];
    return a;
}

Cochain MorphismComplex::push_forward(const Cochain& xi) const
{
    if (!(xi.shape == cochain_shape(source(), adj_d_, xi.degree())))
        throw Error(ErrorKind::ShapeMismatch, "push-forward needs a cochain in CY^n(D,D)");
    Cochain out = Cochain::zero(source(), pull_, xi.degree());
    const std::size_t blocks = xi.shape.tree_count() * xi.shape.arg_count();
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::span<const Scalar> v(xi.coeffs.data() + b * source().dim, source().dim);
        const Vector w = psi_.apply(v);
        for (std::size_t k = 0; k < w.size(); ++k)
            out.coeffs[b * target().dim + k] = w[k];
    }
    return out;
}

Cochain MorphismComplex::pull_back(const Cochain& pi) const
{
    const int n = pi.degree();
    if (!(pi.shape == cochain_shape(target(), adj_e_, n)))
        throw Error(ErrorKind::ShapeMismatch, "pull-back needs a cochain in CY^n(E,E)");
    Cochain out = Cochain::zero(source(), pull_, n);
    const std::size_t de = target().dim;
    for (std::size_t y = 0; y < pi.shape.tree_count(); ++y)
        for (MultiIndex a(static_cast<std::size_t>(n), source().dim); !a.done(); ++a) {
            // Expand π(y ⊗ (ψa_1, ..., ψa_n)) multilinearly over E-basis tuples.
            auto dst = out.value(y, *a);
            for (MultiIndex k(static_cast<std::size_t>(n), de); !k.done(); ++k) {
                Scalar c = Scalar::one(field());
                for (int s = 0; s < n && !c.is_zero(); ++s)
                    c *= psi_.map((*k)[s], (*a)[s]);
                if (c.is_zero())
                    continue;
                const auto v = pi.value(y, *k);
                for (std::size_t r = 0; r < de; ++r)
                    dst[r].add_product(c, v[r]);
            }
        }
    return out;
}

Matrix MorphismComplex::push_forward_matrix(int n) const
{
    const CochainShape src = cochain_shape(source(), adj_d_, n);
    const CochainShape dst = cochain_shape(source(), pull_, n);
    Matrix m(field(), dst.size(), src.size());
    const std::size_t blocks = src.tree_count() * src.arg_count();
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t e = 0; e < target().dim; ++e)
            for (std::size_t k = 0; k < source().dim; ++k)
                m(b * target().dim + e, b * source().dim + k) = psi_.map(e, k);
    return m;
}

Matrix MorphismComplex::pull_back_matrix(int n) const
{
    // Kronecker power of ψ acting on the argument slots, identity on trees and outputs.
    const CochainShape src = cochain_shape(target(), adj_e_, n);
    const CochainShape dst = cochain_shape(source(), pull_, n);
    const std::size_t de = target().dim;
    const std::size_t dd = source().dim;
    Matrix kron = Matrix::identity(field(), 1);
    for (int s = 0; s < n; ++s) {
        Matrix next(field(), kron.rows() * de, kron.cols() * dd);
        for (std::size_t r = 0; r < kron.rows(); ++r)
            for (std::size_t c = 0; c < kron.cols(); ++c)
                for (std::size_t e = 0; e < de; ++e)
                    for (std::size_t d = 0; d < dd; ++d)
                        next(r * de + e, c * dd + d) = kron(r, c) * psi_.map(e, d);
        kron = std::move(next);
    }
    // kron maps D-argument tuples (columns) to E-argument tuples (rows).
    Matrix m(field(), dst.size(), src.size());
    for (std::size_t y = 0; y < src.tree_count(); ++y)
        for (std::size_t a = 0; a < dst.arg_count(); ++a)
            for (std::size_t k = 0; k < src.arg_count(); ++k) {
                const Scalar& c = kron(k, a);
                if (c.is_zero())
                    continue;
                for (std::size_t r = 0; r < de; ++r)
                    m(dst.offset(y, a) + r, src.offset(y, k) + r) = c;
            }
    return m;
}

MorphismCochain MorphismComplex::coboundary(const MorphismCochain& a) const
{
    check_member(a);
    const int n = a.degree();
    check_degree(n, n + 1);
    MorphismCochain out{dialg::coboundary(source(), adj_d_, a.xi, cap_),
                        dialg::coboundary(target(), adj_e_, a.pi, cap_),
                        push_forward(a.xi) - pull_back(a.pi) - dialg::coboundary(source(), pull_, a.phi, cap_)};
    return out;
}

const Matrix& MorphismComplex::coboundary_matrix(int n) const
{
    check_degree(n, n + 1);
    std::lock_guard lock(cache_->mutex);
    auto& slot = cache_->coboundaries[n];
    if (slot)
        return *slot;

    const Matrix dd = dialg::coboundary_matrix(source(), adj_d_, n, cap_);
    const Matrix de = dialg::coboundary_matrix(target(), adj_e_, n, cap_);
    const Matrix dphi = dialg::coboundary_matrix(source(), pull_, n - 1, cap_);
    const Matrix push = push_forward_matrix(n);
    const Matrix pull = pull_back_matrix(n);

    const std::size_t c0 = dd.cols(), c1 = de.cols(), c2 = dphi.cols();
    const std::size_t r0 = dd.rows(), r1 = de.rows(), r2 = push.rows();
    Matrix m(field(), r0 + r1 + r2, c0 + c1 + c2);
    m.set_block(0, 0, dd);
    m.set_block(r0, c0, de);
    m.set_block(r0 + r1, 0, push);
    Matrix neg_pull = pull * Scalar(field(), -1L);
    m.set_block(r0 + r1, c0, neg_pull);
    Matrix neg_dphi = dphi * Scalar(field(), -1L);
    m.set_block(r0 + r1, c0 + c1, neg_dphi);
    slot = std::make_unique<Matrix>(std::move(m));
    return *slot;
}

const LinearSolver& MorphismComplex::solver(int n) const
{
    std::lock_guard lock(cache_->mutex);
    auto& slot = cache_->solvers[n];
    if (!slot)
        slot = std::make_unique<LinearSolver>(coboundary_matrix(n));
    return *slot;
}

std::size_t MorphismComplex::cohomology_dim(int n) const
{
    const std::size_t cocycles = dim(n) - solver(n).rank();
    const std::size_t boundaries = n >= 2 ? solver(n - 1).rank() : 0;
    return cocycles - boundaries;
}

std::optional<MorphismCochain> MorphismComplex::solve_primitive(const MorphismCochain& theta) const
{
    const int n = theta.degree();
    if (n < 2)
        return theta.is_zero() ? std::optional<MorphismCochain>() : std::nullopt;
    auto x = solver(n - 1).solve(flatten(theta));
    if (!x)
        return std::nullopt;
    return unflatten(n - 1, *x);
}

std::vector<MorphismCochain> MorphismComplex::cocycle_basis(int n) const
{
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->cocycles.find(n);
    if (it != cache_->cocycles.end())
        return it->second;
    std::vector<MorphismCochain> out;
    for (const auto& v : kernel_basis(coboundary_matrix(n)))
        out.push_back(unflatten(n, v));
    cache_->cocycles.emplace(n, out);
    return out;
}

MorphismCochain MorphismComplex::normalize_1cochain(const MorphismCochain& a) const
{
    check_member(a);
    if (a.degree() != 1)
        throw Error(ErrorKind::ShapeMismatch, "normalization applies to degree-1 morphism cochains");
    // φ ∈ CY^0(D,E) = E, re-read as an element of CY^0(E,E).
    Cochain phi_e = Cochain::zero(target(), adj_e_, 0);
    phi_e.coeffs = a.phi.coeffs;
    MorphismCochain out = a;
    out.pi += dialg::coboundary(target(), adj_e_, phi_e, cap_);
    for (auto& c : out.phi.coeffs)
        c = Scalar(field());
    return out;
}

MorphismCochain mor_coboundary(const DialgebraMorphism& psi, const MorphismCochain& a, int cap)
{
    return MorphismComplex(psi, cap).coboundary(a);
}

std::size_t mor_cohomology_dim(const DialgebraMorphism& psi, int n, int cap)
{
    return MorphismComplex(psi, cap).cohomology_dim(n);
}

MorphismCochain normalize_1cochain(const DialgebraMorphism& psi, const MorphismCochain& a)
{
    return MorphismComplex(psi).normalize_1cochain(a);
}

} // namespace dialg
