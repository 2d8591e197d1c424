#include "dialg/cochain.hpp"

#include "dialg/error.hpp"

#include <string>

namespace dialg {

namespace {

std::size_t ipow(std::size_t b, int e)
{
    std::size_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

void check_cap(int n, int cap)
{
    if (n < 0)
        throw Error(ErrorKind::IndexOutOfRange, "negative cochain degree");
    if (n + 1 > cap)
        throw Error(ErrorKind::CapExceeded, "coboundary out of degree " + std::to_string(n) +
                                                " needs trees of degree " + std::to_string(n + 1) +
                                                ", above cap " + std::to_string(cap));
}

void check_pair(const Dialgebra& d, const Representation& m)
{
    if (m.algebra_dim != d.dim)
        throw Error(ErrorKind::ShapeMismatch, "representation does not match the dialgebra dimension");
    if (m.field != d.field)
        throw Error(ErrorKind::FieldMismatch, "representation and dialgebra over different fields");
}

} // namespace

std::size_t CochainShape::tree_count() const
{
    return trees_of_degree(degree).size();
}

std::size_t CochainShape::arg_count() const
{
    return ipow(dim_d, degree);
}

std::size_t CochainShape::offset(std::size_t tree, std::span<const std::size_t> args) const
{
    std::size_t flat = 0;
    for (auto a : args)
        flat = flat * dim_d + a;
    return offset(tree, flat);
}

MultiIndex& MultiIndex::operator++()
{
    for (std::size_t i = idx_.size(); i-- > 0;) {
        if (++idx_[i] < base_)
            return *this;
        idx_[i] = 0;
    }
    done_ = true;
    return *this;
}

Cochain Cochain::zero(Field f, CochainShape s)
{
    return Cochain{s, f, zero_vector(f, s.size())};
}

Cochain Cochain::zero(const Dialgebra& d, const Representation& m, int degree)
{
    return zero(d.field, cochain_shape(d, m, degree));
}

std::span<const Scalar> Cochain::value(std::size_t tree, std::span<const std::size_t> args) const
{
    return {coeffs.data() + shape.offset(tree, args), shape.dim_m};
}

std::span<Scalar> Cochain::value(std::size_t tree, std::span<const std::size_t> args)
{
    return {coeffs.data() + shape.offset(tree, args), shape.dim_m};
}

Cochain& Cochain::operator+=(const Cochain& o)
{
    if (!(shape == o.shape))
        throw Error(ErrorKind::ShapeMismatch, "adding cochains of different shapes");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] += o.coeffs[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o)
{
    if (!(shape == o.shape))
        throw Error(ErrorKind::ShapeMismatch, "subtracting cochains of different shapes");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] -= o.coeffs[i];
    return *this;
}

Cochain& Cochain::operator*=(const Scalar& s)
{
    for (auto& c : coeffs)
        c *= s;
    return *this;
}

CochainShape cochain_shape(const Dialgebra& d, const Representation& m, int degree)
{
    check_pair(d, m);
    return CochainShape{degree, d.dim, m.module_dim};
}

Cochain coboundary(const Dialgebra& d, const Representation& m, const Cochain& f, int cap)
{
    const int n = f.degree();
    check_cap(n, cap);
    if (!(f.shape == cochain_shape(d, m, n)))
        throw Error(ErrorKind::ShapeMismatch, "cochain does not belong to CY^n(D,M)");
    const Field fld = d.field;
    Cochain out = Cochain::zero(d, m, n + 1);
    const auto& trees = trees_of_degree(n + 1);
    std::vector<std::size_t> inner(static_cast<std::size_t>(n));
    for (const auto& y : trees) {
        for (MultiIndex it(static_cast<std::size_t>(n + 1), d.dim); !it.done(); ++it) {
            const auto& a = *it;
            Vector acc = zero_vector(fld, m.module_dim);
            // i = 0: a_1 ∘_0 f(d_0 y ⊗ (a_2, ..., a_{n+1}))
            {
                const std::span<const std::size_t> rest(a.data() + 1, static_cast<std::size_t>(n));
                const auto v = f.value(face_index(n + 1, y.index, 0), rest);
                const Vector w = m.act_left(prod_label(n + 1, y.index, 0), a[0], v);
                for (std::size_t k = 0; k < acc.size(); ++k)
                    acc[k] += w[k];
            }
            // 1 <= i <= n: f(d_i y ⊗ (..., a_i ∘_i a_{i+1}, ...))
            for (int i = 1; i <= n; ++i) {
                const auto fiber = d.tensor(prod_label(n + 1, y.index, i)).fiber(a[i - 1], a[i]);
                const std::size_t fy = face_index(n + 1, y.index, i);
                for (int s = 0; s < i - 1; ++s)
                    inner[s] = a[s];
                for (int s = i; s < n; ++s)
                    inner[s] = a[s + 1];
                for (std::size_t k = 0; k < d.dim; ++k) {
                    if (fiber[k].is_zero())
                        continue;
                    inner[i - 1] = k;
                    Scalar c = fiber[k];
                    if (i % 2)
                        c = -c;
                    const auto v = f.value(fy, inner);
                    for (std::size_t r = 0; r < acc.size(); ++r)
                        acc[r].add_product(c, v[r]);
                }
            }
            // i = n+1: f(d_{n+1} y ⊗ (a_1, ..., a_n)) ∘_{n+1} a_{n+1}
            {
                const std::span<const std::size_t> head(a.data(), static_cast<std::size_t>(n));
                const auto v = f.value(face_index(n + 1, y.index, n + 1), head);
                const Vector w = m.act_right(prod_label(n + 1, y.index, n + 1), v, a[n]);
                const bool negate = (n + 1) % 2;
                for (std::size_t k = 0; k < acc.size(); ++k) {
                    if (negate)
                        acc[k] -= w[k];
                    else
                        acc[k] += w[k];
                }
            }
            auto dst = out.value(y.index, a);
            for (std::size_t k = 0; k < acc.size(); ++k)
                dst[k] = std::move(acc[k]);
        }
    }
    return out;
}

Matrix coboundary_matrix(const Dialgebra& d, const Representation& m, int n, int cap)
{
    check_cap(n, cap);
    const CochainShape src = cochain_shape(d, m, n);
    const CochainShape dst = cochain_shape(d, m, n + 1);
    const Field fld = d.field;
    Matrix mat(fld, dst.size(), src.size());
    const std::size_t dm = m.module_dim;
    std::vector<std::size_t> inner(static_cast<std::size_t>(n));
    for (std::size_t y = 0; y < dst.tree_count(); ++y) {
        for (MultiIndex it(static_cast<std::size_t>(n + 1), d.dim); !it.done(); ++it) {
            const auto& a = *it;
            const std::size_t row0 = dst.offset(y, a);
            // i = 0: coefficient of m_out in e_{a_1} ∘ m_k
            {
                const Tensor3& act = m.left_action(prod_label(n + 1, y, 0));
                const std::size_t col0 =
                    src.offset(face_index(n + 1, y, 0), std::span<const std::size_t>(a.data() + 1, n));
                for (std::size_t k = 0; k < dm; ++k)
                    for (std::size_t out = 0; out < dm; ++out)
                        mat(row0 + out, col0 + k) += act(a[0], k, out);
            }
            for (int i = 1; i <= n; ++i) {
                const Tensor3& prod = d.tensor(prod_label(n + 1, y, i));
                const std::size_t fy = face_index(n + 1, y, i);
                for (int s = 0; s < i - 1; ++s)
                    inner[s] = a[s];
                for (int s = i; s < n; ++s)
                    inner[s] = a[s + 1];
                for (std::size_t k = 0; k < d.dim; ++k) {
                    const Scalar& c = prod(a[i - 1], a[i], k);
                    if (c.is_zero())
                        continue;
                    inner[i - 1] = k;
                    const std::size_t col0 = src.offset(fy, inner);
                    for (std::size_t out = 0; out < dm; ++out) {
                        if (i % 2)
                            mat(row0 + out, col0 + out) -= c;
                        else
                            mat(row0 + out, col0 + out) += c;
                    }
                }
            }
            {
                const Tensor3& act = m.right_action(prod_label(n + 1, y, n + 1));
                const std::size_t col0 =
                    src.offset(face_index(n + 1, y, n + 1), std::span<const std::size_t>(a.data(), n));
                for (std::size_t k = 0; k < dm; ++k)
                    for (std::size_t out = 0; out < dm; ++out) {
                        if ((n + 1) % 2)
                            mat(row0 + out, col0 + k) -= act(k, a[n], out);
                        else
                            mat(row0 + out, col0 + k) += act(k, a[n], out);
                    }
            }
        }
    }
    return mat;
}

std::size_t cohomology_dim(const Dialgebra& d, const Representation& m, int n, int cap)
{
    return cohomology(d, m, n, cap).dim;
}

Cohomology cohomology(const Dialgebra& d, const Representation& m, int n, int cap)
{
    check_cap(n, cap);
    const CochainShape shape = cochain_shape(d, m, n);
    const Matrix dn = coboundary_matrix(d, m, n, cap);
    Cohomology h;
    h.degree = n;
    const auto cocycles = kernel_basis(dn);
    h.cocycle_dim = cocycles.size();
    std::vector<Vector> span_vectors;
    if (n >= 1) {
        const Matrix prev = coboundary_matrix(d, m, n - 1, cap);
        h.coboundary_dim = rank(prev);
        for (std::size_t c = 0; c < prev.cols(); ++c)
            span_vectors.push_back(prev.column(c));
    }
    h.dim = h.cocycle_dim - h.coboundary_dim;
    // Greedily extend the coboundary span by kernel vectors.
    std::size_t current = h.coboundary_dim;
    for (const auto& z : cocycles) {
        if (h.representatives.size() == h.dim)
            break;
        span_vectors.push_back(z);
        const std::size_t r = rank(Matrix::from_columns(d.field, shape.size(), span_vectors));
        if (r > current) {
            current = r;
            h.representatives.push_back(Cochain{shape, d.field, z});
        } else {
            span_vectors.pop_back();
        }
    }
    return h;
}

std::optional<Cochain> solve_primitive(const Dialgebra& d, const Representation& m, const Cochain& f, int cap)
{
    const int n = f.degree();
    if (n < 1)
        throw Error(ErrorKind::IndexOutOfRange, "primitives exist only for degree >= 1");
    if (!(f.shape == cochain_shape(d, m, n)))
        throw Error(ErrorKind::ShapeMismatch, "cochain does not belong to CY^n(D,M)");
    const Matrix prev = coboundary_matrix(d, m, n - 1, cap);
    auto x = solve(prev, f.coeffs);
    if (!x)
        return std::nullopt;
    return Cochain{cochain_shape(d, m, n - 1), d.field, std::move(*x)};
}

Cochain product_cochain(const Dialgebra& d)
{
    const Representation adj = adjoint_rep(d);
    Cochain f = Cochain::zero(d, adj, 2);
    for (Product p : {Product::Left, Product::Right}) {
        const std::size_t tree = p == Product::Left ? right_comb_index(2) : left_comb_index(2);
        for (std::size_t a = 0; a < d.dim; ++a)
            for (std::size_t b = 0; b < d.dim; ++b) {
                const std::size_t args[] = {a, b};
                auto dst = f.value(tree, args);
                const auto src = d.tensor(p).fiber(a, b);
                for (std::size_t k = 0; k < d.dim; ++k)
                    dst[k] = src[k];
            }
    }
    return f;
}

std::span<const Scalar> bilinear_value(const Cochain& f, Product p, std::size_t a, std::size_t b)
{
    if (f.degree() != 2)
        throw Error(ErrorKind::ShapeMismatch, "bilinear_value needs a 2-cochain");
    const std::size_t tree = p == Product::Left ? right_comb_index(2) : left_comb_index(2);
    const std::size_t args[] = {a, b};
    return f.value(tree, args);
}

Cochain random_cochain(Field f, CochainShape s, std::mt19937_64& rng, long range)
{
    std::uniform_int_distribution<long> dist(-range, range);
    Cochain c = Cochain::zero(f, s);
    for (auto& x : c.coeffs)
        x = Scalar(f, dist(rng));
    return c;
}

} // namespace dialg
