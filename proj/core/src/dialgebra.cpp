#include "dialg/dialgebra.hpp"

#include "dialg/error.hpp"

#include <sstream>

namespace dialg {

namespace {

void check_tensor(const Tensor3& t, std::size_t a, std::size_t b, std::size_t c, const char* what)
{
    if (t.extent(0) != a || t.extent(1) != b || t.extent(2) != c || t.data().size() != a * b * c)
        throw Error(ErrorKind::ShapeMismatch, std::string(what) + " tensor has the wrong shape");
}

void check_shape(const Dialgebra& d)
{
    check_tensor(d.left, d.dim, d.dim, d.dim, "left product");
    check_tensor(d.right, d.dim, d.dim, d.dim, "right product");
    if (d.basis_names.size() != d.dim)
        throw Error(ErrorKind::ShapeMismatch, "basis name count differs from dimension");
}

void check_shape(const Dialgebra& d, const Representation& r)
{
    if (r.algebra_dim != d.dim)
        throw Error(ErrorKind::ShapeMismatch, "representation built for a different dimension");
    if (r.field != d.field)
        throw Error(ErrorKind::FieldMismatch, "representation over a different field");
    const auto n = r.module_dim;
    check_tensor(r.act_dl, d.dim, n, n, "act_dl");
    check_tensor(r.act_dr, d.dim, n, n, "act_dr");
    check_tensor(r.act_ld, n, d.dim, n, "act_ld");
    check_tensor(r.act_rd, n, d.dim, n, "act_rd");
}

// Operand of an axiom expression: a vector in D or in M.
struct Typed {
    bool in_module;
    Vector v;
};

class Evaluator {
public:
    Evaluator(const Dialgebra& d, const Representation* r) : d_(d), r_(r) {}

    Typed mul(Product p, const Typed& x, const Typed& y) const
    {
        if (!x.in_module && !y.in_module)
            return {false, d_.multiply(p, x.v, y.v)};
        const Tensor3& t = x.in_module ? r_->right_action(p) : r_->left_action(p);
        Vector out = zero_vector(d_.field, r_->module_dim);
        // x.in_module: t is (m, a, k); otherwise (a, m, k)
        const auto& first = x.v;
        const auto& second = y.v;
        for (std::size_t i = 0; i < first.size(); ++i) {
            if (first[i].is_zero())
                continue;
            for (std::size_t j = 0; j < second.size(); ++j) {
                if (second[j].is_zero())
                    continue;
                const Scalar c = first[i] * second[j];
                for (std::size_t k = 0; k < out.size(); ++k)
                    out[k].add_product(c, t(i, j, k));
            }
        }
        return {true, std::move(out)};
    }

    Typed eval(const Bracketing& b, const Typed& x, const Typed& y, const Typed& z) const
    {
        if (b.left_nested)
            return mul(b.outer, mul(b.inner, x, y), z);
        return mul(b.outer, x, mul(b.inner, y, z));
    }

private:
    const Dialgebra& d_;
    const Representation* r_;
};

Tensor3 transported(const Dialgebra& target, const Matrix& map, Product p, bool module_on_right)
{
    // For a in D (source), m in E: (psi(a) ∘ m) or (m ∘ psi(a)).
    const std::size_t ds = map.cols();
    const std::size_t de = target.dim;
    Tensor3 out = module_on_right ? Tensor3(target.field, ds, de, de) : Tensor3(target.field, de, ds, de);
    const Tensor3& t = target.tensor(p);
    for (std::size_t a = 0; a < ds; ++a)
        for (std::size_t m = 0; m < de; ++m)
            for (std::size_t e = 0; e < de; ++e) {
                const Scalar& c = map(e, a);
                if (c.is_zero())
                    continue;
                for (std::size_t k = 0; k < de; ++k) {
                    if (module_on_right)
                        out(a, m, k).add_product(c, t(e, m, k));
                    else
                        out(m, a, k).add_product(c, t(m, e, k));
                }
            }
    return out;
}

} // namespace

Dialgebra Dialgebra::zero(std::string name, Field f, std::size_t dim)
{
    Dialgebra d;
    d.name = std::move(name);
    d.field = f;
    d.dim = dim;
    for (std::size_t i = 0; i < dim; ++i)
        d.basis_names.push_back("e" + std::to_string(i));
    d.left = Tensor3(f, dim, dim, dim);
    d.right = Tensor3(f, dim, dim, dim);
    return d;
}

Vector Dialgebra::multiply(Product p, std::span<const Scalar> x, std::span<const Scalar> y) const
{
    const Tensor3& t = tensor(p);
    Vector out = zero_vector(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero())
                continue;
            const Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < dim; ++k)
                out[k].add_product(c, t(i, j, k));
        }
    }
    return out;
}

Vector Dialgebra::basis_vector(std::size_t i) const
{
    Vector v = zero_vector(field, dim);
    v.at(i) = Scalar::one(field);
    return v;
}

Representation Representation::zero(Field f, std::size_t algebra_dim, std::size_t module_dim)
{
    Representation r;
    r.field = f;
    r.algebra_dim = algebra_dim;
    r.module_dim = module_dim;
    r.act_dl = Tensor3(f, algebra_dim, module_dim, module_dim);
    r.act_dr = Tensor3(f, algebra_dim, module_dim, module_dim);
    r.act_ld = Tensor3(f, module_dim, algebra_dim, module_dim);
    r.act_rd = Tensor3(f, module_dim, algebra_dim, module_dim);
    return r;
}

Vector Representation::act_left(Product p, std::size_t a, std::span<const Scalar> m) const
{
    const Tensor3& t = left_action(p);
    Vector out = zero_vector(field, module_dim);
    for (std::size_t b = 0; b < module_dim; ++b) {
        if (m[b].is_zero())
            continue;
        for (std::size_t k = 0; k < module_dim; ++k)
            out[k].add_product(m[b], t(a, b, k));
    }
    return out;
}

Vector Representation::act_right(Product p, std::span<const Scalar> m, std::size_t a) const
{
    const Tensor3& t = right_action(p);
    Vector out = zero_vector(field, module_dim);
    for (std::size_t b = 0; b < module_dim; ++b) {
        if (m[b].is_zero())
            continue;
        for (std::size_t k = 0; k < module_dim; ++k)
            out[k].add_product(m[b], t(b, a, k));
    }
    return out;
}

const std::array<Axiom, 5>& dialgebra_axioms()
{
    using P = Product;
    static const std::array<Axiom, 5> axioms{{
        {1, {false, P::Left, P::Left}, {true, P::Left, P::Left}, "x⊣(y⊣z) = (x⊣y)⊣z"},
        {2, {true, P::Left, P::Left}, {false, P::Left, P::Right}, "(x⊣y)⊣z = x⊣(y⊢z)"},
        {3, {true, P::Left, P::Right}, {false, P::Right, P::Left}, "(x⊢y)⊣z = x⊢(y⊣z)"},
        {4, {true, P::Right, P::Left}, {false, P::Right, P::Right}, "(x⊣y)⊢z = x⊢(y⊢z)"},
        {5, {false, P::Right, P::Right}, {true, P::Right, P::Right}, "x⊢(y⊢z) = (x⊢y)⊢z"},
    }};
    return axioms;
}

std::string Violation::describe() const
{
    std::ostringstream os;
    os << "axiom " << axiom;
    if (module_slot >= 0)
        os << " (slot " << "xyz"[module_slot] << " in M)";
    os << " at (" << indices[0] << ", " << indices[1] << ", " << indices[2] << "): lhs = [";
    for (std::size_t i = 0; i < lhs.size(); ++i)
        os << (i ? " " : "") << lhs[i];
    os << "], rhs = [";
    for (std::size_t i = 0; i < rhs.size(); ++i)
        os << (i ? " " : "") << rhs[i];
    os << "]";
    return os.str();
}

CheckReport check_dialgebra(const Dialgebra& d)
{
    check_shape(d);
    const Evaluator ev(d, nullptr);
    CheckReport report;
    for (const auto& ax : dialgebra_axioms())
        for (std::size_t i = 0; i < d.dim; ++i)
            for (std::size_t j = 0; j < d.dim; ++j)
                for (std::size_t k = 0; k < d.dim; ++k) {
                    const Typed x{false, d.basis_vector(i)};
                    const Typed y{false, d.basis_vector(j)};
                    const Typed z{false, d.basis_vector(k)};
                    auto l = ev.eval(ax.lhs, x, y, z);
                    auto r = ev.eval(ax.rhs, x, y, z);
                    if (l.v != r.v) {
                        report.valid = false;
                        report.violations.push_back({ax.number, -1, {i, j, k}, std::move(l.v), std::move(r.v)});
                    }
                }
    return report;
}

CheckReport check_representation(const Dialgebra& d, const Representation& r)
{
    check_shape(d);
    check_shape(d, r);
    const Evaluator ev(d, &r);
    CheckReport report;
    auto unit = [&](bool in_module, std::size_t i) {
        Vector v = zero_vector(d.field, in_module ? r.module_dim : d.dim);
        v[i] = Scalar::one(d.field);
        return Typed{in_module, std::move(v)};
    };
    for (const auto& ax : dialgebra_axioms())
        for (int slot = 0; slot < 3; ++slot) {
            const std::size_t n0 = slot == 0 ? r.module_dim : d.dim;
            const std::size_t n1 = slot == 1 ? r.module_dim : d.dim;
            const std::size_t n2 = slot == 2 ? r.module_dim : d.dim;
            for (std::size_t i = 0; i < n0; ++i)
                for (std::size_t j = 0; j < n1; ++j)
                    for (std::size_t k = 0; k < n2; ++k) {
                        auto l = ev.eval(ax.lhs, unit(slot == 0, i), unit(slot == 1, j), unit(slot == 2, k));
                        auto rr = ev.eval(ax.rhs, unit(slot == 0, i), unit(slot == 1, j), unit(slot == 2, k));
                        if (l.v != rr.v) {
                            report.valid = false;
                            report.violations.push_back({ax.number, slot, {i, j, k}, std::move(l.v), std::move(rr.v)});
                        }
                    }
        }
    return report;
}

CheckReport check_morphism(const DialgebraMorphism& psi)
{
    check_shape(psi.source);
    check_shape(psi.target);
    if (psi.source.field != psi.target.field || psi.map.field() != psi.source.field)
        throw Error(ErrorKind::FieldMismatch, "morphism '" + psi.name + "' mixes fields");
    if (psi.map.rows() != psi.target.dim || psi.map.cols() != psi.source.dim)
        throw Error(ErrorKind::ShapeMismatch, "morphism '" + psi.name + "' matrix has the wrong shape");
    psi.map.check_fields();
    CheckReport report;
    const auto& D = psi.source;
    const auto& E = psi.target;
    for (Product p : {Product::Left, Product::Right})
        for (std::size_t a = 0; a < D.dim; ++a)
            for (std::size_t b = 0; b < D.dim; ++b) {
                Vector lhs = psi.apply(D.tensor(p).fiber(a, b));
                Vector rhs = E.multiply(p, psi.map.column(a), psi.map.column(b));
                if (lhs != rhs) {
                    report.valid = false;
                    report.violations.push_back(
                        {p == Product::Left ? 1 : 2, -1, {a, b, 0}, std::move(lhs), std::move(rhs)});
                }
            }
    return report;
}

Representation adjoint_rep(const Dialgebra& d)
{
    check_shape(d);
    Representation r;
    r.field = d.field;
    r.algebra_dim = d.dim;
    r.module_dim = d.dim;
    r.act_dl = d.left;
    r.act_dr = d.right;
    r.act_ld = d.left;
    r.act_rd = d.right;
    return r;
}

Representation pullback_rep(const DialgebraMorphism& psi)
{
    Representation r;
    r.field = psi.target.field;
    r.algebra_dim = psi.source.dim;
    r.module_dim = psi.target.dim;
    r.act_dl = transported(psi.target, psi.map, Product::Left, true);
    r.act_dr = transported(psi.target, psi.map, Product::Right, true);
    r.act_ld = transported(psi.target, psi.map, Product::Left, false);
    r.act_rd = transported(psi.target, psi.map, Product::Right, false);
    return r;
}

DialgebraMorphism identity_morphism(const Dialgebra& d)
{
    return {"id_" + d.name, d, d, Matrix::identity(d.field, d.dim)};
}

DialgebraMorphism compose(const DialgebraMorphism& outer, const DialgebraMorphism& inner)
{
    if (inner.target.dim != outer.source.dim)
        throw Error(ErrorKind::ShapeMismatch, "cannot compose morphisms with mismatched dimensions");
    return {outer.name + "∘" + inner.name, inner.source, outer.target, outer.map * inner.map};
}

std::vector<Dialgebra> enumerate_small_dialgebras(Field f, std::size_t dim, int max_nonzero)
{
    const std::size_t slots = 2 * dim * dim * dim;
    std::vector<Dialgebra> found;
    std::vector<std::size_t> pos;
    std::vector<int> sign;

    auto build_and_test = [&] {
        Dialgebra d = Dialgebra::zero("enum" + std::to_string(found.size()), f, dim);
        for (std::size_t n = 0; n < pos.size(); ++n) {
            const std::size_t s = pos[n];
            const std::size_t per = dim * dim * dim;
            Tensor3& t = s < per ? d.left : d.right;
            const std::size_t flat = s % per;
            t(flat / (dim * dim), (flat / dim) % dim, flat % dim) = Scalar(f, sign[n]);
        }
        if (check_dialgebra(d).valid)
            found.push_back(std::move(d));
    };

    // Choose support positions in increasing order, then a sign per position.
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        build_and_test();
        if (static_cast<int>(pos.size()) == max_nonzero)
            return;
        for (std::size_t s = start; s < slots; ++s)
            for (int sg : {1, -1}) {
                pos.push_back(s);
                sign.push_back(sg);
                self(self, s + 1);
                pos.pop_back();
                sign.pop_back();
            }
    };
    recurse(recurse, 0);
    return found;
}

} // namespace dialg
