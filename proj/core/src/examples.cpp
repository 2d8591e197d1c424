#include "dialg/examples.hpp"

#include "dialg/error.hpp"

namespace dialg::examples {

Dialgebra zero_dialgebra(Field f, std::size_t dim)
{
    return Dialgebra::zero("Z" + std::to_string(dim), f, dim);
}

Dialgebra multiplication(Field f)
{
    Dialgebra d = Dialgebra::zero("K", f, 1);
    d.basis_names = {"e"};
    d.left(0, 0, 0) = Scalar::one(f);
    d.right(0, 0, 0) = Scalar::one(f);
    return d;
}

Dialgebra noncommutative_n(Field f)
{
    Dialgebra d = Dialgebra::zero("N", f, 2);
    d.left(0, 0, 0) = Scalar::one(f);
    d.left(1, 0, 1) = Scalar::one(f);
    d.right(0, 0, 0) = Scalar::one(f);
    return d;
}

Dialgebra noncommutative_m(Field f)
{
    Dialgebra d = Dialgebra::zero("M", f, 2);
    d.left(0, 1, 0) = Scalar::one(f);
    d.left(1, 1, 1) = Scalar::one(f);
    d.right(1, 1, 1) = Scalar::one(f);
    return d;
}

std::vector<Dialgebra> dialgebras(Field f)
{
    return {zero_dialgebra(f, 1), zero_dialgebra(f, 2), multiplication(f), noncommutative_n(f),
            noncommutative_m(f)};
}

std::vector<DialgebraMorphism> morphisms(Field f)
{
    std::vector<DialgebraMorphism> out;
    for (const auto& d : dialgebras(f))
        out.push_back(identity_morphism(d));
    const Dialgebra k = multiplication(f);
    const Dialgebra n = noncommutative_n(f);
    const Dialgebra m = noncommutative_m(f);
    out.push_back({"proj_N_K", n, k, Matrix::from_ints(f, {{1, 0}})});
    out.push_back({"incl_K_N", k, n, Matrix::from_ints(f, {{1}, {0}})});
    out.push_back({"incl_K_M", k, m, Matrix::from_ints(f, {{0}, {1}})});
    out.push_back({"sum_Z2_Z1", zero_dialgebra(f, 2), zero_dialgebra(f, 1), Matrix::from_ints(f, {{1, 1}})});
    return out;
}

DialgebraMorphism find_morphism(Field f, std::string_view name)
{
    for (auto& m : morphisms(f))
        if (m.name == name)
            return m;
    throw Error(ErrorKind::UnknownReference, "no bundled morphism named " + std::string(name));
}

TruncatedDeformation z_family(Field f, long l, long r, long le, long re, long s)
{
    const DialgebraMorphism id = identity_morphism(zero_dialgebra(f, 1));
    TruncatedDeformation th = TruncatedDeformation::trivial(id, 1);
    th.name = "z_family";
    const std::size_t args[] = {0, 0};
    th.fD[1].value(right_comb_index(2), args)[0] = Scalar(f, l);
    th.fD[1].value(left_comb_index(2), args)[0] = Scalar(f, r);
    th.fE[1].value(right_comb_index(2), args)[0] = Scalar(f, le);
    th.fE[1].value(left_comb_index(2), args)[0] = Scalar(f, re);
    th.psis[1].coeffs[0] = Scalar(f, s);
    return th;
}

TruncatedDeformation one_plus_t(Field f, int order)
{
    const Dialgebra k = multiplication(f);
    TruncatedDeformation th = TruncatedDeformation::trivial(identity_morphism(k), order);
    th.name = "one_plus_t";
    if (order >= 1) {
        th.fD[1] = product_cochain(k);
        th.fE[1] = product_cochain(k);
    }
    return th;
}

} // namespace dialg::examples
