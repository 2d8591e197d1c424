#pragma once

// Reference implementations kept separate from the library code paths.

#include "dialg/cochain.hpp"
#include "dialg/morphism_complex.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace oracle {

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k)
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

/// Matrix of δ^n built column by column from the term-by-term coboundary,
/// converted to integers (entries must be integral).
inline std::vector<std::vector<mpz_class>> coboundary_columns(const dialg::Dialgebra& d,
                                                              const dialg::Representation& m, int n)
{
    const dialg::CochainShape src = dialg::cochain_shape(d, m, n);
    const dialg::CochainShape dst = dialg::cochain_shape(d, m, n + 1);
    std::vector<std::vector<mpz_class>> out(dst.size(), std::vector<mpz_class>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
        dialg::Cochain e = dialg::Cochain::zero(d.field, src);
        e.coeffs[c] = dialg::Scalar::one(d.field);
        const dialg::Cochain img = dialg::coboundary(d, m, e);
        for (std::size_t r = 0; r < dst.size(); ++r) {
            const mpq_class q = img.coeffs[r].to_rational();
            if (q.get_den() != 1)
                throw std::runtime_error("oracle expects integral coboundary matrices");
            out[r][c] = q.get_num();
        }
    }
    return out;
}

/// dim HY^n(D,M) via the oracle rank; δ^{-1} = 0.
inline std::size_t cohomology_dim(const dialg::Dialgebra& d, const dialg::Representation& m, int n)
{
    const std::size_t cn = dialg::cochain_shape(d, m, n).size();
    const std::size_t r_out = bareiss_rank(coboundary_columns(d, m, n));
    const std::size_t r_in = n >= 1 ? bareiss_rank(coboundary_columns(d, m, n - 1)) : 0;
    return cn - r_out - r_in;
}

/// Morphism-complex analogue of coboundary_columns, from the blockwise
/// coboundary applied to unit cochains.
inline std::vector<std::vector<mpz_class>> mor_coboundary_columns(const dialg::MorphismComplex& c, int n)
{
    const std::size_t cols = c.dim(n);
    const std::size_t rows = c.dim(n + 1);
    std::vector<std::vector<mpz_class>> out(rows, std::vector<mpz_class>(cols));
    for (std::size_t j = 0; j < cols; ++j) {
        dialg::Vector e(cols, dialg::Scalar(c.field()));
        e[j] = dialg::Scalar::one(c.field());
        const dialg::Vector img = c.flatten(c.coboundary(c.unflatten(n, e)));
        for (std::size_t r = 0; r < rows; ++r) {
            const mpq_class q = img[r].to_rational();
            if (q.get_den() != 1)
                throw std::runtime_error("oracle expects integral coboundary matrices");
            out[r][j] = q.get_num();
        }
    }
    return out;
}

/// dim HY^n(ψ,ψ) via the oracle rank; the complex starts in degree 1.
inline std::size_t mor_cohomology_dim(const dialg::MorphismComplex& c, int n)
{
    const std::size_t r_out = bareiss_rank(mor_coboundary_columns(c, n));
    const std::size_t r_in = n >= 2 ? bareiss_rank(mor_coboundary_columns(c, n - 1)) : 0;
    return c.dim(n) - r_out - r_in;
}

} // namespace oracle
