#pragma once

#include "dialg/dialgebra.hpp"
#include "dialg/matrix.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace dialg {

/// Shape of CY^n(D, M): |Y_n| * dim_d^n * dim_m coordinates.
///
/// Coordinates are ordered tree-major, then by the argument multi-index
/// (a_1 most significant), then by the M basis. CY^0 has one tree slot and
/// no arguments, so it is just M.
struct CochainShape {
    int degree = 0;
    std::size_t dim_d = 0;
    std::size_t dim_m = 0;

    std::size_t tree_count() const;
    std::size_t arg_count() const;   // dim_d^degree
    std::size_t size() const { return tree_count() * arg_count() * dim_m; }

    /// Flat offset of the M-vector f(y ⊗ (e_args...)).
    std::size_t offset(std::size_t tree, std::span<const std::size_t> args) const;
    std::size_t offset(std::size_t tree, std::size_t arg_flat) const { return (tree * arg_count() + arg_flat) * dim_m; }

    friend bool operator==(const CochainShape&, const CochainShape&) = default;
};

struct Cochain {
    CochainShape shape;
    Field field = Field::rationals();
    Vector coeffs;

    static Cochain zero(Field f, CochainShape s);
    static Cochain zero(const Dialgebra& d, const Representation& m, int degree);

    int degree() const { return shape.degree; }
    std::span<const Scalar> value(std::size_t tree, std::span<const std::size_t> args) const;
    std::span<Scalar> value(std::size_t tree, std::span<const std::size_t> args);
    bool is_zero() const { return dialg::is_zero(coeffs); }

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain& operator*=(const Scalar& s);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(Cochain a, const Scalar& s) { return a *= s; }
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Steps through all multi-indices in {0..base-1}^len in lexicographic order.
class MultiIndex {
public:
    MultiIndex(std::size_t len, std::size_t base) : idx_(len, 0), base_(base), done_(base == 0 && len > 0) {}
    bool done() const { return done_; }
    const std::vector<std::size_t>& operator*() const { return idx_; }
    MultiIndex& operator++();

private:
    std::vector<std::size_t> idx_;
    std::size_t base_;
    bool done_;
};

CochainShape cochain_shape(const Dialgebra& d, const Representation& m, int degree);

/// δ: CY^n(D,M) -> CY^{n+1}(D,M), evaluated term by term. Throws
/// CapExceeded if n+1 > cap and ShapeMismatch if f does not fit (D, M).
Cochain coboundary(const Dialgebra& d, const Representation& m, const Cochain& f, int cap = kDefaultTreeCap);

/// Matrix of δ^n in the canonical bases (rows: CY^{n+1}, columns: CY^n),
/// assembled directly from structure constants.
Matrix coboundary_matrix(const Dialgebra& d, const Representation& m, int n, int cap = kDefaultTreeCap);

/// dim HY^n(D,M) = dim ker δ^n - rank δ^{n-1}; δ^{-1} = 0.
std::size_t cohomology_dim(const Dialgebra& d, const Representation& m, int n, int cap = kDefaultTreeCap);

struct Cohomology {
    int degree = 0;
    std::size_t dim = 0;
    std::size_t cocycle_dim = 0;
    std::size_t coboundary_dim = 0;
    std::vector<Cochain> representatives; // cocycles spanning a complement of the coboundaries
};

Cohomology cohomology(const Dialgebra& d, const Representation& m, int n, int cap = kDefaultTreeCap);

/// Some g with δg = f, or nullopt when f is not a coboundary. Requires n >= 1.
std::optional<Cochain> solve_primitive(const Dialgebra& d, const Representation& m, const Cochain& f,
                                       int cap = kDefaultTreeCap);

/// The product 2-cochain of D: ⊣ on the [21] slot, ⊢ on the [12] slot.
Cochain product_cochain(const Dialgebra& d);

/// Value of a 2-cochain on (e_a, e_b) at the slot selected by p ([21] for ⊣, [12] for ⊢).
std::span<const Scalar> bilinear_value(const Cochain& f, Product p, std::size_t a, std::size_t b);

/// Uniform coefficients in [-range, range].
Cochain random_cochain(Field f, CochainShape s, std::mt19937_64& rng, long range = 3);

} // namespace dialg
