#pragma once

#include "dialg/matrix.hpp"
#include "dialg/trees.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dialg {

/// Dense structure tensor T[i][j][k] of a bilinear map V_i x V_j -> W_k.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(Field f, std::size_t d0, std::size_t d1, std::size_t d2)
        : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, Scalar(f))
    {
    }

    std::size_t extent(int axis) const { return axis == 0 ? d0_ : axis == 1 ? d1_ : d2_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d1_ + j) * d2_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return data_[(i * d1_ + j) * d2_ + k];
    }
    /// The output vector T[i][j][*].
    std::span<const Scalar> fiber(std::size_t i, std::size_t j) const { return {data_.data() + (i * d1_ + j) * d2_, d2_}; }
    const std::vector<Scalar>& data() const { return data_; }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<Scalar> data_;
};

/// Finite-dimensional dialgebra given by its two structure tensors.
struct Dialgebra {
    std::string name;
    Field field = Field::rationals();
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    Tensor3 left;  // e_i ⊣ e_j = sum_k left(i,j,k) e_k
    Tensor3 right; // e_i ⊢ e_j = sum_k right(i,j,k) e_k

    /// Zero products in the given dimension; basis named e0, e1, ...
    static Dialgebra zero(std::string name, Field f, std::size_t dim);

    const Tensor3& tensor(Product p) const { return p == Product::Left ? left : right; }
    Tensor3& tensor(Product p) { return p == Product::Left ? left : right; }

    Vector multiply(Product p, std::span<const Scalar> x, std::span<const Scalar> y) const;
    Vector basis_vector(std::size_t i) const;
};

/// A D-module with the four actions of a dialgebra representation.
struct Representation {
    Field field = Field::rationals();
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    Tensor3 act_dl; // e_a ⊣ m_b      (algebra_dim x module_dim x module_dim)
    Tensor3 act_dr; // e_a ⊢ m_b
    Tensor3 act_ld; // m_b ⊣ e_a      (module_dim x algebra_dim x module_dim)
    Tensor3 act_rd; // m_b ⊢ e_a

    static Representation zero(Field f, std::size_t algebra_dim, std::size_t module_dim);

    const Tensor3& left_action(Product p) const { return p == Product::Left ? act_dl : act_dr; }
    const Tensor3& right_action(Product p) const { return p == Product::Left ? act_ld : act_rd; }

    /// e_a ∘ m and m ∘ e_a for a module vector m.
    Vector act_left(Product p, std::size_t a, std::span<const Scalar> m) const;
    Vector act_right(Product p, std::span<const Scalar> m, std::size_t a) const;
};

struct DialgebraMorphism {
    std::string name;
    Dialgebra source;
    Dialgebra target;
    Matrix map; // target.dim x source.dim

    Vector apply(std::span<const Scalar> x) const { return map.apply(x); }
};

/// One side of an axiom: (x ∘inner y) ∘outer z when left_nested, else
/// x ∘outer (y ∘inner z).
struct Bracketing {
    bool left_nested;
    Product outer;
    Product inner;
};

struct Axiom {
    int number;
    Bracketing lhs;
    Bracketing rhs;
    const char* text;
};

/// The five dialgebra axioms, numbered as in the usual chain
///   x⊣(y⊣z) =1= (x⊣y)⊣z =2= x⊣(y⊢z),  (x⊢y)⊣z =3= x⊢(y⊣z),
///   (x⊣y)⊢z =4= x⊢(y⊢z) =5= (x⊢y)⊢z.
const std::array<Axiom, 5>& dialgebra_axioms();

struct Violation {
    int axiom = 0;
    int module_slot = -1; // which of x, y, z lies in M; -1 for dialgebra axioms
    std::array<std::size_t, 3> indices{};
    Vector lhs;
    Vector rhs;

    std::string describe() const;
};

struct CheckReport {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Checks the five axioms on all basis triples. Throws ShapeMismatch on
/// badly shaped tensors.
CheckReport check_dialgebra(const Dialgebra& d);

/// Checks the fifteen representation axioms (each dialgebra axiom with one
/// of x, y, z taken from M) on all basis triples.
CheckReport check_representation(const Dialgebra& d, const Representation& r);

/// Checks psi(a ⊣ b) = psi(a) ⊣ psi(b) and the ⊢ analogue on basis pairs.
/// Violations carry axiom 1 for ⊣ and 2 for ⊢ with indices (a, b, 0).
/// Throws FieldMismatch or ShapeMismatch.
CheckReport check_morphism(const DialgebraMorphism& psi);

Representation adjoint_rep(const Dialgebra& d);

/// E as a D-module through psi: a ∘ m = psi(a) ∘ m, m ∘ a = m ∘ psi(a).
Representation pullback_rep(const DialgebraMorphism& psi);

DialgebraMorphism identity_morphism(const Dialgebra& d);

/// outer ∘ inner; throws ShapeMismatch unless inner.target matches outer.source in dimension.
DialgebraMorphism compose(const DialgebraMorphism& outer, const DialgebraMorphism& inner);

/// Every dialgebra of dimension `dim` whose structure constants lie in
/// {-1, 0, 1} with at most `max_nonzero` nonzero entries across both
/// tensors and which passes check_dialgebra. Deterministic order.
std::vector<Dialgebra> enumerate_small_dialgebras(Field f, std::size_t dim, int max_nonzero);

} // namespace dialg
