#pragma once

#include "dialg/cochain.hpp"
#include "dialg/dialgebra.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>

namespace dialg {

/// An element (ξ; π; φ) of CY^n(ψ,ψ) = CY^n(D,D) × CY^n(E,E) × CY^{n-1}(D,E),
/// with E a D-module through ψ.
struct MorphismCochain {
    Cochain xi;
    Cochain pi;
    Cochain phi;

    int degree() const { return xi.degree(); }
    bool is_zero() const { return xi.is_zero() && pi.is_zero() && phi.is_zero(); }

    MorphismCochain& operator+=(const MorphismCochain& o);
    MorphismCochain& operator-=(const MorphismCochain& o);
    friend MorphismCochain operator+(MorphismCochain a, const MorphismCochain& b) { return a += b; }
    friend MorphismCochain operator-(MorphismCochain a, const MorphismCochain& b) { return a -= b; }
    friend bool operator==(const MorphismCochain&, const MorphismCochain&) = default;
};

/// The deformation complex of a dialgebra morphism.
///
/// Flattened cochains are block vectors (ξ | π | φ). CY^0(ψ,ψ) is zero, so
/// cohomology starts in degree 1. Coboundary matrices are cached per degree;
/// copies share the cache and concurrent use is safe.
class MorphismComplex {
public:
    explicit MorphismComplex(DialgebraMorphism psi, int cap = kDefaultTreeCap);

    const DialgebraMorphism& morphism() const { return psi_; }
    const Dialgebra& source() const { return psi_.source; }
    const Dialgebra& target() const { return psi_.target; }
    const Representation& source_adjoint() const { return adj_d_; }
    const Representation& target_adjoint() const { return adj_e_; }
    /// E as a D-module through ψ.
    const Representation& pullback() const { return pull_; }
    Field field() const { return psi_.source.field; }
    int cap() const { return cap_; }

    std::size_t dim(int n) const;
    MorphismCochain zero(int n) const;
    MorphismCochain random(int n, std::mt19937_64& rng, long range = 2) const;

    Vector flatten(const MorphismCochain& a) const;
    MorphismCochain unflatten(int n, std::span<const Scalar> v) const;

    /// (ψξ)(y ⊗ a) = ψ(ξ(y ⊗ a)).
    Cochain push_forward(const Cochain& xi) const;
    /// (πψ)(y ⊗ (a_1..a_n)) = π(y ⊗ (ψa_1..ψa_n)).
    Cochain pull_back(const Cochain& pi) const;
    Matrix push_forward_matrix(int n) const;
    Matrix pull_back_matrix(int n) const;

    /// (δξ; δπ; ψξ − πψ − δφ), computed term by term.
    MorphismCochain coboundary(const MorphismCochain& a) const;
    /// Block matrix of the coboundary out of degree n (n >= 1).
    const Matrix& coboundary_matrix(int n) const;

    /// Cached factorization of coboundary_matrix(n).
    const LinearSolver& solver(int n) const;
    std::size_t cohomology_dim(int n) const;
    /// Some β with δβ = θ, or nullopt.
    std::optional<MorphismCochain> solve_primitive(const MorphismCochain& theta) const;
    /// Basis of the n-cocycles.
    std::vector<MorphismCochain> cocycle_basis(int n) const;

    /// (ξ; π; φ) ↦ (ξ; π + δφ; 0) for degree 1, with φ ∈ E read as a 0-cochain of E.
    MorphismCochain normalize_1cochain(const MorphismCochain& a) const;

private:
    void check_degree(int n, int needed_tree_degree) const;
    void check_member(const MorphismCochain& a) const;

    DialgebraMorphism psi_;
    int cap_;
    Representation adj_d_;
    Representation adj_e_;
    Representation pull_;

    struct Cache {
        std::recursive_mutex mutex;
        std::map<int, std::unique_ptr<Matrix>> coboundaries;
        std::map<int, std::unique_ptr<LinearSolver>> solvers;
        std::map<int, std::vector<MorphismCochain>> cocycles;
    };
    std::shared_ptr<Cache> cache_;
};

MorphismCochain mor_coboundary(const DialgebraMorphism& psi, const MorphismCochain& a, int cap = kDefaultTreeCap);
std::size_t mor_cohomology_dim(const DialgebraMorphism& psi, int n, int cap = kDefaultTreeCap);
MorphismCochain normalize_1cochain(const DialgebraMorphism& psi, const MorphismCochain& a);

} // namespace dialg
