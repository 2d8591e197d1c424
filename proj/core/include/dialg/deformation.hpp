#pragma once

#include "dialg/morphism_complex.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace dialg {

inline constexpr int kDefaultOrderCap = 6;

/// Order-N deformation Θ_t of ψ: products f_{D,t}, f_{E,t} and Ψ_t = Σ ψ_n t^n.
///
/// fD[n], fE[n] are 2-cochains (⊣ on the [21] slot, ⊢ on [12]); psis[n] is a
/// 1-cochain in CY^1(D,E), whose value at e_a is the a-th column of ψ_n.
struct TruncatedDeformation {
    std::string name;
    DialgebraMorphism psi;
    std::vector<Cochain> fD;
    std::vector<Cochain> fE;
    std::vector<Cochain> psis;

    int order() const { return static_cast<int>(fD.size()) - 1; }

    /// All higher coefficients zero.
    static TruncatedDeformation trivial(const DialgebraMorphism& psi, int order);

    /// θ_n = (F_{D,n}; F_{E,n}; ψ_n), 1 <= n <= order.
    MorphismCochain theta(int n) const;
    /// Appends θ as the next-order coefficient.
    void append(const MorphismCochain& theta);
    /// Drops coefficients above `order`.
    TruncatedDeformation truncated(int order) const;

    friend bool operator==(const TruncatedDeformation& a, const TruncatedDeformation& b)
    {
        return a.fD == b.fD && a.fE == b.fE && a.psis == b.psis;
    }
};

/// Linear map as a 1-cochain in CY^1(D,M) and back.
Cochain map_cochain(Field f, const Matrix& m);
Matrix cochain_map(const Cochain& c);

/// Φ_t = (Σ φ_{D,n} t^n, Σ φ_{E,n} t^n) with φ_{D,0} = id, φ_{E,0} = id.
struct FormalIso {
    std::vector<Matrix> phiD;
    std::vector<Matrix> phiE;

    int order() const { return static_cast<int>(phiD.size()) - 1; }
    static FormalIso identity(Field f, std::size_t dim_d, std::size_t dim_e, int order);
    /// 1 + ξ t^k and 1 + π t^k, truncated at `order`.
    static FormalIso shift(const Matrix& xi, const Matrix& pi, int k, int order);
    friend bool operator==(const FormalIso&, const FormalIso&) = default;
};

/// Truncated inverse of a series with identity constant term.
std::vector<Matrix> series_inverse(const std::vector<Matrix>& phi);
/// Componentwise series product: the iso applying `first`, then `second`.
FormalIso compose(const FormalIso& second, const FormalIso& first);

struct DeformationReport {
    bool valid = true;
    std::optional<int> first_failing_order;
    std::string failing_identity;
};

/// Checks, order by order, the five axioms for f_{D,t} and f_{E,t} on basis
/// triples and Ψ_t f*_{D,t}(a,b) = f*_{E,t}(Ψ_t a, Ψ_t b) on basis pairs.
/// Throws ShapeMismatch or BaseMismatch.
DeformationReport verify_deformation(const TruncatedDeformation& th);

/// θ_1. Throws OrderTooLow for order 0.
MorphismCochain infinitesimal(const TruncatedDeformation& th);

struct CocycleReport {
    bool ok = true;
    std::optional<int> leading_order; // least k with θ_k != 0
    std::string residual;            // first nonzero coordinate, if any
};

/// δθ_k = 0 for the leading nonzero θ_k.
CocycleReport leading_cocycle_check(const MorphismComplex& complex, const TruncatedDeformation& th);
CocycleReport leading_cocycle_check(const TruncatedDeformation& th);

struct ObstructionClass {
    int order = 0; // N: the class obstructs order N+1
    MorphismCochain cochain;
};

/// The index triples (i, j, k), i + j + k = N + 1, of the primed sum in Ob_ψ:
/// exactly one index zero (three parts) or all positive (fourth part).
std::vector<std::array<int, 3>> sigma_prime_triples(int n);

/// Ob(Θ_t) for a valid deformation of order N >= 1.
/// Throws OrderTooLow or InvalidDeformation.
ObstructionClass obstruction(const TruncatedDeformation& th);

/// δ Ob = 0, with the first nonzero residual coordinate on failure.
CocycleReport obstruction_cocycle_check(const MorphismComplex& complex, const ObstructionClass& ob);
CocycleReport obstruction_cocycle_check(const DialgebraMorphism& psi, const ObstructionClass& ob);

struct ExtendOutcome {
    ObstructionClass obstruction;
    std::optional<TruncatedDeformation> extended;
    std::optional<MorphismCochain> theta; // θ_{N+1} with δθ_{N+1} = Ob
    std::size_t rank_coboundary = 0;      // rank δ² on CY²(ψ,ψ)
    std::size_t rank_augmented = 0;       // rank [δ² | Ob]; exceeds the former iff obstructed
};

/// Solves δθ_{N+1} = Ob(Θ_t). `shift`, a 2-cocycle, is added to the particular
/// solution when given. Throws InvalidDeformation if th is not valid.
ExtendOutcome extend_step(const MorphismComplex& complex, const TruncatedDeformation& th,
                          const MorphismCochain* shift = nullptr);
ExtendOutcome extend_step(const TruncatedDeformation& th);

struct ExtendReport {
    TruncatedDeformation reached;
    int target = 0;
    bool hy3_vanishes = false; // extension guaranteed
    std::optional<ExtendOutcome> halted;

    int reached_order() const { return reached.order(); }
};

/// Repeated extend_step up to order `target`. Throws CapExceeded above `cap`.
ExtendReport extend_to_order(const TruncatedDeformation& th, int target, int cap = kDefaultOrderCap);

/// Φ_t Θ_t: f̃ = Φ f(Φ⁻¹ ·, Φ⁻¹ ·) on D and E, Ψ̃ = Φ_E Ψ Φ_D⁻¹.
/// Throws OrderMismatch, NonIdentityConstantTerm or ShapeMismatch.
TruncatedDeformation apply_formal_iso(const TruncatedDeformation& th, const FormalIso& phi);

struct TrivializeResult {
    int m = 0; // θ_i = 0 for i <= m on input
    FormalIso phi;
    TruncatedDeformation result;
};

/// Removes the leading coefficient θ_{m+1} by 1 + ξ t^{m+1}, 1 + π t^{m+1}
/// with δ(ξ; π; 0) = θ_{m+1}. A trivial input comes back with the identity.
/// Throws NotACoboundary with the rank certificate in the message.
TrivializeResult trivialize_step(const MorphismComplex& complex, const TruncatedDeformation& th);
TrivializeResult trivialize_step(const TruncatedDeformation& th);

/// Least k >= 1 with θ_k != 0.
std::optional<int> leading_order(const TruncatedDeformation& th);

struct GeneratorOptions {
    int order = 2;
    int leading_zeros = 0; // θ_1..θ_{leading_zeros} forced to 0
    long range = 2;
    int attempts = 40;
};

/// A random valid deformation: a random 2-cocycle as the leading term, then
/// extend_step with random cocycles added to each particular solution.
/// Falls back to unshifted particular solutions and finally to the trivial
/// deformation, so the result always has the requested order.
TruncatedDeformation random_deformation(const MorphismComplex& complex, const GeneratorOptions& opts,
                                        std::mt19937_64& rng);

FormalIso random_formal_iso(Field f, std::size_t dim_d, std::size_t dim_e, int order, std::mt19937_64& rng,
                            long range = 2);

struct RigidityReport {
    std::size_t hy2_dim = 0;
    bool rigid = false;
    std::string verdict;
    int samples = 0;
    int trivialized = 0;
    std::optional<MorphismCochain> witness; // a 2-cocycle that is not a coboundary
};

struct RigidityOptions {
    int samples = 10;
    int order = kDefaultOrderCap;
    std::uint64_t seed = 1;
};

/// HY²(ψ,ψ) and, when it vanishes, the explicit trivialization of sampled deformations.
RigidityReport rigidity_probe(const DialgebraMorphism& psi, const RigidityOptions& opts = {});

/// Trivializes th completely by iterated trivialize_step; returns the composed
/// iso, or nullopt when some step hits a non-coboundary.
std::optional<FormalIso> trivializing_iso(const MorphismComplex& complex, const TruncatedDeformation& th);

} // namespace dialg
