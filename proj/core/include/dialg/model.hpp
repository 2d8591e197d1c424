#pragma once

#include "dialg/deformation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dialg {

struct NamedIso {
    std::string name;
    std::string morphism; // fixes the dimensions of φ_D and φ_E
    FormalIso iso;
};

/// Contents of a model file: a field, dialgebras, morphisms between them,
/// truncated deformations of those morphisms and formal isomorphisms.
///
/// Text format (line oriented, '#' starts a comment):
///
///     field rationals            # or: field gf 7
///     dialgebra K
///       dim 1
///       basis e                  # optional, default e0 e1 ...
///       L (0,0,0, 1)             # e_i ⊣ e_j has coefficient v on e_k
///       R (0,0,0, 1)
///     end
///     morphism id_K
///       source K
///       target K
///       identity                 # or entries: map (row,col, v)
///     end
///     deformation one_plus_t
///       morphism id_K
///       order 2
///       FD 1 L (0,0,0, 1)        # F_{D,1} on the ⊣ slot
///       FE 1 R (0,0,0, 1)
///       psi 1 (0,0, 1/2)         # ψ_1 entry (row, col, v)
///     end
///     iso phi
///       morphism id_K
///       order 1
///       phiD 1 (0,0, 1)
///       phiE 1 (0,0, 1)
///     end
///
/// Unlisted entries are zero. Several tuples may share one line.
struct Model {
    Field field = Field::rationals();
    std::vector<Dialgebra> dialgebras;
    std::vector<DialgebraMorphism> morphisms;
    std::vector<TruncatedDeformation> deformations;
    std::vector<NamedIso> isos;

    /// Lookups throw UnknownReference naming the identifier.
    const Dialgebra& dialgebra(std::string_view name) const;
    const DialgebraMorphism& morphism(std::string_view name) const;
    const TruncatedDeformation& deformation(std::string_view name) const;
    const NamedIso& iso(std::string_view name) const;
};

bool operator==(const Model& a, const Model& b);

/// Parses model text. `field_override` replaces the declared field.
/// Throws ParseError, UnknownReference or BadScalar, each prefixed with
/// "line L, column C". No axiom checking happens here; see validate_model.
Model parse_model(std::string_view text, std::optional<Field> field_override = std::nullopt);

/// Reads a file, or standard input for "-".
Model load_model(const std::string& path, std::optional<Field> field_override = std::nullopt);

/// Canonical text: nonzero entries only, in index order.
std::string serialize_model(const Model& m);

struct ModelIssue {
    std::string object;
    std::string message;
};

/// Axiom, morphism and deformation checks for every object; empty when the
/// model is usable.
std::vector<ModelIssue> validate_model(const Model& m);

/// The bundled dialgebras and morphisms as a model over `f`.
Model bundled_model(Field f);

} // namespace dialg
