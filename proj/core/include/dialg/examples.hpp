#pragma once

#include "dialg/deformation.hpp"

#include <vector>

namespace dialg::examples {

/// Zero products in dimension dim, named "Z<dim>".
Dialgebra zero_dialgebra(Field f, std::size_t dim);
/// One-dimensional, e ⊣ e = e ⊢ e = e. Named "K".
Dialgebra multiplication(Field f);
/// Two-dimensional, non-commutative with ⊣ != ⊢:
///   e0 ⊣ e0 = e0, e1 ⊣ e0 = e1, e0 ⊢ e0 = e0. Named "N".
Dialgebra noncommutative_n(Field f);
/// Two-dimensional, non-commutative with ⊣ != ⊢:
///   e0 ⊣ e1 = e0, e1 ⊣ e1 = e1, e1 ⊢ e1 = e1. Named "M".
Dialgebra noncommutative_m(Field f);

std::vector<Dialgebra> dialgebras(Field f);

/// Identity morphisms of every bundled dialgebra, then
/// N -> K (e0 ↦ e, e1 ↦ 0), K -> N (e ↦ e0), K -> M (e ↦ e1) and Z2 -> Z1 (e0, e1 ↦ e0).
std::vector<DialgebraMorphism> morphisms(Field f);

DialgebraMorphism find_morphism(Field f, std::string_view name);

/// Order-1 deformation of id_Z1: F_{D,1} = (l, r), F_{E,1} = (le, re), ψ_1 = s.
TruncatedDeformation z_family(Field f, long l, long r, long le, long re, long s);
/// ψ = id on K with f_t = (1 + t)·ab on both products and Ψ_t = id, to the given order.
TruncatedDeformation one_plus_t(Field f, int order);

} // namespace dialg::examples
