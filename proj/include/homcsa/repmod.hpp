#pragma once

#include <cstddef>

#include "homcsa/homcore.hpp"

namespace homcsa {

/// (ρ, ψ, V) over a hom-Lie algebra; V has dimension modDim.
struct Representation {
  HomAlgebra base;
  std::size_t modDim = 0;
  ActionTensor rho;
  LinearMap psi;

  Representation() = default;
  Representation(HomAlgebra base, std::size_t modDim, ActionTensor rho, LinearMap psi);

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// (l, r, φ, V) over a hom-CSA. The field order is fixed here once: left action,
/// right action, module twist.
struct Bimodule {
  HomAlgebra base;
  std::size_t modDim = 0;
  ActionTensor l;
  ActionTensor r;
  LinearMap phi;

  Bimodule() = default;
  Bimodule(HomAlgebra base, std::size_t modDim, ActionTensor l, ActionTensor r, LinearMap phi);

  friend bool operator==(const Bimodule&, const Bimodule&) = default;
};

/// Families "rep-twist" (ρ(αx)ψ = ψρ(x)) and "rep-bracket"
/// (ρ([x,y])ψ = ρ(αx)ρ(y) − ρ(αy)ρ(x)); base skewness under "base:skew".
AxiomReport check_hom_lie_rep(const Representation& R);

/// g ⊕ V with [x+u, y+v] = [x,y] + ρ(x)v − ρ(y)u and twist α ⊕ ψ.
HomAlgebra semidirect_hom_lie(const Representation& R);

/// Families "left-twist", "right-twist", "left-right" (l_{αx}l_y − l_{xy}φ =
/// r_{yx}φ − r_{αx}r_y) and "mixed" (l_{αx}r_y − r_{αy}l_x = l_{αy}r_x − r_{αx}l_y);
/// base hom-CSA checks reported under "base:".
AxiomReport check_bimodule(const Bimodule& B);

Bimodule regular_bimodule(const HomAlgebra& A);

/// A ⊕ V with (x+u)(y+v) = xy + l(x)v + r(y)u and twist α ⊕ φ.
HomAlgebra semidirect_hom_csa(const Bimodule& B);

/// (l − r, φ) over the commutator algebra.
Representation bimodule_to_rep(const Bimodule& B);

/// (ρ, 0, ψ) over the same base.
Bimodule rep_to_bimodule(const Representation& R);

/// (r*, l*, φ*): the new left action is the transpose of the old right action.
Bimodule dual_bimodule(const Bimodule& B);

/// ρ_U ⊗ φ_V + φ_U ⊗ ρ_V with twist φ_U ⊗ φ_V. Throws InputError if the
/// bases differ.
Representation tensor_product_rep(const Representation& RU, const Representation& RV);

/// Σ_k coeffs[k] · act[k].
LinearMap combine(const ActionTensor& act, const Vector& coeffs);

}  // namespace homcsa
