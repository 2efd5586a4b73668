#pragma once

#include <cstddef>
#include <string>

#include "homcsa/linear.hpp"
#include "homcsa/report.hpp"

namespace homcsa {

/// A finite-dimensional algebra with product tensor mul (c[i][j][k] is the
/// coefficient of e_k in e_i·e_j) and twist α. Used both for hom-CSAs and for
/// hom-Lie algebras; no axiom is enforced at construction, only shapes.
class HomAlgebra {
 public:
  HomAlgebra() = default;
  HomAlgebra(BilinearTensor mul, LinearMap twist);  // throws InputError on shape mismatch

  static HomAlgebra zero(std::size_t n) {
    return HomAlgebra(BilinearTensor(n, n, n), LinearMap::identity(n));
  }

  std::size_t dim() const { return twist_.rows(); }
  const BilinearTensor& mul() const { return mul_; }
  const LinearMap& twist() const { return twist_; }

  Vector product(const Vector& x, const Vector& y) const { return bilinear_apply(mul_, x, y); }
  /// e_i·e_j as a coordinate vector.
  Vector basis_product(std::size_t i, std::size_t j) const;

  friend bool operator==(const HomAlgebra& a, const HomAlgebra& b) = default;

 private:
  BilinearTensor mul_;
  LinearMap twist_;
};

AxiomReport check_multiplicative(const HomAlgebra& A);

/// μ(μ(x,y),α(z)) − μ(α(x),μ(y,z)).
Vector alpha_associator(const HomAlgebra& A, const Vector& x, const Vector& y, const Vector& z);

/// Families "multiplicative" and "center-symmetric".
AxiomReport check_center_symmetric(const HomAlgebra& A);

ActionTensor left_rep(const HomAlgebra& A);
ActionTensor right_rep(const HomAlgebra& A);
ActionTensor ad_rep(const HomAlgebra& A);

/// Same twist, bracket [x,y] = xy − yx.
HomAlgebra commutator_algebra(const HomAlgebra& A);

AxiomReport check_skew(const HomAlgebra& A);

/// Families "skew", "multiplicative" and "hom-jacobi".
AxiomReport check_hom_jacobi(const HomAlgebra& A);

/// Families "product" (f(e_i e_j) = f(e_i) f(e_j)) and "twist" (f α₁ = α₂ f).
AxiomReport check_homomorphism(const LinearMap& f, const HomAlgebra& A1, const HomAlgebra& A2);

/// Short-circuiting predicates; same verdict as the reports, used by search.
bool is_hom_csa(const HomAlgebra& A);
bool is_hom_lie(const HomAlgebra& A);

bool is_involution(const LinearMap& m);

}  // namespace homcsa
