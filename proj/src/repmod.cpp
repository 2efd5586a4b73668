#include "homcsa/repmod.hpp"

#include <vector>

#include "homcsa/errors.hpp"

namespace homcsa {

namespace {

void check_action(const ActionTensor& act, std::size_t algDim, std::size_t modDim,
                  const char* name) {
  if (act.alg_dim() != algDim || act.mod_dim() != modDim)
    throw InputError(std::string(name) + ": expected " + std::to_string(algDim) +
                     " matrices of size " + std::to_string(modDim));
}

void check_square(const LinearMap& m, std::size_t d, const char* name) {
  if (m.rows() != d || m.cols() != d)
    throw InputError(std::string(name) + " must be " + std::to_string(d) + "x" + std::to_string(d));
}

}  // namespace

LinearMap combine(const ActionTensor& act, const Vector& coeffs) { return act.of(coeffs); }

Representation::Representation(HomAlgebra base_, std::size_t modDim_, ActionTensor rho_,
                               LinearMap psi_)
    : base(std::move(base_)), modDim(modDim_), rho(std::move(rho_)), psi(std::move(psi_)) {
  check_action(rho, base.dim(), modDim, "rho");
  check_square(psi, modDim, "psi");
}

Bimodule::Bimodule(HomAlgebra base_, std::size_t modDim_, ActionTensor l_, ActionTensor r_,
                   LinearMap phi_)
    : base(std::move(base_)), modDim(modDim_), l(std::move(l_)), r(std::move(r_)),
      phi(std::move(phi_)) {
  check_action(l, base.dim(), modDim, "l");
  check_action(r, base.dim(), modDim, "r");
  check_square(phi, modDim, "phi");
}

AxiomReport check_hom_lie_rep(const Representation& R) {
  AxiomReport rep("hom-lie-rep");
  rep.absorb(check_skew(R.base), "base:");
  const HomAlgebra& g = R.base;
  const std::size_t n = g.dim();
  std::vector<LinearMap> rhoAlpha(n);
  for (std::size_t i = 0; i < n; ++i) rhoAlpha[i] = R.rho.of(g.twist().column(i));

  rep.evaluate("rep-twist");
  for (std::size_t i = 0; i < n; ++i)
    rep.expect("rep-twist", {i}, mat_compose(rhoAlpha[i], R.psi), mat_compose(R.psi, R.rho[i]));

  rep.evaluate("rep-bracket");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LinearMap lhs = mat_compose(R.rho.of(g.basis_product(i, j)), R.psi);
      LinearMap rhs = mat_compose(rhoAlpha[i], R.rho[j]) - mat_compose(rhoAlpha[j], R.rho[i]);
      rep.expect("rep-bracket", {i, j}, lhs, rhs);
    }
  return rep;
}

HomAlgebra semidirect_hom_lie(const Representation& R) {
  const std::size_t n = R.base.dim(), m = R.modDim, N = n + m;
  BilinearTensor br(N, N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) br.at(i, j, k) = R.base.mul().at(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        br.at(i, n + p, n + q) = R.rho[i].at(q, p);
        br.at(n + p, i, n + q) = -R.rho[i].at(q, p);
      }
  return HomAlgebra(std::move(br), block_diagonal(R.base.twist(), R.psi));
}

AxiomReport check_bimodule(const Bimodule& B) {
  AxiomReport rep("bimodule");
  rep.absorb(check_center_symmetric(B.base), "base:");
  const HomAlgebra& A = B.base;
  const std::size_t n = A.dim();
  std::vector<LinearMap> lA(n), rA(n);  // l_{α(e_i)}, r_{α(e_i)}
  for (std::size_t i = 0; i < n; ++i) {
    lA[i] = B.l.of(A.twist().column(i));
    rA[i] = B.r.of(A.twist().column(i));
  }

  rep.evaluate("left-twist");
  for (std::size_t i = 0; i < n; ++i)
    rep.expect("left-twist", {i}, mat_compose(B.phi, B.l[i]), mat_compose(lA[i], B.phi));
  rep.evaluate("right-twist");
  for (std::size_t i = 0; i < n; ++i)
    rep.expect("right-twist", {i}, mat_compose(B.phi, B.r[i]), mat_compose(rA[i], B.phi));

  rep.evaluate("left-right");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LinearMap lhs = mat_compose(lA[i], B.l[j]) - mat_compose(B.l.of(A.basis_product(i, j)), B.phi);
      LinearMap rhs = mat_compose(B.r.of(A.basis_product(j, i)), B.phi) - mat_compose(rA[i], B.r[j]);
      rep.expect("left-right", {i, j}, lhs, rhs);
    }

  rep.evaluate("mixed");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LinearMap lhs = mat_compose(lA[i], B.r[j]) - mat_compose(rA[j], B.l[i]);
      LinearMap rhs = mat_compose(lA[j], B.r[i]) - mat_compose(rA[i], B.l[j]);
      rep.expect("mixed", {i, j}, lhs, rhs);
    }
  return rep;
}

Bimodule regular_bimodule(const HomAlgebra& A) {
  return Bimodule(A, A.dim(), left_rep(A), right_rep(A), A.twist());
}

HomAlgebra semidirect_hom_csa(const Bimodule& B) {
  const std::size_t n = B.base.dim(), m = B.modDim, N = n + m;
  BilinearTensor mul(N, N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mul.at(i, j, k) = B.base.mul().at(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        mul.at(i, n + p, n + q) = B.l[i].at(q, p);
        mul.at(n + p, i, n + q) = B.r[i].at(q, p);
      }
  return HomAlgebra(std::move(mul), block_diagonal(B.base.twist(), B.phi));
}

Representation bimodule_to_rep(const Bimodule& B) {
  return Representation(commutator_algebra(B.base), B.modDim, B.l - B.r, B.phi);
}

Bimodule rep_to_bimodule(const Representation& R) {
  return Bimodule(R.base, R.modDim, R.rho, ActionTensor(R.base.dim(), R.modDim), R.psi);
}

Bimodule dual_bimodule(const Bimodule& B) {
  return Bimodule(B.base, B.modDim, transposed(B.r), transposed(B.l), dual_map(B.phi));
}

Representation tensor_product_rep(const Representation& RU, const Representation& RV) {
  if (!(RU.base == RV.base)) throw InputError("tensor_product_rep: representations have different bases");
  const std::size_t n = RU.base.dim();
  std::vector<LinearMap> mats;
  mats.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    mats.push_back(kron(RU.rho[i], RV.psi) + kron(RU.psi, RV.rho[i]));
  return Representation(RU.base, RU.modDim * RV.modDim,
                        ActionTensor(RU.modDim * RV.modDim, std::move(mats)),
                        kron(RU.psi, RV.psi));
}

}  // namespace homcsa
