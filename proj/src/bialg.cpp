#include "homcsa/bialg.hpp"

#include "homcsa/errors.hpp"

namespace homcsa {

namespace {

LinearMap comult_matrix(const BilinearTensor& t) {
  const std::size_t n = t.dim_out();
  LinearMap out(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.at(i * n + j, k) = t.at(i, j, k);
  return out;
}

// δ: X → X⊗X against ρ(x) = −(ad_x⊗α + α⊗ad_x) of X's commutator algebra.
AxiomReport cocycle_report(const HomAlgebra& X, const LinearMap& delta) {
  AxiomReport rep("cocycle");
  rep.evaluate("cocycle");
  const std::size_t n = X.dim();
  const ActionTensor ad = ad_rep(X);
  const LinearMap& a = X.twist();
  std::vector<LinearMap> rho(n);
  for (std::size_t i = 0; i < n; ++i) rho[i] = Scalar(-1) * (kron(ad[i], a) + kron(a, ad[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector bracket = X.basis_product(i, j) - X.basis_product(j, i);
      Vector lhs = delta.apply(a.apply(bracket));
      Vector rhs = rho[i].apply(delta.column(j)) - rho[j].apply(delta.column(i));
      rep.expect("cocycle", {i, j}, lhs, rhs);
    }
  return rep;
}

// Coefficient of e_m⊗e_p in both sides, with c the algebra's constants, f the
// comultiplication's and d(k, l) the coefficient of e_l in α(e_k).
template <class D>
AxiomReport cocycle_coordinate_report(const BilinearTensor& c, const BilinearTensor& f, D d) {
  AxiomReport rep("cocycle-coordinates");
  rep.evaluate("cocycle-coordinates");
  const std::size_t n = c.dim_out();
  auto br = [&](std::size_t x, std::size_t y, std::size_t z) { return c.at(x, y, z) - c.at(y, x, z); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t p = 0; p < n; ++p) {
          Scalar lhs, rhs;
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              lhs += f.at(m, p, l) * br(i, j, k) * d(k, l);
              rhs += (f.at(k, l, i) * br(j, k, m) - f.at(k, l, j) * br(i, k, m)) * d(l, p);
              rhs += (f.at(l, k, i) * br(j, k, p) - f.at(l, k, j) * br(i, k, p)) * d(l, m);
            }
          rep.expect("cocycle-coordinates", {i, j, m, p}, Vector{lhs}, Vector{rhs});
        }
  return rep;
}

}  // namespace

PairedAlgebras::PairedAlgebras(HomAlgebra primal_, BilinearTensor dualMul_)
    : primal(std::move(primal_)), dualMul(std::move(dualMul_)) {
  const std::size_t n = primal.dim();
  if (dualMul.dim_left() != n || dualMul.dim_right() != n || dualMul.dim_out() != n)
    throw InputError("dual product shape does not match primal dimension " + std::to_string(n));
}

HomAlgebra dual_algebra(const PairedAlgebras& P) {
  return HomAlgebra(P.dualMul, dual_map(P.primal.twist()));
}

ComultiplicationView comultiplication(const PairedAlgebras& P) {
  return {comult_matrix(P.dualMul), comult_matrix(P.primal.mul())};
}

AxiomReport check_cocycle(const PairedAlgebras& P, CocycleSide side) {
  ComultiplicationView cv = comultiplication(P);
  if (side == CocycleSide::Gamma) return cocycle_report(P.primal, cv.gamma);
  return cocycle_report(dual_algebra(P), cv.beta);
}

AxiomReport check_cocycle_coordinates(const PairedAlgebras& P, CocycleSide side) {
  const LinearMap& t = P.primal.twist();
  if (side == CocycleSide::Gamma)
    return cocycle_coordinate_report(P.primal.mul(), P.dualMul,
                                     [&](std::size_t k, std::size_t l) { return t.at(l, k); });
  // d*_k^l = d_l^k
  return cocycle_coordinate_report(P.dualMul, P.primal.mul(),
                                   [&](std::size_t k, std::size_t l) { return t.at(k, l); });
}

AxiomReport check_bialgebra(const PairedAlgebras& P) {
  AxiomReport rep("bialgebra");
  rep.absorb(check_center_symmetric(P.primal), "primal:");
  rep.absorb(check_center_symmetric(dual_algebra(P)), "dual:");
  rep.absorb(check_cocycle(P, CocycleSide::Gamma), "gamma:");
  rep.absorb(check_cocycle(P, CocycleSide::Beta), "beta:");
  return rep;
}

bool is_bialgebra(const PairedAlgebras& P) {
  return is_hom_csa(P.primal) && is_hom_csa(dual_algebra(P)) &&
         check_cocycle(P, CocycleSide::Gamma).passed() &&
         check_cocycle(P, CocycleSide::Beta).passed();
}

MatchedPairCSA standard_matched_pair(const PairedAlgebras& P) {
  HomAlgebra dual = dual_algebra(P);
  return MatchedPairCSA(P.primal, dual, transposed(right_rep(P.primal)),
                        transposed(left_rep(P.primal)), transposed(right_rep(dual)),
                        transposed(left_rep(dual)));
}

HomAlgebra standard_manin_algebra(const PairedAlgebras& P) {
  return bicross_product(standard_matched_pair(P));
}

Scalar standard_pairing(const Vector& u, const Vector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw InputError("standard_pairing: vectors must share an even length");
  const std::size_t n = u.size() / 2;
  Scalar s;
  for (std::size_t i = 0; i < n; ++i) s += u[i] * v[n + i] + v[i] * u[n + i];
  return s;
}

AxiomReport check_manin_invariance(const PairedAlgebras& P) {
  AxiomReport rep("manin-invariance");
  const HomAlgebra D = standard_manin_algebra(P);
  const std::size_t n = P.dim(), N = 2 * n;
  std::vector<Vector> e(N);
  for (std::size_t s = 0; s < N; ++s) e[s] = basis_vector(N, s);

  rep.evaluate("invariance");
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t) {
      Vector st = D.basis_product(s, t);
      for (std::size_t u = 0; u < N; ++u) {
        Scalar lhs = standard_pairing(st, e[u]);
        Scalar rhs = standard_pairing(e[s], D.basis_product(t, u));
        rep.expect("invariance", {s, t, u}, Vector{lhs}, Vector{rhs});
      }
    }
  rep.evaluate("twist-invariance");
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t)
      rep.expect("twist-invariance", {s, t},
                 Vector{standard_pairing(D.twist().column(s), e[t])},
                 Vector{standard_pairing(e[s], D.twist().column(t))});
  rep.evaluate("isotropic-primal");
  rep.evaluate("isotropic-dual");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rep.expect("isotropic-primal", {i, j}, Vector{standard_pairing(e[i], e[j])}, Vector{Scalar()});
      rep.expect("isotropic-dual", {i, j}, Vector{standard_pairing(e[n + i], e[n + j])},
                 Vector{Scalar()});
    }
  return rep;
}

EquivalenceReport equivalence_report(const PairedAlgebras& P) {
  EquivalenceReport out;
  AxiomReport primal = check_center_symmetric(P.primal);
  AxiomReport dual = check_center_symmetric(dual_algebra(P));
  out.primalCsa = primal.passed();
  out.dualCsa = dual.passed();
  out.alphaInvolutive = is_involution(P.primal.twist());
  primal.axiom = "precondition:primal";
  dual.axiom = "precondition:dual";

  AxiomReport manin = check_center_symmetric(standard_manin_algebra(P));
  manin.axiom = "manin-triple:double";
  AxiomReport invariance = check_manin_invariance(P);
  invariance.axiom = "manin-triple:invariance";
  out.maninTriple = manin.passed() && invariance.passed();

  MatchedPairCSA mp = standard_matched_pair(P);
  AxiomReport csa = check_matched_pair_csa(mp);
  out.matchedPairCsa = csa.passed();

  AxiomReport lie = check_matched_pair_hom_lie(induced_lie_matched_pair(mp));
  out.matchedPairHomLie = lie.passed();

  AxiomReport gamma = check_cocycle(P, CocycleSide::Gamma);
  gamma.axiom = "bialgebra:gamma";
  AxiomReport beta = check_cocycle(P, CocycleSide::Beta);
  beta.axiom = "bialgebra:beta";
  out.bialgebra = gamma.passed() && beta.passed();

  out.reports = {primal, dual, manin, invariance, csa, lie, gamma, beta};
  return out;
}

AxiomReport check_bialgebra_homomorphism(const LinearMap& f, const PairedAlgebras& P1,
                                         const PairedAlgebras& P2) {
  if (f.cols() != P1.dim() || f.rows() != P2.dim())
    throw InputError("homomorphism shape does not match the two bialgebras");
  AxiomReport rep("bialgebra-homomorphism");
  ComultiplicationView c1 = comultiplication(P1), c2 = comultiplication(P2);
  const LinearMap& a1 = P1.primal.twist();
  const LinearMap& a2 = P2.primal.twist();
  const LinearMap fs = dual_map(f);
  rep.expect("comult", {}, mat_compose(kron(f, f), c1.gamma), mat_compose(c2.gamma, f));
  rep.expect("twist", {}, mat_compose(f, a1), mat_compose(a2, f));
  rep.expect("dual-twist", {}, mat_compose(dual_map(a2), f), mat_compose(f, dual_map(a1)));
  rep.expect("dual-comult", {}, mat_compose(kron(fs, fs), c2.beta), mat_compose(c1.beta, fs));
  return rep;
}

}  // namespace homcsa
