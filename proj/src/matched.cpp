#include "homcsa/matched.hpp"

#include "homcsa/errors.hpp"

namespace homcsa {

namespace {

void require_action(const ActionTensor& act, std::size_t algDim, std::size_t modDim,
                    const char* name) {
  if (act.alg_dim() != algDim || act.mod_dim() != modDim)
    throw InputError(std::string(name) + ": expected " + std::to_string(algDim) +
                     " matrices of size " + std::to_string(modDim));
}

}  // namespace

MatchedPairCSA::MatchedPairCSA(HomAlgebra A_, HomAlgebra B_, ActionTensor lA_, ActionTensor rA_,
                               ActionTensor lB_, ActionTensor rB_)
    : A(std::move(A_)), B(std::move(B_)), lA(std::move(lA_)), rA(std::move(rA_)),
      lB(std::move(lB_)), rB(std::move(rB_)) {
  require_action(lA, A.dim(), B.dim(), "lA");
  require_action(rA, A.dim(), B.dim(), "rA");
  require_action(lB, B.dim(), A.dim(), "lB");
  require_action(rB, B.dim(), A.dim(), "rB");
}

MatchedPairHomLie::MatchedPairHomLie(HomAlgebra G_, HomAlgebra H_, ActionTensor rhoG_,
                                     ActionTensor rhoH_)
    : G(std::move(G_)), H(std::move(H_)), rhoG(std::move(rhoG_)), rhoH(std::move(rhoH_)) {
  require_action(rhoG, G.dim(), H.dim(), "rhoG");
  require_action(rhoH, H.dim(), G.dim(), "rhoH");
}

AxiomReport check_matched_pair_csa(const MatchedPairCSA& M) {
  AxiomReport rep("matched-pair-csa");
  const std::size_t n = M.A.dim(), m = M.B.dim();
  rep.absorb(check_bimodule(Bimodule(M.A, m, M.lA, M.rA, M.B.twist())), "A-on-B:");
  rep.absorb(check_bimodule(Bimodule(M.B, n, M.lB, M.rB, M.A.twist())), "B-on-A:");

  const LinearMap& aA = M.A.twist();
  const LinearMap& aB = M.B.twist();
  auto mulA = [&](const Vector& x, const Vector& y) { return M.A.product(x, y); };
  auto mulB = [&](const Vector& a, const Vector& b) { return M.B.product(a, b); };
  auto lA = [&](const Vector& x, const Vector& b) { return M.lA.of(x).apply(b); };
  auto rA = [&](const Vector& x, const Vector& b) { return M.rA.of(x).apply(b); };
  auto lB = [&](const Vector& a, const Vector& y) { return M.lB.of(a).apply(y); };
  auto rB = [&](const Vector& a, const Vector& y) { return M.rB.of(a).apply(y); };

  const Vector zeroA(n), zeroB(m);
  rep.evaluate("cross-AAB-1");
  rep.evaluate("cross-AAB-2");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < m; ++p) {
        Vector x = basis_vector(n, i), y = basis_vector(n, j), a = basis_vector(m, p);
        Vector ax = aA(x), ay = aA(y), aa = aB(a);
        Vector e1 = mulA(lB(a, x), ay) + lB(rA(x, a), ay) - lB(aa, mulA(x, y)) -
                    rB(aa, mulA(y, x)) + mulA(ay, rB(a, x)) + rB(lA(x, a), ay);
        rep.expect("cross-AAB-1", {i, j, p}, e1, zeroA);
        Vector e2 = mulA(rB(a, x), ay) + lB(lA(x, a), ay) - mulA(ax, lB(a, y)) -
                    rB(rA(y, a), ax) - mulA(rB(a, y), ax) - lB(lA(y, a), ax) +
                    mulA(ay, lB(a, x)) + rB(rA(x, a), ay);
        rep.expect("cross-AAB-2", {i, j, p}, e2, zeroA);
      }

  rep.evaluate("cross-ABB-1");
  rep.evaluate("cross-ABB-2");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        Vector x = basis_vector(n, i), a = basis_vector(m, p), b = basis_vector(m, q);
        Vector ax = aA(x), aa = aB(a), ab = aB(b);
        Vector e3 = mulB(lA(x, a), ab) + lA(rB(a, x), ab) - lA(ax, mulB(a, b)) -
                    rA(ax, mulB(b, a)) + mulB(ab, rA(x, a)) + rA(lB(a, x), ab);
        rep.expect("cross-ABB-1", {i, p, q}, e3, zeroB);
        Vector e4 = mulB(rA(x, a), ab) + lA(lB(a, x), ab) - mulB(aa, lA(x, b)) -
                    rA(rB(b, x), aa) - mulB(rA(x, b), aa) - lA(lB(b, x), aa) +
                    mulB(ab, lA(x, a)) + rA(rB(a, x), ab);
        rep.expect("cross-ABB-2", {i, p, q}, e4, zeroB);
      }
  return rep;
}

HomAlgebra bicross_product(const MatchedPairCSA& M) {
  const std::size_t n = M.A.dim(), m = M.B.dim(), N = n + m;
  BilinearTensor mul(N, N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mul.at(i, j, k) = M.A.mul().at(i, j, k);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t s = 0; s < m; ++s) mul.at(n + p, n + q, n + s) = M.B.mul().at(p, q, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      // e_i * f_p = rB(f_p) e_i + lA(e_i) f_p ;  f_p * e_i = lB(f_p) e_i + rA(e_i) f_p
      for (std::size_t k = 0; k < n; ++k) {
        mul.at(i, n + p, k) = M.rB[p].at(k, i);
        mul.at(n + p, i, k) = M.lB[p].at(k, i);
      }
      for (std::size_t q = 0; q < m; ++q) {
        mul.at(i, n + p, n + q) = M.lA[i].at(q, p);
        mul.at(n + p, i, n + q) = M.rA[i].at(q, p);
      }
    }
  return HomAlgebra(std::move(mul), block_diagonal(M.A.twist(), M.B.twist()));
}

AxiomReport check_matched_pair_hom_lie(const MatchedPairHomLie& M) {
  AxiomReport rep("matched-pair-hom-lie");
  const std::size_t n = M.G.dim(), m = M.H.dim();
  rep.absorb(check_hom_jacobi(M.G), "G:");
  rep.absorb(check_hom_jacobi(M.H), "H:");
  rep.absorb(check_hom_lie_rep(Representation(M.G, m, M.rhoG, M.H.twist())), "G-on-H:");
  rep.absorb(check_hom_lie_rep(Representation(M.H, n, M.rhoH, M.G.twist())), "H-on-G:");

  const LinearMap& phiG = M.G.twist();
  const LinearMap& phiH = M.H.twist();
  auto brG = [&](const Vector& x, const Vector& y) { return M.G.product(x, y); };
  auto brH = [&](const Vector& a, const Vector& b) { return M.H.product(a, b); };
  auto rG = [&](const Vector& x, const Vector& a) { return M.rhoG.of(x).apply(a); };
  auto rH = [&](const Vector& a, const Vector& x) { return M.rhoH.of(a).apply(x); };

  rep.evaluate("cross-G");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < m; ++p) {
        Vector x = basis_vector(n, i), y = basis_vector(n, j), a = basis_vector(m, p);
        Vector lhs = rH(phiH(a), brG(x, y));
        Vector rhs = brG(rH(a, x), phiG(y)) + brG(phiG(x), rH(a, y)) + rH(rG(y, a), phiG(x)) -
                     rH(rG(x, a), phiG(y));
        rep.expect("cross-G", {i, j, p}, lhs, rhs);
      }
  rep.evaluate("cross-H");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        Vector x = basis_vector(n, i), a = basis_vector(m, p), b = basis_vector(m, q);
        Vector lhs = rG(phiG(x), brH(a, b));
        Vector rhs = brH(rG(x, a), phiH(b)) + brH(phiH(a), rG(x, b)) + rG(rH(b, x), phiH(a)) -
                     rG(rH(a, x), phiH(b));
        rep.expect("cross-H", {i, p, q}, lhs, rhs);
      }
  return rep;
}

MatchedPairHomLie induced_lie_matched_pair(const MatchedPairCSA& M) {
  return MatchedPairHomLie(commutator_algebra(M.A), commutator_algebra(M.B), M.lA - M.rA,
                           M.lB - M.rB);
}

HomAlgebra lie_bicross_product(const MatchedPairHomLie& M) {
  const std::size_t n = M.G.dim(), m = M.H.dim(), N = n + m;
  BilinearTensor br(N, N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) br.at(i, j, k) = M.G.mul().at(i, j, k);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t s = 0; s < m; ++s) br.at(n + p, n + q, n + s) = M.H.mul().at(p, q, s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      // [e_i, f_p] = −ρH(f_p) e_i + ρG(e_i) f_p
      for (std::size_t k = 0; k < n; ++k) {
        br.at(i, n + p, k) = -M.rhoH[p].at(k, i);
        br.at(n + p, i, k) = M.rhoH[p].at(k, i);
      }
      for (std::size_t q = 0; q < m; ++q) {
        br.at(i, n + p, n + q) = M.rhoG[i].at(q, p);
        br.at(n + p, i, n + q) = -M.rhoG[i].at(q, p);
      }
    }
  return HomAlgebra(std::move(br), block_diagonal(M.G.twist(), M.H.twist()));
}

}  // namespace homcsa
