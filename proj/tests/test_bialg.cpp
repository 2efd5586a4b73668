#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "homcsa/bialg.hpp"
#include "homcsa/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace homcsa;

namespace {

using oracle::Q;

PairedAlgebras line_pair(int c, int d, int f) {
  return PairedAlgebras(HomAlgebra(BilinearTensor(1, 1, 1, {Scalar(c)}), LinearMap(1, 1, {Scalar(d)})),
                        BilinearTensor(1, 1, 1, {Scalar(f)}));
}

PairedAlgebras random_paired(support::Gen& g, std::size_t n, double sparsity) {
  BilinearTensor c = g.tensor(n), f = g.tensor(n);
  for (auto* t : {&c, &f})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (g.coin(sparsity)) t->at(i, j, k) = 0;
  return PairedAlgebras(HomAlgebra(c, g.matrix(n, n)), f);
}

PairedAlgebras swap_sides(const PairedAlgebras& P) { return PairedAlgebras(dual_algebra(P), P.primal.mul()); }

// δ(α[e_i,e_j]) = ρ(e_i)δ(e_j) − ρ(e_j)δ(e_i), ρ(x)(a⊗b) = −([x,a]⊗αb + αa⊗[x,b]),
// δ(e_k) = Σ w(i,j,k) e_i⊗e_j. The algebra is (c, d) with d(i,k) the e_k
// coefficient of α(e_i). Everything is an explicit index sum.
bool cocycle_oracle(std::size_t n, const std::function<Q(std::size_t, std::size_t, std::size_t)>& c,
                    const std::function<Q(std::size_t, std::size_t)>& d,
                    const std::function<Q(std::size_t, std::size_t, std::size_t)>& w) {
  auto br = [&](std::size_t i, std::size_t j, std::size_t k) -> Q { return c(i, j, k) - c(j, i, k); };
  auto delta = [&](std::size_t k) {
    std::vector<Q> out(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) out[a * n + b] = w(a, b, k);
    return out;
  };
  auto rho = [&](std::size_t x, const std::vector<Q>& t) {
    std::vector<Q> out(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (t[a * n + b] == 0) continue;
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) out[p * n + q] -= t[a * n + b] * (br(x, a, p) * d(b, q) + d(a, p) * br(x, b, q));
      }
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Q> lhs(n * n, 0);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Q coeff = br(i, j, k) * d(k, l);
          if (coeff == 0) continue;
          auto dl = delta(l);
          for (std::size_t s = 0; s < n * n; ++s) lhs[s] += coeff * dl[s];
        }
      auto a = rho(i, delta(j)), b = rho(j, delta(i));
      for (std::size_t s = 0; s < n * n; ++s)
        if (lhs[s] != a[s] - b[s]) return false;
    }
  return true;
}

bool gamma_oracle(const PairedAlgebras& P) {
  const auto& A = P.primal;
  return cocycle_oracle(
      P.dim(), [&](std::size_t i, std::size_t j, std::size_t k) { return A.mul().at(i, j, k).to_mpq(); },
      [&](std::size_t i, std::size_t k) { return A.twist().at(k, i).to_mpq(); },
      [&](std::size_t i, std::size_t j, std::size_t k) { return P.dualMul.at(i, j, k).to_mpq(); });
}

bool beta_oracle(const PairedAlgebras& P) {
  const auto& A = P.primal;
  return cocycle_oracle(
      P.dim(), [&](std::size_t i, std::size_t j, std::size_t k) { return P.dualMul.at(i, j, k).to_mpq(); },
      [&](std::size_t i, std::size_t k) { return A.twist().at(i, k).to_mpq(); },
      [&](std::size_t i, std::size_t j, std::size_t k) { return A.mul().at(i, j, k).to_mpq(); });
}

// Structure constants of A ⊕ A* read off from c and f directly.
Q double_oracle(const PairedAlgebras& P, std::size_t s, std::size_t t, std::size_t u) {
  const std::size_t n = P.dim();
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return P.primal.mul().at(i, j, k).to_mpq(); };
  auto f = [&](std::size_t i, std::size_t j, std::size_t k) { return P.dualMul.at(i, j, k).to_mpq(); };
  bool sp = s < n, tp = t < n, up = u < n;
  std::size_t S = sp ? s : s - n, T = tp ? t : t - n, U = up ? u : u - n;
  if (sp && tp) return up ? c(S, T, U) : Q(0);
  if (!sp && !tp) return up ? Q(0) : f(S, T, U);
  if (sp) return up ? f(T, U, S) : c(U, S, T);
  return up ? f(U, S, T) : c(T, U, S);
}

}  // namespace

TEST_CASE("PairedAlgebras and the dual algebra") {
  CHECK_THROWS_AS(PairedAlgebras(HomAlgebra::zero(2), BilinearTensor(1, 1, 1)), InputError);
  support::Gen g(51);
  for (int it = 0; it < 20; ++it) {
    PairedAlgebras P = random_paired(g, 2, 0.2);
    HomAlgebra D = dual_algebra(P);
    CHECK(D.mul() == P.dualMul);
    CHECK(D.twist() == dual_map(P.primal.twist()));
    CHECK(swap_sides(swap_sides(P)) == P);
  }
}

TEST_CASE("comultiplication is dual to the products") {
  support::Gen g(52);
  for (int it = 0; it < 20; ++it) {
    PairedAlgebras P = random_paired(g, 3, 0.2);
    ComultiplicationView cv = comultiplication(P);
    REQUIRE(cv.gamma.rows() == 9);
    REQUIRE(cv.gamma.cols() == 3);
    // ⟨γ(e_k), e_i*⊗e_j*⟩ = ⟨e_k, e_i*∘e_j*⟩ and likewise for β.
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          CHECK(cv.gamma.apply(basis_vector(3, k))[i * 3 + j] == bilinear_apply(P.dualMul, basis_vector(3, i), basis_vector(3, j))[k]);
          CHECK(cv.beta.apply(basis_vector(3, k))[i * 3 + j] == P.primal.basis_product(i, j)[k]);
        }
  }
}

TEST_CASE("cocycle checks agree with the coordinate form and the oracle") {
  support::Gen g(53);
  int gammaPass = 0, betaPass = 0;
  for (int it = 0; it < 3000; ++it) {
    PairedAlgebras P = random_paired(g, 1 + it % 2, 0.75);
    bool gm = check_cocycle(P, CocycleSide::Gamma).passed();
    bool bt = check_cocycle(P, CocycleSide::Beta).passed();
    REQUIRE(gm == check_cocycle_coordinates(P, CocycleSide::Gamma).passed());
    REQUIRE(bt == check_cocycle_coordinates(P, CocycleSide::Beta).passed());
    REQUIRE(gm == gamma_oracle(P));
    REQUIRE(bt == beta_oracle(P));
    REQUIRE(bt == check_cocycle(swap_sides(P), CocycleSide::Gamma).passed());
    gammaPass += gm;
    betaPass += bt;
  }
  CHECK(gammaPass > 100);
  CHECK(betaPass > 100);
  CHECK(gammaPass < 3000);
}

TEST_CASE("check_bialgebra collects all four parts") {
  PairedAlgebras zero(HomAlgebra::zero(2), BilinearTensor(2, 2, 2));
  CHECK(check_bialgebra(zero).passed());
  CHECK(is_bialgebra(zero));
  PairedAlgebras bad = line_pair(1, 2, 1);
  AxiomReport r = check_bialgebra(bad);
  CHECK(r.count("primal:multiplicative") == 1);
  CHECK(r.count("dual:multiplicative") == 1);
  support::Gen g(54);
  for (int it = 0; it < 2000; ++it) {
    PairedAlgebras P = random_paired(g, 2, 0.75);
    bool expected = oracle::hom_csa(P.primal) && oracle::hom_csa(dual_algebra(P)) && gamma_oracle(P) && beta_oracle(P);
    REQUIRE(is_bialgebra(P) == expected);
    REQUIRE(check_bialgebra(P).passed() == expected);
  }
}

TEST_CASE("standard_pairing") {
  CHECK_THROWS_AS(standard_pairing(Vector(3), Vector(3)), InputError);
  CHECK_THROWS_AS(standard_pairing(Vector(2), Vector(4)), InputError);
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < 4; ++t)
      CHECK(standard_pairing(basis_vector(4, s), basis_vector(4, t)) == Scalar((s + 2 == t || t + 2 == s) ? 1 : 0));
  support::Gen g(55);
  for (int it = 0; it < 20; ++it) {
    Vector u = g.vector(4), v = g.vector(4);
    CHECK(standard_pairing(u, v) == standard_pairing(v, u));
  }
}

TEST_CASE("the standard double and its invariance") {
  support::Gen g(56);
  for (int it = 0; it < 300; ++it) {
    PairedAlgebras P = random_paired(g, 1 + it % 2, 0.4);
    const std::size_t n = P.dim(), N = 2 * n;
    HomAlgebra D = standard_manin_algebra(P);
    for (std::size_t s = 0; s < N; ++s)
      for (std::size_t t = 0; t < N; ++t)
        for (std::size_t u = 0; u < N; ++u) REQUIRE(D.mul().at(s, t, u).to_mpq() == double_oracle(P, s, t, u));
    REQUIRE(D.twist() == block_diagonal(P.primal.twist(), dual_map(P.primal.twist())));

    // ⟨st, u⟩ = ⟨s, tu⟩ evaluated on the oracle's constants.
    auto pair = [&](std::size_t a, std::size_t b) { return Q((a + n == b || b + n == a) ? 1 : 0); };
    bool inv = true;
    for (std::size_t s = 0; s < N; ++s)
      for (std::size_t t = 0; t < N; ++t)
        for (std::size_t u = 0; u < N; ++u) {
          Q lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < N; ++k) {
            lhs += double_oracle(P, s, t, k) * pair(k, u);
            rhs += double_oracle(P, t, u, k) * pair(s, k);
          }
          inv = inv && lhs == rhs;
        }
    AxiomReport r = check_manin_invariance(P);
    REQUIRE((r.count("invariance") == 0) == inv);
    REQUIRE(r.count("twist-invariance") == 0);
    REQUIRE(r.count("isotropic-primal") == 0);
    REQUIRE(r.count("isotropic-dual") == 0);
  }
}

TEST_CASE("standard matched pair uses coregular actions") {
  support::Gen g(57);
  PairedAlgebras P = random_paired(g, 2, 0.2);
  MatchedPairCSA M = standard_matched_pair(P);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t p = 0; p < 2; ++p)
      for (std::size_t q = 0; q < 2; ++q) {
        CHECK(M.lA[i].at(q, p) == P.primal.mul().at(q, i, p));
        CHECK(M.rA[i].at(q, p) == P.primal.mul().at(i, q, p));
        CHECK(M.lB[i].at(q, p) == P.dualMul.at(q, i, p));
        CHECK(M.rB[i].at(q, p) == P.dualMul.at(i, q, p));
      }
}

TEST_CASE("equivalence report on the one-dimensional counterexample") {
  EquivalenceReport e = equivalence_report(line_pair(1, 1, 1));
  CHECK(e.primalCsa);
  CHECK(e.dualCsa);
  CHECK(e.alphaInvolutive);
  CHECK_FALSE(e.maninTriple);
  CHECK_FALSE(e.matchedPairCsa);
  CHECK(e.matchedPairHomLie);
  CHECK(e.bialgebra);
  CHECK_FALSE(e.agree());
  REQUIRE(e.reports.size() == 8);
  CHECK(e.reports[0].axiom == "precondition:primal");
  CHECK(e.reports[7].axiom == "bialgebra:beta");
}

TEST_CASE("equivalence report fields follow the individual checks") {
  support::Gen g(58);
  for (int it = 0; it < 500; ++it) {
    PairedAlgebras P = random_paired(g, 1 + it % 2, 0.6);
    EquivalenceReport e = equivalence_report(P);
    REQUIRE(e.primalCsa == is_hom_csa(P.primal));
    REQUIRE(e.dualCsa == is_hom_csa(dual_algebra(P)));
    REQUIRE(e.matchedPairCsa == check_matched_pair_csa(standard_matched_pair(P)).passed());
    REQUIRE(e.maninTriple ==
            (is_hom_csa(standard_manin_algebra(P)) && check_manin_invariance(P).passed()));
    REQUIRE(e.bialgebra == (check_cocycle(P, CocycleSide::Gamma).passed() &&
                            check_cocycle(P, CocycleSide::Beta).passed()));
    REQUIRE(e.matchedPairCsa == oracle::hom_csa(standard_manin_algebra(P)));
  }
}

TEST_CASE("check_bialgebra_homomorphism") {
  support::Gen g(59);
  PairedAlgebras P = random_paired(g, 2, 0.3);
  CHECK(check_bialgebra_homomorphism(LinearMap::identity(2), P, P).passed());
  PairedAlgebras Z(HomAlgebra::zero(1), BilinearTensor(1, 1, 1));
  CHECK(check_bialgebra_homomorphism(LinearMap(1, 2), P, Z).passed());
  CHECK_THROWS_AS(check_bialgebra_homomorphism(LinearMap(2, 2), P, Z), InputError);
  AxiomReport r = check_bialgebra_homomorphism(Scalar(2) * LinearMap::identity(1), line_pair(1, 1, 1), line_pair(1, 1, 1));
  CHECK(r.count("comult") == 1);
  CHECK(r.count("twist") == 0);
  CHECK(r.count("dual-comult") == 1);
}
