#pragma once

#include <string>
#include <vector>

#include "homcsa/matched.hpp"

namespace homcsa {

/// An algebra A and a product on A* of the same dimension. f[i][j][k] is the
/// coefficient of e_k* in e_i*∘e_j*. The dual twist is always transpose(α).
struct PairedAlgebras {
  HomAlgebra primal;
  BilinearTensor dualMul;

  PairedAlgebras() = default;
  PairedAlgebras(HomAlgebra primal, BilinearTensor dualMul);  // throws InputError on shape mismatch

  std::size_t dim() const { return primal.dim(); }

  friend bool operator==(const PairedAlgebras&, const PairedAlgebras&) = default;
};

/// γ(e_k) = Σ f[i][j][k] e_i⊗e_j and β(e_k*) = Σ c[i][j][k] e_i*⊗e_j*, each as an
/// n² × n matrix over the left-major tensor basis.
struct ComultiplicationView {
  LinearMap gamma;
  LinearMap beta;
};

enum class CocycleSide { Gamma, Beta };

HomAlgebra dual_algebra(const PairedAlgebras& P);
ComultiplicationView comultiplication(const PairedAlgebras& P);

/// δ(α[e_i,e_j]) = ρ(e_i)δ(e_j) − ρ(e_j)δ(e_i) with ρ(x) = −(ad_x⊗α + α⊗ad_x),
/// family "cocycle" indexed by (i, j). The Beta side is the same statement for
/// the dual algebra and β.
AxiomReport check_cocycle(const PairedAlgebras& P, CocycleSide side);

/// The same identity expanded into structure constants and evaluated by index
/// sums, one scalar equation per (i, j, m, p), family "cocycle-coordinates".
AxiomReport check_cocycle_coordinates(const PairedAlgebras& P, CocycleSide side);

/// Families "primal:", "dual:" (hom-CSA) and "gamma:", "beta:" (cocycles).
AxiomReport check_bialgebra(const PairedAlgebras& P);
bool is_bialgebra(const PairedAlgebras& P);

/// (A, A*, R_·*, L_·*, R_∘*, L_∘*).
MatchedPairCSA standard_matched_pair(const PairedAlgebras& P);

/// bicross_product(standard_matched_pair(P)) on A ⊕ A*.
HomAlgebra standard_manin_algebra(const PairedAlgebras& P);

/// ⟨x, b⟩ + ⟨y, a⟩ for u = x + a, v = y + b. Throws InputError unless both
/// vectors have the same even length.
Scalar standard_pairing(const Vector& u, const Vector& v);

/// Families "invariance", "twist-invariance", "isotropic-primal", "isotropic-dual".
AxiomReport check_manin_invariance(const PairedAlgebras& P);

struct EquivalenceReport {
  bool maninTriple = false;       // (i)
  bool matchedPairCsa = false;    // (ii)
  bool matchedPairHomLie = false; // (iii)
  bool bialgebra = false;         // (iv)
  bool primalCsa = false;
  bool dualCsa = false;
  bool alphaInvolutive = false;
  std::vector<AxiomReport> reports;

  bool agree() const {
    return maninTriple == matchedPairCsa && matchedPairCsa == matchedPairHomLie &&
           matchedPairHomLie == bialgebra;
  }
};

/// Evaluates all four conditions independently; `reports` holds the
/// preconditions first, then the evidence for each condition.
EquivalenceReport equivalence_report(const PairedAlgebras& P);

/// Families "comult", "twist", "dual-twist", "dual-comult".
AxiomReport check_bialgebra_homomorphism(const LinearMap& f, const PairedAlgebras& P1,
                                         const PairedAlgebras& P2);

}  // namespace homcsa
