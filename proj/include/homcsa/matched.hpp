#pragma once

#include "homcsa/repmod.hpp"

namespace homcsa {

/// A acts on B through lA, rA (algDim = dim A, modDim = dim B); B acts on A
/// through lB, rB.
struct MatchedPairCSA {
  HomAlgebra A;
  HomAlgebra B;
  ActionTensor lA, rA, lB, rB;

  MatchedPairCSA() = default;
  MatchedPairCSA(HomAlgebra A, HomAlgebra B, ActionTensor lA, ActionTensor rA, ActionTensor lB,
                 ActionTensor rB);

  /// (B, A, lB, rB, lA, rA).
  MatchedPairCSA swapped() const { return MatchedPairCSA(B, A, lB, rB, lA, rA); }

  friend bool operator==(const MatchedPairCSA&, const MatchedPairCSA&) = default;
};

/// rhoG: G acting on H; rhoH: H acting on G.
struct MatchedPairHomLie {
  HomAlgebra G;
  HomAlgebra H;
  ActionTensor rhoG, rhoH;

  MatchedPairHomLie() = default;
  MatchedPairHomLie(HomAlgebra G, HomAlgebra H, ActionTensor rhoG, ActionTensor rhoH);

  friend bool operator==(const MatchedPairHomLie&, const MatchedPairHomLie&) = default;
};

/// Both induced bimodules ("A-on-B:", "B-on-A:") plus four cross families:
/// "cross-AAB-1", "cross-AAB-2" (indices x, y in A, a in B; values in A) and
/// "cross-ABB-1", "cross-ABB-2" (x in A, a, b in B; values in B).
AxiomReport check_matched_pair_csa(const MatchedPairCSA& M);

/// A ⊕ B with (x+a)(y+b) = (xy + lB(a)y + rB(b)x) + (a∘b + lA(x)b + rA(y)a)
/// and twist α_A ⊕ α_B.
HomAlgebra bicross_product(const MatchedPairCSA& M);

/// Hom-Lie checks of G and H ("G:", "H:"), the two representations
/// ("G-on-H:", "H-on-G:") and the cross families "cross-G", "cross-H".
AxiomReport check_matched_pair_hom_lie(const MatchedPairHomLie& M);

MatchedPairHomLie induced_lie_matched_pair(const MatchedPairCSA& M);

/// G ⊕ H with [x+a, y+b] = [x,y] + ρH(a)y − ρH(b)x + [a,b] + ρG(x)b − ρG(y)a.
HomAlgebra lie_bicross_product(const MatchedPairHomLie& M);

}  // namespace homcsa
