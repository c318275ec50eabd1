// Copyright 2026 The twistfrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Twisted co-representations: the twist γ: V⊗H -> H⊗V, the matrix M of
// the modified coaction on V⊗V, the relation ideal generated by BM - MB,
// and the bialgebra / comodule verifications.

#include <optional>
#include <vector>

#include "twistfrt/freealg.hpp"
#include "twistfrt/quadspace.hpp"
#include "twistfrt/report.hpp"
#include "twistfrt/rewrite.hpp"

namespace twistfrt {

/// γ^{klm}_{ijn}, with γ(e_i T^k_j) = Σ γ^{klm}_{ijn} T^n_l e_m. Either a
/// full n⁶ table or the diagonal form γ^{klm}_{ijn} = δ^m_i δ^l_j δ^k_n g(i,j,k).
class TwistTensor {
 public:
  static TwistTensor flip(int n);
  /// Diagonal twist with every g(i,j,k) = 1 until set.
  static TwistTensor diagonal(int n);
  /// Full twist with every entry zero until set.
  static TwistTensor full(int n);

  int dim() const noexcept { return n_; }
  bool is_diagonal() const noexcept { return diagonal_; }

  /// Diagonal entries; throws InvalidArgument on a full twist.
  const Scalar& g(int i, int j, int k) const;
  void set_g(int i, int j, int k, Scalar value);

  /// γ^{klm}_{ijn} (arguments in the order lower i, j, n then upper k, l, m).
  Scalar gamma(int i, int j, int n, int k, int l, int m) const;
  void set_gamma(int i, int j, int n, int k, int l, int m, Scalar value);

  TwistTensor map(const std::function<Scalar(const Scalar&)>& f) const;

  friend bool operator==(const TwistTensor&, const TwistTensor&) = default;

 private:
  TwistTensor(int n, bool diagonal);
  std::size_t g_index(int i, int j, int k) const;
  std::size_t gamma_index(int i, int j, int n, int k, int l, int m) const;

  int n_;
  bool diagonal_;
  std::vector<Scalar> values_;
};

/// M^{kl}_{ij} = Σ γ^{lpk}_{mjn} T^m_i T^n_p by direct index contraction,
/// over the T-letter alphabet of dimension n.
MMatrix build_M(const TwistTensor& twist);
/// Closed form for diagonal twists: M^{kl}_{ij} = g(k,j,l) T^k_i T^l_j.
MMatrix build_M_diagonal(const TwistTensor& twist);

/// Echelonized basis of the span of the n⁴ entries of BM - MB.
std::vector<NCPoly> ideal_generators(const EndoTensor& b, const MMatrix& m);

/// e_i T^k_j - Σ γ^{klm}_{ijn} T^n_l e_m for all i, j, k, over the
/// alphabet with T-letters followed by coordinates.
std::vector<NCPoly> cross_relations(const TwistTensor& twist);

/// The modified coaction δ^γ on a word of coordinates, computed by
/// composing δ⊗..⊗δ with γ applied letter by letter and the product of H.
/// Result: H-words over the T-alphabet ⊗ coordinate words.
TensorNCPoly coaction(const TwistTensor& twist, const Word& coordinates);

/// Two-parameter data needed by the determinant layer.
struct Deformation {
  Scalar q;
  Scalar p;
};

struct BialgebraPresentation {
  AlphabetPtr alphabet;  // T-letters (plus D, Dinv once localized)
  RewriteSystem relations;
  CoproductTable coproduct;
  CounitTable counit;
  std::optional<Deformation> deformation;
};

/// H_γ = free algebra on T / (BM - MB) with the standard coproduct/counit.
BialgebraPresentation assemble_bialgebra(const EndoTensor& b, const TwistTensor& twist,
                                         int max_degree = 4);
/// Presentation with explicitly given relations instead of a derived ideal.
BialgebraPresentation presentation_from_relations(int n, const std::vector<NCPoly>& relations,
                                                  int max_degree = 4);

/// Plane relations, cross relations and H-relations as one system over
/// T-letters followed by coordinates.
RewriteSystem combined_system(const RewriteSystem& h, const RewriteSystem& plane,
                              const TwistTensor& twist, int max_degree = 4);

/// ΔM^{kl}_{ij} - Σ_rs M^{rs}_{ij} ⊗ M^{kl}_{rs} reduced factorwise modulo sys.
CheckResult check_multiplicative(const MMatrix& m, const RewriteSystem& sys);
/// ε(M^{kl}_{ij}) = δ^k_i δ^l_j.
CheckResult check_counit(const MMatrix& m);
/// Δ(r) vanishes in (H/I)⊗(H/I) and ε(r) = 0 for every generator r of the
/// ideal (the BM - MB generators together with every relation of sys).
CheckResult check_coideal(const EndoTensor& b, const MMatrix& m, const RewriteSystem& sys);
/// Coassociativity, counit and 𝔅-equivariance of δ^γ on every e_i⊗e_j,
/// with H reduced modulo sys_h and V⊗V modulo sys_a. Also checks that the
/// coaction agrees with M.
CheckResult check_comodule_diagrams(const EndoTensor& b, const TwistTensor& twist, const MMatrix& m,
                                    const RewriteSystem& sys_h, const RewriteSystem& sys_a);

}  // namespace twistfrt
