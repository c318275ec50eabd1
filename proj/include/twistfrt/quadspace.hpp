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

// Quantum linear spaces as quadratic data: endomorphisms of V⊗V, the
// Yang-Baxter test, relation ideals of A = T(V)/(image of I - B), and the
// spectral complement used for the Grassmann partner of a plane.

#include <functional>
#include <optional>
#include <vector>

#include "twistfrt/freealg.hpp"
#include "twistfrt/linalg.hpp"
#include "twistfrt/report.hpp"
#include "twistfrt/rewrite.hpp"

namespace twistfrt {

/// Dense 4-index tensor B^{kl}_{ij}, i.e. an n²×n² matrix whose row is the
/// lower pair (i,j) and column the upper pair (k,l), both flattened in the
/// order (1,1),(1,2),..,(n,n). Indices are 1-based.
class EndoTensor {
 public:
  explicit EndoTensor(int n);
  static EndoTensor identity(int n);
  /// `rows` is n²×n².
  static EndoTensor from_matrix(int n, const ScalarMatrix& rows);

  int dim() const noexcept { return n_; }
  int pairs() const noexcept { return n_ * n_; }
  int pair_index(int i, int j) const noexcept { return (i - 1) * n_ + (j - 1); }

  const Scalar& operator()(int i, int j, int k, int l) const {
    return entries_[static_cast<std::size_t>(pair_index(i, j) * pairs() + pair_index(k, l))];
  }
  Scalar& at(int i, int j, int k, int l) {
    return entries_[static_cast<std::size_t>(pair_index(i, j) * pairs() + pair_index(k, l))];
  }
  const Scalar& entry(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * pairs() + col)];
  }

  ScalarMatrix matrix() const;
  bool is_symmetric() const;

  EndoTensor operator+(const EndoTensor& other) const;
  EndoTensor operator-(const EndoTensor& other) const;
  EndoTensor operator*(const Scalar& s) const;
  EndoTensor map(const std::function<Scalar(const Scalar&)>& f) const;

  friend bool operator==(const EndoTensor&, const EndoTensor&) = default;

 private:
  int n_;
  std::vector<Scalar> entries_;
};

/// (A×D)^{rs}_{ij} = Σ_kl A^{kl}_{ij} D^{rs}_{kl}. Throws DimMismatch.
EndoTensor tensor_compose(const EndoTensor& a, const EndoTensor& d);

/// B12 B23 B12 == B23 B12 B23 on V⊗V⊗V, checked on all n⁶ components.
bool yang_baxter_check(const EndoTensor& b);

/// 4-index matrix with free-algebra entries M^{kl}_{ij}; same layout as
/// EndoTensor.
class MMatrix {
 public:
  MMatrix(int n, AlphabetPtr alphabet);

  int dim() const noexcept { return n_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const NCPoly& operator()(int i, int j, int k, int l) const { return entries_[index(i, j, k, l)]; }
  NCPoly& at(int i, int j, int k, int l) { return entries_[index(i, j, k, l)]; }

  MMatrix map(const std::function<NCPoly(const NCPoly&)>& f) const;

  friend bool operator==(const MMatrix& a, const MMatrix& b) { return a.entries_ == b.entries_; }

 private:
  std::size_t index(int i, int j, int k, int l) const {
    const int p = n_ * n_;
    return static_cast<std::size_t>(((i - 1) * n_ + (j - 1)) * p + (k - 1) * n_ + (l - 1));
  }
  int n_;
  AlphabetPtr alphabet_;
  std::vector<NCPoly> entries_;
};

MMatrix compose(const EndoTensor& a, const MMatrix& m);
MMatrix compose(const MMatrix& m, const EndoTensor& a);
/// Matrix product with noncommutative entries, left factor first.
MMatrix compose(const MMatrix& a, const MMatrix& b);

/// Component-wise "index string" like "(1,2;2,1)" for witnesses.
std::string index_label(int i, int j, int k, int l);

struct QuadraticSpace {
  int dim = 0;
  EndoTensor b{1};
  AlphabetPtr alphabet;         // coordinates e1..en
  std::vector<NCPoly> relations;  // echelonized, degree 2

  RewriteSystem system(int max_degree = 4) const {
    return RewriteSystem::from_relations(alphabet, relations, max_degree);
  }
};

/// Basis of span{ e_i e_j - Σ B^{kl}_{ij} e_k e_l }: rows of I - B in reduced
/// echelon form, pivots taken in the pair order and normalized to 1.
QuadraticSpace relations_from_B(const EndoTensor& b);

/// (B - λ1 I)(B - λ2 I) = 0 with λ1 = 1 ≠ λ2.
struct QuadraticSpectrum {
  Scalar trace_coefficient;  // α in B² = αB + βI
  Scalar constant;           // β
  Scalar unit_eigenvalue;    // 1
  Scalar other_eigenvalue;   // λ2 = α - 1
};

/// Throws NotDiagonalizableQuadratic when B has no quadratic minimal
/// polynomial with distinct roots one of which is 1.
QuadraticSpectrum quadratic_spectrum(const EndoTensor& b);

/// Quadratic space whose relations span the λ2-eigenspace complement, i.e.
/// the row space of B - λ2 I; its tensor is B/λ2 (or I - B when λ2 = 0).
QuadraticSpace spectral_complement(const EndoTensor& b);

/// Every entry of (I - B')M(I + B') must reduce to zero modulo `sys`.
/// Throws NotInvolutive when B'² ≠ I.
CheckResult master_relation_check(const EndoTensor& bp, const MMatrix& m, const RewriteSystem& sys);

}  // namespace twistfrt
