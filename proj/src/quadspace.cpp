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

#include "twistfrt/quadspace.hpp"

namespace twistfrt {

EndoTensor::EndoTensor(int n) : n_(n), entries_(static_cast<std::size_t>(n * n * n * n)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
}

EndoTensor EndoTensor::identity(int n) {
  EndoTensor t(n);
  for (int p = 0; p < n * n; ++p) t.entries_[static_cast<std::size_t>(p * n * n + p)] = Scalar(1);
  return t;
}

EndoTensor EndoTensor::from_matrix(int n, const ScalarMatrix& rows) {
  EndoTensor t(n);
  const std::size_t p = static_cast<std::size_t>(n * n);
  if (rows.size() != p) {
    throw Error(ErrorCode::DimMismatch, "expected " + std::to_string(p) + " rows, got " +
                                            std::to_string(rows.size()));
  }
  for (std::size_t r = 0; r < p; ++r) {
    if (rows[r].size() != p) {
      throw Error(ErrorCode::DimMismatch, "row " + std::to_string(r + 1) + " has " +
                                              std::to_string(rows[r].size()) + " entries, expected " +
                                              std::to_string(p));
    }
    for (std::size_t c = 0; c < p; ++c) t.entries_[r * p + c] = rows[r][c];
  }
  return t;
}

ScalarMatrix EndoTensor::matrix() const {
  const std::size_t p = static_cast<std::size_t>(pairs());
  ScalarMatrix m(p, std::vector<Scalar>(p));
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) m[r][c] = entries_[r * p + c];
  }
  return m;
}

bool EndoTensor::is_symmetric() const {
  const int p = pairs();
  for (int r = 0; r < p; ++r) {
    for (int c = r + 1; c < p; ++c) {
      if (!(entry(r, c) == entry(c, r))) return false;
    }
  }
  return true;
}

EndoTensor EndoTensor::operator+(const EndoTensor& other) const {
  if (n_ != other.n_) throw Error(ErrorCode::DimMismatch, "tensor dimensions differ");
  EndoTensor t = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) t.entries_[i] += other.entries_[i];
  return t;
}

EndoTensor EndoTensor::operator-(const EndoTensor& other) const {
  return *this + other * Scalar(-1);
}

EndoTensor EndoTensor::operator*(const Scalar& s) const {
  return map([&s](const Scalar& x) { return x * s; });
}

EndoTensor EndoTensor::map(const std::function<Scalar(const Scalar&)>& f) const {
  EndoTensor t = *this;
  for (auto& e : t.entries_) e = f(e);
  return t;
}

EndoTensor tensor_compose(const EndoTensor& a, const EndoTensor& d) {
  if (a.dim() != d.dim()) throw Error(ErrorCode::DimMismatch, "tensor dimensions differ");
  const int p = a.pairs();
  EndoTensor out(a.dim());
  ScalarMatrix m(static_cast<std::size_t>(p), std::vector<Scalar>(static_cast<std::size_t>(p)));
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < p; ++c) {
      Scalar s;
      for (int k = 0; k < p; ++k) {
        if (a.entry(r, k).is_zero() || d.entry(k, c).is_zero()) continue;
        s += a.entry(r, k) * d.entry(k, c);
      }
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = s;
    }
  }
  return EndoTensor::from_matrix(a.dim(), m);
}

namespace {

ScalarMatrix multiply(const ScalarMatrix& x, const ScalarMatrix& y) {
  const std::size_t n = x.size();
  ScalarMatrix out(n, std::vector<Scalar>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!y[k][c].is_zero()) out[r][c] += x[r][k] * y[k][c];
      }
    }
  }
  return out;
}

}  // namespace

bool yang_baxter_check(const EndoTensor& b) {
  const int n = b.dim();
  const std::size_t size = static_cast<std::size_t>(n * n * n);
  auto triple = [n](int i, int j, int m) {
    return static_cast<std::size_t>(((i - 1) * n + (j - 1)) * n + (m - 1));
  };
  ScalarMatrix b12(size, std::vector<Scalar>(size));
  ScalarMatrix b23(size, std::vector<Scalar>(size));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          const Scalar& v = b(i, j, k, l);
          if (v.is_zero()) continue;
          for (int m = 1; m <= n; ++m) {
            b12[triple(i, j, m)][triple(k, l, m)] = v;  // B ⊗ I
            b23[triple(m, i, j)][triple(m, k, l)] = v;  // I ⊗ B
          }
        }
      }
    }
  }
  const ScalarMatrix lhs = multiply(multiply(b12, b23), b12);
  const ScalarMatrix rhs = multiply(multiply(b23, b12), b23);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------

MMatrix::MMatrix(int n, AlphabetPtr alphabet)
    : n_(n),
      alphabet_(std::move(alphabet)),
      entries_(static_cast<std::size_t>(n * n * n * n), NCPoly(alphabet_)) {}

MMatrix MMatrix::map(const std::function<NCPoly(const NCPoly&)>& f) const {
  MMatrix out = *this;
  for (auto& e : out.entries_) e = f(e);
  return out;
}

MMatrix compose(const EndoTensor& a, const MMatrix& m) {
  if (a.dim() != m.dim()) throw Error(ErrorCode::DimMismatch, "tensor dimensions differ");
  const int n = a.dim();
  MMatrix out(n, m.alphabet());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
          NCPoly& e = out.at(i, j, r, s);
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              const Scalar& c = a(i, j, k, l);
              if (!c.is_zero()) e += m(k, l, r, s) * c;
            }
        }
  return out;
}

MMatrix compose(const MMatrix& m, const EndoTensor& a) {
  if (a.dim() != m.dim()) throw Error(ErrorCode::DimMismatch, "tensor dimensions differ");
  const int n = a.dim();
  MMatrix out(n, m.alphabet());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
          NCPoly& e = out.at(i, j, r, s);
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) {
              const Scalar& c = a(k, l, r, s);
              if (!c.is_zero()) e += m(i, j, k, l) * c;
            }
        }
  return out;
}

MMatrix compose(const MMatrix& a, const MMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "tensor dimensions differ");
  const int n = a.dim();
  MMatrix out(n, a.alphabet());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
          NCPoly& e = out.at(i, j, r, s);
          for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l) e += a(i, j, k, l) * b(k, l, r, s);
        }
  return out;
}

std::string index_label(int i, int j, int k, int l) {
  return "(i,j;k,l)=(" + std::to_string(i) + "," + std::to_string(j) + ";" + std::to_string(k) +
         "," + std::to_string(l) + ")";
}

// ---------------------------------------------------------------------------

QuadraticSpace relations_from_B(const EndoTensor& b) {
  const int n = b.dim();
  QuadraticSpace space;
  space.dim = n;
  space.b = b;
  space.alphabet = Alphabet::coordinates(n);
  const EndoTensor form = EndoTensor::identity(n) - b;
  const Echelon e = row_echelon(form.matrix());
  for (const auto& row : e.rows) {
    NCPoly rel(space.alphabet);
    for (int k = 1; k <= n; ++k) {
      for (int l = 1; l <= n; ++l) {
        const Scalar& c = row[static_cast<std::size_t>(b.pair_index(k, l))];
        rel.add_term(Word({static_cast<LetterId>(k - 1), static_cast<LetterId>(l - 1)}), c);
      }
    }
    space.relations.push_back(std::move(rel));
  }
  return space;
}

QuadraticSpectrum quadratic_spectrum(const EndoTensor& b) {
  const int n = b.dim();
  const EndoTensor id = EndoTensor::identity(n);
  const EndoTensor b2 = tensor_compose(b, b);
  // Solve B² = αB + βI entrywise.
  ScalarMatrix rows;
  const int p = b.pairs();
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < p; ++c) rows.push_back({b.entry(r, c), id.entry(r, c), b2.entry(r, c)});
  }
  const Echelon e = row_echelon(rows);
  if (e.pivots.size() != 2 || e.pivots[0] != 0 || e.pivots[1] != 1) {
    throw Error(ErrorCode::NotDiagonalizableQuadratic,
                "B has no quadratic minimal polynomial with distinct eigenvalues");
  }
  QuadraticSpectrum s;
  s.trace_coefficient = e.rows[0][2];
  s.constant = e.rows[1][2];
  // x² - αx - β has root 1 iff 1 - α - β = 0.
  if (!(Scalar(1) - s.trace_coefficient - s.constant).is_zero()) {
    throw Error(ErrorCode::NotDiagonalizableQuadratic,
                "1 is not an eigenvalue of B (minimal polynomial x^2 - (" +
                    s.trace_coefficient.str() + ")x - (" + s.constant.str() + "))");
  }
  s.unit_eigenvalue = Scalar(1);
  s.other_eigenvalue = s.trace_coefficient - Scalar(1);
  if (s.other_eigenvalue == s.unit_eigenvalue) {
    throw Error(ErrorCode::NotDiagonalizableQuadratic, "B has the single eigenvalue 1");
  }
  return s;
}

QuadraticSpace spectral_complement(const EndoTensor& b) {
  const QuadraticSpectrum s = quadratic_spectrum(b);
  if (s.other_eigenvalue.is_zero()) return relations_from_B(EndoTensor::identity(b.dim()) - b);
  return relations_from_B(b * s.other_eigenvalue.inverse());
}

CheckResult master_relation_check(const EndoTensor& bp, const MMatrix& m, const RewriteSystem& sys) {
  const int n = bp.dim();
  const EndoTensor id = EndoTensor::identity(n);
  if (!(tensor_compose(bp, bp) == id)) {
    throw Error(ErrorCode::NotInvolutive, "B' does not square to the identity");
  }
  CheckResult result("master-relation");
  const MMatrix master = compose(compose(id - bp, m), id + bp);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          result.expect_zero(index_label(i, j, k, l), is_zero_mod(master(i, j, k, l), sys));
        }
  return result;
}

}  // namespace twistfrt
