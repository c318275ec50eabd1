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

// Free associative algebra over Scalar on a finite ordered alphabet, and its
// tensor powers with componentwise multiplication.

#include <array>
#include <functional>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistfrt/error.hpp"
#include "twistfrt/scalar.hpp"

namespace twistfrt {

using LetterId = std::uint8_t;

enum class LetterRole { MatrixEntry, Coordinate, Auxiliary };

/// One generator. Matrix entries T^col_row carry 1-based row/column, a
/// coordinate e_i carries its index in `row`.
struct Letter {
  std::string name;
  LetterRole role = LetterRole::Auxiliary;
  int row = 0;
  int col = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

class Alphabet {
 public:
  explicit Alphabet(std::vector<Letter> letters);

  /// T-letters first (row-major; a,b,c,d when n == 2, t<row><col>
  /// otherwise), then D and Dinv when `determinant`, then e1..en when
  /// `coordinates`. Instances are cached, so equal requests share a pointer.
  static std::shared_ptr<const Alphabet> standard(int n, bool coordinates = false,
                                                  bool determinant = false);
  /// Coordinates e1..en only (cached).
  static std::shared_ptr<const Alphabet> coordinates(int n);

  std::size_t size() const noexcept { return letters_.size(); }
  const Letter& letter(LetterId id) const { return letters_.at(id); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::optional<LetterId> find(std::string_view name) const;
  LetterId id(std::string_view name) const;  // throws when absent

  /// Matrix dimension n (number of coordinate rows of the T-letters).
  int dim() const noexcept { return dim_; }
  /// Letter T^col_row, i.e. the (row, col) entry of the matrix T.
  std::optional<LetterId> matrix_entry(int row, int col) const;
  std::optional<LetterId> coordinate(int index) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  int dim_ = 0;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Sequence of letter ids.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<LetterId> letters);
  static Word of(LetterId letter) { return Word({letter}); }

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  LetterId operator[](std::size_t i) const {
    return static_cast<LetterId>(data_[i]);
  }
  Word sub(std::size_t pos, std::size_t len = std::string::npos) const;
  /// Position of the first occurrence of `w` at or after `from`, or npos.
  std::size_t find(const Word& w, std::size_t from = 0) const {
    return data_.find(w.data_, from);
  }
  Word operator+(const Word& other) const;
  Word& operator+=(const Word& other) {
    data_ += other.data_;
    return *this;
  }
  void push_back(LetterId l) { data_.push_back(static_cast<char>(l)); }

  /// Letters juxtaposed; "1" for the empty word.
  std::string str(const Alphabet& alphabet) const;

  friend bool operator==(const Word&, const Word&) = default;
  const std::string& bytes() const noexcept { return data_; }

 private:
  std::string data_;
};

/// Graded order: shorter words first, then lexicographic by letter id.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto& x = a.bytes();
    const auto& y = b.bytes();
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto cx = static_cast<unsigned char>(x[i]);
      const auto cy = static_cast<unsigned char>(y[i]);
      if (cx != cy) return cx < cy;
    }
    return false;
  }
};

/// Element of the free algebra. The alphabet pointer may be null for pure
/// scalars, which combine with polynomials over any alphabet.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, WordLess>;

  NCPoly() = default;
  explicit NCPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  NCPoly(AlphabetPtr alphabet, const Word& word, const Scalar& coeff = Scalar(1));
  static NCPoly constant(const Scalar& c, AlphabetPtr alphabet = nullptr);
  static NCPoly letter(AlphabetPtr alphabet, LetterId id);
  static NCPoly letter(AlphabetPtr alphabet, std::string_view name);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Length of the longest word; 0 for zero.
  std::size_t degree() const;
  bool is_homogeneous(std::size_t degree) const;
  /// Largest word in the graded order; requires a nonzero polynomial.
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const Scalar& leading_coeff() const { return terms_.rbegin()->second; }
  Scalar coeff(const Word& w) const;
  /// Coefficient of the empty word when the polynomial is a pure scalar.
  std::optional<Scalar> as_scalar() const;

  void add_term(const Word& w, const Scalar& c);

  NCPoly operator-() const;
  NCPoly operator+(const NCPoly& other) const;
  NCPoly operator-(const NCPoly& other) const;
  NCPoly operator*(const NCPoly& other) const;
  NCPoly operator*(const Scalar& c) const;
  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);

  /// Same polynomial over a different alphabet, mapping letters by name.
  NCPoly rebased(const AlphabetPtr& target) const;
  NCPoly map_coefficients(const std::function<Scalar(const Scalar&)>& f) const;

  /// Canonical text: terms in decreasing word order, coefficients in the
  /// scalar grammar, letters juxtaposed.
  std::string str() const;

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

 private:
  friend NCPoly nc_mul(const NCPoly&, const NCPoly&);
  AlphabetPtr adopt(const NCPoly& other) const;

  AlphabetPtr alphabet_;
  Terms terms_;
};

/// Free-algebra product; throws AlphabetMismatch for different alphabets.
NCPoly nc_mul(const NCPoly& a, const NCPoly& b);

/// Renders `coeff * body` with the sign pulled out: returns {negative, text}.
std::pair<bool, std::string> render_term(const Scalar& coeff, const std::string& body);

template <std::size_t N>
struct WordTupleLess {
  bool operator()(const std::array<Word, N>& a, const std::array<Word, N>& b) const noexcept {
    WordLess less;
    for (std::size_t i = 0; i < N; ++i) {
      if (less(a[i], b[i])) return true;
      if (less(b[i], a[i])) return false;
    }
    return false;
  }
};

/// Element of the N-fold tensor power of the free algebra. Each factor has
/// its own alphabet (coordinates may live in a different factor than the
/// matrix entries).
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<Word, N>;
  using Terms = std::map<Key, Scalar, WordTupleLess<N>>;

  Tensor() = default;
  explicit Tensor(std::array<AlphabetPtr, N> alphabets) : alphabets_(std::move(alphabets)) {}

  static Tensor pure(const std::array<NCPoly, N>& factors);

  const std::array<AlphabetPtr, N>& alphabets() const noexcept { return alphabets_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const Key& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor operator+(const Tensor& other) const {
    Tensor r = *this;
    r.merge_alphabets(other);
    for (const auto& [k, c] : other.terms_) r.add_term(k, c);
    return r;
  }
  Tensor operator-(const Tensor& other) const { return *this + other * Scalar(-1); }
  Tensor operator*(const Scalar& s) const {
    Tensor r(alphabets_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }
  /// Componentwise product (u1 ⊗ .. ⊗ uN)(v1 ⊗ .. ⊗ vN) = u1v1 ⊗ .. ⊗ uNvN.
  Tensor operator*(const Tensor& other) const {
    Tensor r = Tensor(alphabets_);
    r.merge_alphabets(other);
    for (const auto& [ka, ca] : terms_) {
      for (const auto& [kb, cb] : other.terms_) {
        Key k;
        for (std::size_t i = 0; i < N; ++i) k[i] = ka[i] + kb[i];
        r.add_term(k, ca * cb);
      }
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string body;
      for (std::size_t i = 0; i < N; ++i) {
        if (i) body += " ⊗ ";
        static const Alphabet kEmpty({});
        body += it->first[i].str(alphabets_[i] ? *alphabets_[i] : kEmpty);
      }
      auto [neg, text] = render_term(it->second, body);
      if (first) {
        out += neg ? "-" + text : text;
      } else {
        out += (neg ? " - " : " + ") + text;
      }
      first = false;
    }
    return out;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }

 private:
  void merge_alphabets(const Tensor& other) {
    for (std::size_t i = 0; i < N; ++i) {
      if (!alphabets_[i]) {
        alphabets_[i] = other.alphabets_[i];
      } else if (other.alphabets_[i] && other.alphabets_[i] != alphabets_[i] &&
                 !(*other.alphabets_[i] == *alphabets_[i])) {
        throw Error(ErrorCode::AlphabetMismatch, "tensor factors over different alphabets");
      }
    }
  }

  std::array<AlphabetPtr, N> alphabets_{};
  Terms terms_;
};

template <std::size_t N>
Tensor<N> Tensor<N>::pure(const std::array<NCPoly, N>& factors) {
  std::array<AlphabetPtr, N> alphabets;
  for (std::size_t i = 0; i < N; ++i) alphabets[i] = factors[i].alphabet();
  Tensor<N> r(alphabets);
  // Expand the product of sums.
  std::vector<std::pair<Key, Scalar>> acc{{Key{}, Scalar(1)}};
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<std::pair<Key, Scalar>> next;
    for (const auto& [k, c] : acc) {
      for (const auto& [w, d] : factors[i].terms()) {
        Key nk = k;
        nk[i] = w;
        next.emplace_back(nk, c * d);
      }
    }
    acc = std::move(next);
  }
  for (const auto& [k, c] : acc) r.add_term(k, c);
  return r;
}

using TensorNCPoly = Tensor<2>;

/// Image of every letter under a coproduct; entries may be absent.
using CoproductTable = std::vector<std::optional<TensorNCPoly>>;
/// Counit value per letter; absent means undefined (coordinates).
using CounitTable = std::vector<std::optional<Scalar>>;

/// ΔT^j_i = Σ_k T^k_i ⊗ T^j_k, Δ(D) = D ⊗ D, Δ(Dinv) = Dinv ⊗ Dinv.
CoproductTable standard_coproduct(const AlphabetPtr& alphabet);
/// ε(T^j_i) = δ_ij, ε(D) = ε(Dinv) = 1, undefined on coordinates.
CounitTable standard_counit(const AlphabetPtr& alphabet);

/// Extends `table` as an algebra morphism; throws MissingGeneratorImage.
TensorNCPoly coproduct(const NCPoly& x, const CoproductTable& table);
Scalar counit(const NCPoly& x, const CounitTable& table);

/// Applies Δ to factor `slot` of a tensor, producing one more factor.
template <std::size_t N>
Tensor<N + 1> coproduct_at(const Tensor<N>& t, std::size_t slot, const CoproductTable& table) {
  std::array<AlphabetPtr, N + 1> alphabets;
  for (std::size_t i = 0, j = 0; i < N; ++i, ++j) {
    alphabets[j] = t.alphabets()[i];
    if (i == slot) alphabets[++j] = t.alphabets()[i];
  }
  Tensor<N + 1> r(alphabets);
  for (const auto& [key, c] : t.terms()) {
    const TensorNCPoly d = coproduct(NCPoly(t.alphabets()[slot], key[slot]), table);
    for (const auto& [dk, dc] : d.terms()) {
      typename Tensor<N + 1>::Key nk;
      for (std::size_t i = 0, j = 0; i < N; ++i, ++j) {
        if (i == slot) {
          nk[j] = dk[0];
          nk[++j] = dk[1];
        } else {
          nk[j] = key[i];
        }
      }
      r.add_term(nk, c * dc);
    }
  }
  return r;
}

}  // namespace twistfrt
