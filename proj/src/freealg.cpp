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

#include <mutex>
#include <tuple>

#include "twistfrt/freealg.hpp"

namespace twistfrt {

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.size() > 250) throw Error(ErrorCode::InvalidArgument, "alphabet too large");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (letters_[i].name == letters_[j].name) {
        throw Error(ErrorCode::InvalidArgument, "duplicate letter '" + letters_[i].name + "'");
      }
    }
    if (letters_[i].role == LetterRole::MatrixEntry) {
      dim_ = std::max({dim_, letters_[i].row, letters_[i].col});
    } else if (letters_[i].role == LetterRole::Coordinate) {
      dim_ = std::max(dim_, letters_[i].row);
    }
  }
}

std::shared_ptr<const Alphabet> Alphabet::standard(int n, bool coordinates, bool determinant) {
  static std::mutex mutex;
  static std::map<std::tuple<int, bool, bool>, std::shared_ptr<const Alphabet>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(n, coordinates, determinant);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  std::vector<Letter> letters;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::string name;
      if (n == 2) {
        name = std::string(1, static_cast<char>('a' + (i - 1) * 2 + (j - 1)));
      } else {
        name = "t" + std::to_string(i) + std::to_string(j);
      }
      letters.push_back({name, LetterRole::MatrixEntry, i, j});
    }
  }
  if (determinant) {
    letters.push_back({"D", LetterRole::Auxiliary, 0, 0});
    letters.push_back({"Dinv", LetterRole::Auxiliary, 0, 0});
  }
  if (coordinates) {
    for (int i = 1; i <= n; ++i) {
      letters.push_back({"e" + std::to_string(i), LetterRole::Coordinate, i, 0});
    }
  }
  auto alphabet = std::make_shared<const Alphabet>(std::move(letters));
  cache.emplace(key, alphabet);
  return alphabet;
}

std::shared_ptr<const Alphabet> Alphabet::coordinates(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Alphabet>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Letter> letters;
  for (int i = 1; i <= n; ++i) {
    letters.push_back({"e" + std::to_string(i), LetterRole::Coordinate, i, 0});
  }
  auto alphabet = std::make_shared<const Alphabet>(std::move(letters));
  cache.emplace(n, alphabet);
  return alphabet;
}

std::optional<LetterId> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].name == name) return static_cast<LetterId>(i);
  }
  return std::nullopt;
}

LetterId Alphabet::id(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw Error(ErrorCode::InvalidArgument, "unknown letter '" + std::string(name) + "'");
}

std::optional<LetterId> Alphabet::matrix_entry(int row, int col) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    if (l.role == LetterRole::MatrixEntry && l.row == row && l.col == col) {
      return static_cast<LetterId>(i);
    }
  }
  return std::nullopt;
}

std::optional<LetterId> Alphabet::coordinate(int index) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Letter& l = letters_[i];
    if (l.role == LetterRole::Coordinate && l.row == index) return static_cast<LetterId>(i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Word::Word(std::initializer_list<LetterId> letters) {
  for (LetterId l : letters) data_.push_back(static_cast<char>(l));
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  Word w;
  w.data_ = data_.substr(pos, len);
  return w;
}

Word Word::operator+(const Word& other) const {
  Word w = *this;
  w.data_ += other.data_;
  return w;
}

std::string Word::str(const Alphabet& alphabet) const {
  if (data_.empty()) return "1";
  std::string out;
  for (char c : data_) out += alphabet.letter(static_cast<LetterId>(c)).name;
  return out;
}

// ---------------------------------------------------------------------------

NCPoly::NCPoly(AlphabetPtr alphabet, const Word& word, const Scalar& coeff)
    : alphabet_(std::move(alphabet)) {
  add_term(word, coeff);
}

NCPoly NCPoly::constant(const Scalar& c, AlphabetPtr alphabet) {
  return NCPoly(std::move(alphabet), Word(), c);
}

NCPoly NCPoly::letter(AlphabetPtr alphabet, LetterId id) {
  return NCPoly(std::move(alphabet), Word::of(id));
}

NCPoly NCPoly::letter(AlphabetPtr alphabet, std::string_view name) {
  const LetterId id = alphabet->id(name);
  return NCPoly(std::move(alphabet), Word::of(id));
}

std::size_t NCPoly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

bool NCPoly::is_homogeneous(std::size_t degree) const {
  for (const auto& [w, c] : terms_) {
    if (w.size() != degree) return false;
  }
  return true;
}

Scalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<Scalar> NCPoly::as_scalar() const {
  if (terms_.empty()) return Scalar();
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlphabetPtr NCPoly::adopt(const NCPoly& other) const {
  if (!alphabet_) return other.alphabet_;
  if (!other.alphabet_ || other.alphabet_ == alphabet_) return alphabet_;
  if (*other.alphabet_ == *alphabet_) return alphabet_;
  // Pure scalars are alphabet-agnostic.
  if (other.terms_.empty() || (other.terms_.size() == 1 && other.terms_.begin()->first.empty())) {
    return alphabet_;
  }
  if (terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty())) {
    return other.alphabet_;
  }
  throw Error(ErrorCode::AlphabetMismatch, "polynomials over different alphabets");
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  alphabet_ = adopt(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
  alphabet_ = adopt(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator+(const NCPoly& other) const {
  NCPoly r = *this;
  r += other;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& other) const {
  NCPoly r = *this;
  r -= other;
  return r;
}

NCPoly NCPoly::operator*(const NCPoly& other) const { return nc_mul(*this, other); }

NCPoly NCPoly::operator*(const Scalar& c) const {
  NCPoly r(alphabet_);
  if (c.is_zero()) return r;
  for (const auto& [w, d] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, d * c);
  return r;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b) {
  NCPoly r(a.adopt(b));
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
  }
  return r;
}

NCPoly NCPoly::rebased(const AlphabetPtr& target) const {
  if (!alphabet_ || alphabet_ == target) {
    NCPoly r = *this;
    r.alphabet_ = target;
    return r;
  }
  std::vector<LetterId> map(alphabet_->size());
  for (std::size_t i = 0; i < alphabet_->size(); ++i) {
    auto id = target->find(alphabet_->letter(static_cast<LetterId>(i)).name);
    map[i] = id ? *id : 255;
  }
  NCPoly r(target);
  for (const auto& [w, c] : terms_) {
    Word nw;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const LetterId l = map[w[i]];
      if (l == 255) {
        throw Error(ErrorCode::AlphabetMismatch,
                    "letter '" + alphabet_->letter(w[i]).name + "' missing from target alphabet");
      }
      nw.push_back(l);
    }
    r.add_term(nw, c);
  }
  return r;
}

NCPoly NCPoly::map_coefficients(const std::function<Scalar(const Scalar&)>& f) const {
  NCPoly r(alphabet_);
  for (const auto& [w, c] : terms_) r.add_term(w, f(c));
  return r;
}

std::pair<bool, std::string> render_term(const Scalar& coeff, const std::string& body) {
  const bool negative =
      !coeff.numerator().is_zero() && coeff.denominator().is_one() &&
      coeff.numerator().is_term() && sgn(coeff.numerator().leading().second) < 0;
  const Scalar mag = negative ? -coeff : coeff;
  const bool unit_body = body == "1";
  if (mag.is_one()) return {negative, body};
  std::string c = mag.is_atomic() ? mag.str() : "(" + mag.str() + ")";
  if (unit_body) return {negative, mag.is_atomic() ? mag.str() : c};
  return {negative, c + "*" + body};
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  static const Alphabet kEmpty({});
  const Alphabet& alphabet = alphabet_ ? *alphabet_ : kEmpty;
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [neg, text] = render_term(it->second, it->first.str(alphabet));
    if (first) {
      out += neg ? "-" + text : text;
    } else {
      out += (neg ? " - " : " + ") + text;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

CoproductTable standard_coproduct(const AlphabetPtr& alphabet) {
  CoproductTable table(alphabet->size());
  const int n = alphabet->dim();
  for (std::size_t id = 0; id < alphabet->size(); ++id) {
    const Letter& l = alphabet->letter(static_cast<LetterId>(id));
    if (l.role == LetterRole::MatrixEntry) {
      TensorNCPoly t({alphabet, alphabet});
      for (int k = 1; k <= n; ++k) {
        const LetterId left = *alphabet->matrix_entry(l.row, k);
        const LetterId right = *alphabet->matrix_entry(k, l.col);
        t.add_term({Word::of(left), Word::of(right)}, Scalar(1));
      }
      table[id] = std::move(t);
    } else if (l.name == "D" || l.name == "Dinv") {
      TensorNCPoly t({alphabet, alphabet});
      t.add_term({Word::of(static_cast<LetterId>(id)), Word::of(static_cast<LetterId>(id))},
                 Scalar(1));
      table[id] = std::move(t);
    }
  }
  return table;
}

CounitTable standard_counit(const AlphabetPtr& alphabet) {
  CounitTable table(alphabet->size());
  for (std::size_t id = 0; id < alphabet->size(); ++id) {
    const Letter& l = alphabet->letter(static_cast<LetterId>(id));
    if (l.role == LetterRole::MatrixEntry) {
      table[id] = Scalar(l.row == l.col ? 1 : 0);
    } else if (l.name == "D" || l.name == "Dinv") {
      table[id] = Scalar(1);
    }
  }
  return table;
}

TensorNCPoly coproduct(const NCPoly& x, const CoproductTable& table) {
  const AlphabetPtr& alphabet = x.alphabet();
  TensorNCPoly result({alphabet, alphabet});
  for (const auto& [w, c] : x.terms()) {
    TensorNCPoly image({alphabet, alphabet});
    image.add_term({Word(), Word()}, Scalar(1));
    for (std::size_t i = 0; i < w.size(); ++i) {
      const LetterId l = w[i];
      if (l >= table.size() || !table[l]) {
        throw Error(ErrorCode::MissingGeneratorImage,
                    "no coproduct image for letter '" + alphabet->letter(l).name + "'");
      }
      image = image * *table[l];
    }
    result = result + image * c;
  }
  return result;
}

Scalar counit(const NCPoly& x, const CounitTable& table) {
  Scalar result;
  for (const auto& [w, c] : x.terms()) {
    Scalar value = c;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const LetterId l = w[i];
      if (l >= table.size() || !table[l]) {
        throw Error(ErrorCode::CounitUndefinedForLetter,
                    "counit undefined for letter '" + x.alphabet()->letter(l).name + "'");
      }
      value *= *table[l];
    }
    result += value;
  }
  return result;
}

}  // namespace twistfrt
