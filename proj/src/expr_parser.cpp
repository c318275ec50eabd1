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

#include <cctype>
#include <string>

#include "twistfrt/error.hpp"
#include "twistfrt/expr_parser.hpp"

namespace twistfrt {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  Lexer(std::string_view text, SourcePos origin)
      : text_(text), line_(origin.line), column_(origin.column) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
    Token t{Tok::End, "", line_, column_};
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Int;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
    switch (c) {
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", line_, column_,
                         "number, identifier, operator or parenthesis");
    }
    t.text = std::string(1, c);
    advance();
    return t;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

class Parser {
 public:
  Parser(std::string_view text, const AlphabetPtr& alphabet, const ParamSet& params,
         SourcePos origin)
      : lexer_(text, origin), alphabet_(alphabet), params_(params) {
    current_ = lexer_.next();
  }

  NCPoly parse() {
    NCPoly value = expr();
    if (current_.kind != Tok::End) {
      fail("unexpected '" + current_.text + "'", "operator or end of input");
    }
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message, const std::string& expected) {
    throw ParseError(message, current_.line, current_.column, expected);
  }

  Token take() {
    Token t = current_;
    current_ = lexer_.next();
    return t;
  }

  NCPoly expr() {
    NCPoly value = term();
    while (current_.kind == Tok::Plus || current_.kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      NCPoly rhs = term();
      value = minus ? value - rhs : value + rhs;
    }
    return value;
  }

  NCPoly term() {
    NCPoly value = unary();
    while (current_.kind == Tok::Star || current_.kind == Tok::Slash) {
      const Token op = take();
      NCPoly rhs = unary();
      if (op.kind == Tok::Star) {
        value = value * rhs;
      } else {
        auto divisor = rhs.as_scalar();
        if (!divisor) {
          throw Error(ErrorCode::SemanticError,
                      position(op) + ": division by a non-scalar expression");
        }
        if (divisor->is_zero()) {
          throw Error(ErrorCode::DivisionByZero, position(op) + ": division by zero");
        }
        value = value * divisor->inverse();
      }
    }
    return value;
  }

  NCPoly unary() {
    if (current_.kind == Tok::Minus) {
      take();
      return -unary();
    }
    if (current_.kind == Tok::Plus) {
      take();
      return unary();
    }
    return power();
  }

  NCPoly power() {
    NCPoly base = primary();
    if (current_.kind != Tok::Caret) return base;
    const Token caret = take();
    const int exponent = exponent_value(caret);
    if (auto s = base.as_scalar()) {
      if (exponent < 0 && s->is_zero()) {
        throw Error(ErrorCode::DivisionByZero, position(caret) + ": negative power of zero");
      }
      return NCPoly::constant(s->pow(exponent), alphabet_);
    }
    if (exponent < 0) {
      throw Error(ErrorCode::SemanticError,
                  position(caret) + ": negative power of a non-scalar expression");
    }
    NCPoly result = NCPoly::constant(Scalar(1), alphabet_);
    for (int i = 0; i < exponent; ++i) result = result * base;
    return result;
  }

  int exponent_value(const Token& caret) {
    bool paren = false;
    if (current_.kind == Tok::LParen) {
      paren = true;
      take();
    }
    bool negative = false;
    if (current_.kind == Tok::Minus || current_.kind == Tok::Plus) {
      negative = take().kind == Tok::Minus;
    }
    if (current_.kind != Tok::Int) {
      throw ParseError("malformed exponent", caret.line, caret.column, "integer exponent after '^'");
    }
    const Token digits = take();
    if (digits.text.size() > 6) {
      throw ParseError("exponent too large", digits.line, digits.column, "small integer");
    }
    int value = std::stoi(digits.text);
    if (paren) {
      if (current_.kind != Tok::RParen) fail("unclosed exponent", "')'");
      take();
    }
    return negative ? -value : value;
  }

  NCPoly primary() {
    switch (current_.kind) {
      case Tok::Int: {
        const Token t = take();
        return NCPoly::constant(Scalar(mpq_class(t.text)), alphabet_);
      }
      case Tok::Ident:
        return identifier(take());
      case Tok::LParen: {
        take();
        NCPoly inner = expr();
        if (current_.kind != Tok::RParen) fail("missing ')'", "')'");
        take();
        return inner;
      }
      case Tok::End:
        fail("unexpected end of input", "number, identifier or '('");
      default:
        fail("unexpected '" + current_.text + "'", "number, identifier or '('");
    }
  }

  NCPoly identifier(const Token& t) {
    if (params_.contains(t.text)) return NCPoly::constant(Scalar::param(t.text), alphabet_);
    if (alphabet_) {
      // Greedy longest-match split into letters.
      Word word;
      std::size_t pos = 0;
      while (pos < t.text.size()) {
        std::size_t best = 0;
        LetterId best_id = 0;
        for (std::size_t id = 0; id < alphabet_->size(); ++id) {
          const std::string& name = alphabet_->letter(static_cast<LetterId>(id)).name;
          if (name.size() > best && t.text.compare(pos, name.size(), name) == 0) {
            best = name.size();
            best_id = static_cast<LetterId>(id);
          }
        }
        if (best == 0) {
          word = Word();
          break;
        }
        word.push_back(best_id);
        pos += best;
      }
      if (!word.empty()) return NCPoly(alphabet_, word);
      throw Error(ErrorCode::SemanticError,
                  position(t) + ": unknown identifier '" + t.text + "'");
    }
    throw Error(ErrorCode::SemanticError, position(t) + ": unknown parameter '" + t.text + "'");
  }

  static std::string position(const Token& t) {
    return std::to_string(t.line) + ":" + std::to_string(t.column);
  }

  Lexer lexer_;
  AlphabetPtr alphabet_;
  const ParamSet& params_;
  Token current_;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const ParamSet& params, SourcePos origin) {
  Parser parser(text, nullptr, params, origin);
  NCPoly value = parser.parse();
  return *value.as_scalar();
}

NCPoly parse_ncpoly(std::string_view text, const AlphabetPtr& alphabet, const ParamSet& params,
                    SourcePos origin) {
  Parser parser(text, alphabet, params, origin);
  NCPoly value = parser.parse();
  return value.rebased(alphabet);
}

}  // namespace twistfrt
