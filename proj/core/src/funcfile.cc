// Copyright 2026 The derivkey Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "derivkey/funcfile.h"

#include <cctype>
#include <set>
#include <vector>

#include "derivkey/error.h"
#include "text_util.h"

namespace derivkey {
namespace {

enum class Tok { kNumber, kIdent, kPlus, kMinus, kStar, kCaret, kSlash, kLParen, kRParen, kEquals, kEnd };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool IsIdentifier(std::string_view s) {
  if (s.empty() || !IsIdentStart(s[0])) return false;
  for (char c : s) {
    if (!IsIdentChar(c)) return false;
  }
  return true;
}

[[noreturn]] void FailAt(ErrorCode code, std::size_t line, std::size_t column,
                         const std::string& message) {
  Fail(code, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                 ": " + message);
}

std::vector<Token> Tokenize(std::string_view text, std::size_t line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    std::size_t col = offset + i + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (IsDigit(c)) {
      std::size_t start = i;
      while (i < text.size() && IsDigit(text[i])) ++i;
      if (i + 1 < text.size() && (text[i] == '.' || text[i] == '/') && IsDigit(text[i + 1])) {
        ++i;
        while (i < text.size() && IsDigit(text[i])) ++i;
      } else if (i < text.size() && text[i] == '.') {
        FailAt(ErrorCode::kSyntax, line, offset + i + 1, "digit expected after '.'");
      }
      out.push_back({Tok::kNumber, text.substr(start, i - start), col});
      continue;
    }
    if (IsIdentStart(c)) {
      std::size_t start = i;
      while (i < text.size() && IsIdentChar(text[i])) ++i;
      out.push_back({Tok::kIdent, text.substr(start, i - start), col});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '^': kind = Tok::kCaret; break;
      case '/': kind = Tok::kSlash; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '=': kind = Tok::kEquals; break;
      default:
        FailAt(ErrorCode::kSyntax, line, col,
               std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, text.substr(i, 1), col});
    ++i;
  }
  out.push_back({Tok::kEnd, {}, offset + text.size() + 1});
  return out;
}

class ExpressionParser {
 public:
  ExpressionParser(std::vector<Token> tokens, std::size_t line,
                   const std::vector<std::string>& variables)
      : tokens_(std::move(tokens)), line_(line), variables_(variables) {}

  Polynomial ParseStatementRhs() {
    Polynomial p = Expr();
    if (Peek().kind == Tok::kRParen) Raise(ErrorCode::kSyntax, "unbalanced ')'");
    if (Peek().kind != Tok::kEnd) Raise(ErrorCode::kSyntax, "unexpected '" + std::string(Peek().text) + "'");
    return p;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  const Token& Next() { return tokens_[pos_++]; }

  [[noreturn]] void Raise(ErrorCode code, const std::string& message) const {
    FailAt(code, line_, Peek().column, message);
  }

  Polynomial Expr() {
    bool negate = false;
    if (Peek().kind == Tok::kMinus) {
      Next();
      negate = true;
    }
    Polynomial acc = Term();
    if (negate) acc = -acc;
    while (Peek().kind == Tok::kPlus || Peek().kind == Tok::kMinus) {
      bool minus = Next().kind == Tok::kMinus;
      Polynomial rhs = Term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Polynomial Term() {
    Polynomial acc = Factor();
    while (true) {
      switch (Peek().kind) {
        case Tok::kStar:
          Next();
          acc = acc * Factor();
          break;
        case Tok::kSlash:
          Raise(ErrorCode::kDivisionUnsupported, "division is not supported");
        case Tok::kNumber:
        case Tok::kIdent:
        case Tok::kLParen:
          Raise(ErrorCode::kSyntax, "implicit multiplication is not supported; write '*'");
        case Tok::kCaret:
          Raise(ErrorCode::kSyntax, "'^' may only follow a variable");
        default:
          return acc;
      }
    }
  }

  Polynomial Factor() {
    const Token& tok = Peek();
    switch (tok.kind) {
      case Tok::kNumber: {
        Next();
        return Polynomial::Constant(variables_.size(), Rational::FromLiteral(tok.text));
      }
      case Tok::kIdent: {
        std::size_t index = variables_.size();
        for (std::size_t i = 0; i < variables_.size(); ++i) {
          if (variables_[i] == tok.text) index = i;
        }
        if (index == variables_.size()) {
          Raise(ErrorCode::kUnknownVariable, "unknown variable '" + std::string(tok.text) + "'");
        }
        Next();
        std::uint32_t power = 1;
        if (Peek().kind == Tok::kCaret) {
          Next();
          power = Exponent();
        }
        return Polynomial::Variable(variables_.size(), index, power);
      }
      case Tok::kLParen: {
        Next();
        Polynomial inner = Expr();
        if (Peek().kind != Tok::kRParen) Raise(ErrorCode::kSyntax, "expected ')'");
        Next();
        return inner;
      }
      case Tok::kMinus:
        Raise(ErrorCode::kSyntax, "unary minus is only allowed at the start of an expression");
      case Tok::kEnd:
        Raise(ErrorCode::kSyntax, "unexpected end of line");
      default:
        Raise(ErrorCode::kSyntax, "unexpected '" + std::string(tok.text) + "'");
    }
  }

  std::uint32_t Exponent() {
    const Token& tok = Peek();
    if (tok.kind == Tok::kMinus) {
      Raise(ErrorCode::kNonIntegerExponent, "exponent must be a positive integer");
    }
    if (tok.kind != Tok::kNumber) Raise(ErrorCode::kSyntax, "exponent expected after '^'");
    for (char c : tok.text) {
      if (!IsDigit(c)) {
        Raise(ErrorCode::kNonIntegerExponent,
              "exponent '" + std::string(tok.text) + "' is not a positive integer");
      }
    }
    if (tok.text.size() > 9) Raise(ErrorCode::kOverflow, "exponent too large");
    std::uint32_t value = static_cast<std::uint32_t>(std::stoul(std::string(tok.text)));
    if (value == 0) Raise(ErrorCode::kNonIntegerExponent, "exponent must be a positive integer");
    Next();
    return value;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
  const std::vector<std::string>& variables_;
};

}  // namespace

VectorField ParseFunctionFile(std::string_view text) {
  std::vector<std::string> variables;
  std::vector<VectorField::NamedPolynomial> functions;
  std::set<std::string, std::less<>> names;
  bool have_vars = false;

  auto lines = internal::Lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    std::string_view line = lines[n];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (internal::Trim(line).empty()) continue;

    std::size_t indent = line.find_first_not_of(" \t");
    std::string_view body = line.substr(indent);

    if (!have_vars) {
      if (body.substr(0, 5) != "vars:") {
        FailAt(ErrorCode::kSyntax, line_no, indent + 1, "expected 'vars:' declaration");
      }
      std::size_t col = indent + 5;
      std::string_view rest = body.substr(5);
      std::size_t i = 0;
      while (i < rest.size()) {
        if (rest[i] == ' ' || rest[i] == '\t' || rest[i] == '\r') {
          ++i;
          continue;
        }
        std::size_t start = i;
        while (i < rest.size() && rest[i] != ' ' && rest[i] != '\t' && rest[i] != '\r') ++i;
        std::string_view ident = rest.substr(start, i - start);
        if (!IsIdentifier(ident)) {
          FailAt(ErrorCode::kSyntax, line_no, col + start + 1,
                 "invalid variable name '" + std::string(ident) + "'");
        }
        if (!names.emplace(ident).second) {
          FailAt(ErrorCode::kDuplicateName, line_no, col + start + 1,
                 "duplicate variable '" + std::string(ident) + "'");
        }
        variables.emplace_back(ident);
      }
      if (variables.empty()) FailAt(ErrorCode::kSyntax, line_no, col + 1, "no variables declared");
      have_vars = true;
      continue;
    }

    auto tokens = Tokenize(line, line_no, 0);
    if (tokens[0].kind != Tok::kIdent) {
      FailAt(ErrorCode::kSyntax, line_no, tokens[0].column, "expected function name");
    }
    if (tokens[1].kind != Tok::kEquals) {
      FailAt(ErrorCode::kSyntax, line_no, tokens[1].column, "expected '='");
    }
    std::string name(tokens[0].text);
    if (!names.insert(name).second) {
      FailAt(ErrorCode::kDuplicateName, line_no, tokens[0].column, "duplicate name '" + name + "'");
    }
    std::size_t eq_col = tokens[1].column;
    tokens.erase(tokens.begin(), tokens.begin() + 2);
    for (const auto& t : tokens) {
      if (t.kind == Tok::kEquals) FailAt(ErrorCode::kSyntax, line_no, t.column, "unexpected '='");
    }
    if (tokens.front().kind == Tok::kEnd) {
      FailAt(ErrorCode::kSyntax, line_no, eq_col + 1, "empty expression");
    }
    ExpressionParser parser(std::move(tokens), line_no, variables);
    functions.emplace_back(std::move(name), parser.ParseStatementRhs());
  }

  if (!have_vars) Fail(ErrorCode::kSyntax, "line 1, column 1: empty function file");
  if (functions.empty()) {
    Fail(ErrorCode::kSyntax, "line " + std::to_string(lines.size()) +
                                 ", column 1: at least one function is required");
  }
  return VectorField(std::move(variables), std::move(functions));
}

std::string FormatFunctionFile(const VectorField& field) {
  std::string out = "vars:";
  for (const auto& v : field.variables()) out += " " + v;
  out += "\n";
  for (const auto& [name, poly] : field.functions()) {
    out += name + " = " + CanonicalText(poly, field.variables()) + "\n";
  }
  return out;
}

}  // namespace derivkey
