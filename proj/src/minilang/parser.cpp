#include "strategem/minilang/parser.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace strategem::minilang {

SyntaxError::SyntaxError(std::size_t line, std::size_t column,
                         const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok {
  ConId,
  VarId,
  Int,
  String,
  KwModule,
  KwWhere,
  KwData,
  KwType,
  KwLet,
  KwIn,
  Equals,
  Bar,
  Arrow,
  Backslash,
  LParen,
  RParen,
  FocusOpen,
  FocusClose,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
  bool starts_decl;  // first token on its line, at column 1
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::ConId: return "constructor name";
    case Tok::VarId: return "variable name";
    case Tok::Int: return "integer";
    case Tok::String: return "string";
    case Tok::KwModule: return "`module`";
    case Tok::KwWhere: return "`where`";
    case Tok::KwData: return "`data`";
    case Tok::KwType: return "`type`";
    case Tok::KwLet: return "`let`";
    case Tok::KwIn: return "`in`";
    case Tok::Equals: return "`=`";
    case Tok::Bar: return "`|`";
    case Tok::Arrow: return "`->`";
    case Tok::Backslash: return "`\\`";
    case Tok::LParen: return "`(`";
    case Tok::RParen: return "`)`";
    case Tok::FocusOpen: return "`<<`";
    case Tok::FocusClose: return "`>>`";
    case Tok::End: return "end of input";
  }
  return "token";
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  bool fresh_line = true;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
        fresh_line = true;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(src.substr(i, len)), line, col,
                   fresh_line && col == 1});
    fresh_line = false;
    advance(len);
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "--") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (src.substr(i, 2) == "->") { push(Tok::Arrow, 2); continue; }
    if (src.substr(i, 2) == "<<") { push(Tok::FocusOpen, 2); continue; }
    if (src.substr(i, 2) == ">>") { push(Tok::FocusClose, 2); continue; }
    switch (c) {
      case '=': push(Tok::Equals, 1); continue;
      case '|': push(Tok::Bar, 1); continue;
      case '\\': push(Tok::Backslash, 1); continue;
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      default: break;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') {
        throw SyntaxError(line, col, "unterminated string literal");
      }
      push(Tok::String, j - i + 1);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && ident_char(src[j])) {
        throw SyntaxError(line, col, "malformed integer literal");
      }
      push(Tok::Int, j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string_view word = src.substr(i, j - i);
      Tok kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::ConId : Tok::VarId;
      if (word == "module") kind = Tok::KwModule;
      else if (word == "where") kind = Tok::KwWhere;
      else if (word == "data") kind = Tok::KwData;
      else if (word == "type") kind = Tok::KwType;
      else if (word == "let") kind = Tok::KwLet;
      else if (word == "in") kind = Tok::KwIn;
      push(kind, j - i);
      continue;
    }
    throw SyntaxError(line, col, std::string("unexpected character `") + c + "`");
  }
  out.push_back({Tok::End, "", line, col, true});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Module module() {
    expect(Tok::KwModule);
    Module m{expect(Tok::ConId).text, {}};
    expect(Tok::KwWhere);
    while (!at(Tok::End)) {
      if (!peek().starts_decl) fail("declarations must start at column 1");
      m.decls.push_back(decl());
      if (!peek().starts_decl) fail("expected end of declaration");
    }
    return m;
  }

  Expr whole_expr() {
    Expr e = expr();
    expect(Tok::End);
    return e;
  }

  Type whole_type() {
    Type t = type();
    expect(Tok::End);
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }

  // True when the next token may continue the current declaration.
  bool continues() const { return pos_ == decl_start_ || !peek().starts_decl; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(peek().line, peek().column, msg);
  }

  Token expect(Tok k) {
    if (!at(k) || (k != Tok::End && !continues())) {
      fail(std::string("expected ") + describe(k) + ", found " +
           describe(peek().kind));
    }
    return toks_[pos_++];
  }

  bool accept(Tok k) {
    if (at(k) && continues()) {
      ++pos_;
      return true;
    }
    return false;
  }

  Decl decl() {
    decl_start_ = pos_;
    if (at(Tok::KwData)) {
      ++pos_;
      DataDecl d{expect(Tok::ConId).text, {}};
      expect(Tok::Equals);
      do {
        ConDecl c{expect(Tok::ConId).text, {}};
        while (starts_atype()) c.fields.push_back(atype());
        d.constructors.push_back(std::move(c));
      } while (accept(Tok::Bar));
      return d;
    }
    if (at(Tok::KwType)) {
      ++pos_;
      std::string name = expect(Tok::ConId).text;
      expect(Tok::Equals);
      return TypeSyn{std::move(name), type()};
    }
    if (at(Tok::VarId)) {
      FunBind f{toks_[pos_++].text, {}, Var{}};
      while (continues() && (at(Tok::VarId) || at(Tok::LParen))) {
        f.params.push_back(pattern());
      }
      expect(Tok::Equals);
      f.body = expr();
      return f;
    }
    fail("expected a declaration");
  }

  // --- types ---

  bool starts_atype() const {
    return continues() && (at(Tok::ConId) || at(Tok::VarId) ||
                           at(Tok::LParen) || at(Tok::FocusOpen));
  }

  Type type() {
    Type from = btype();
    if (accept(Tok::Arrow)) return TyFun{std::move(from), type()};
    return from;
  }

  Type btype() {
    if (!starts_atype()) fail("expected a type");
    Type t = atype();
    while (starts_atype()) t = TyApp{std::move(t), atype()};
    return t;
  }

  Type atype() {
    const Token& tok = peek();
    if (accept(Tok::ConId)) return TyCon{tok.text};
    if (accept(Tok::VarId)) return TyVar{tok.text};
    if (accept(Tok::LParen)) {
      Type t = type();
      expect(Tok::RParen);
      return t;
    }
    if (at(Tok::FocusOpen)) {
      std::size_t line = tok.line, col = tok.column;
      expect(Tok::FocusOpen);
      if (++type_foci_ > 1) {
        throw MultipleFociError(line, col, "more than one type focus");
      }
      Type inner = type();
      expect(Tok::FocusClose);
      return TyFocus{std::move(inner)};
    }
    fail("expected a type");
  }

  // --- patterns ---

  Pattern pattern() {
    const Token& tok = peek();
    if (accept(Tok::VarId)) return PVar{tok.text};
    expect(Tok::LParen);
    PCon p{expect(Tok::ConId).text, {}};
    while (continues() && (at(Tok::VarId) || at(Tok::LParen))) {
      p.args.push_back(pattern());
    }
    expect(Tok::RParen);
    return p;
  }

  // --- expressions ---

  bool starts_aexpr() const {
    return continues() &&
           (at(Tok::VarId) || at(Tok::ConId) || at(Tok::Int) ||
            at(Tok::String) || at(Tok::LParen) || at(Tok::FocusOpen));
  }

  Expr expr() {
    if (accept(Tok::KwLet)) {
      std::string name = expect(Tok::VarId).text;
      expect(Tok::Equals);
      Expr bound = expr();
      expect(Tok::KwIn);
      return Let{std::move(name), std::move(bound), expr()};
    }
    if (accept(Tok::Backslash)) {
      Pattern p = pattern();
      expect(Tok::Arrow);
      return Lam{std::move(p), expr()};
    }
    if (!starts_aexpr()) fail("expected an expression");
    Expr e = aexpr();
    while (starts_aexpr()) e = App{std::move(e), aexpr()};
    return e;
  }

  Expr aexpr() {
    const Token& tok = peek();
    if (accept(Tok::VarId)) return Var{tok.text};
    if (accept(Tok::ConId)) return Con{tok.text};
    if (accept(Tok::Int)) return LitInt{Integer::from_string(tok.text)};
    if (accept(Tok::String)) {
      return LitStr{tok.text.substr(1, tok.text.size() - 2)};
    }
    if (accept(Tok::LParen)) {
      Expr e = expr();
      expect(Tok::RParen);
      return e;
    }
    if (at(Tok::FocusOpen)) {
      std::size_t line = tok.line, col = tok.column;
      expect(Tok::FocusOpen);
      if (++expr_foci_ > 1) {
        throw MultipleFociError(line, col, "more than one expression focus");
      }
      Expr inner = expr();
      expect(Tok::FocusClose);
      return Focus{std::move(inner)};
    }
    fail("expected an expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t decl_start_ = 0;
  int expr_foci_ = 0;
  int type_foci_ = 0;
};

}  // namespace

Module parse(std::string_view source) {
  return Parser(lex(source)).module();
}

Expr parse_expr(std::string_view source) {
  return Parser(lex(source)).whole_expr();
}

Type parse_type(std::string_view source) {
  return Parser(lex(source)).whole_type();
}

}  // namespace strategem::minilang
