#pragma once

// Abstract syntax of the mini-language. Every node type is a plain aggregate
// or a variant of aggregates, so term_rep derives its generic view directly.

#include <string>
#include <variant>
#include <vector>

#include "strategem/box.hpp"
#include "strategem/integer.hpp"
#include "strategem/term_rep.hpp"

namespace strategem::minilang {

using Name = std::string;

// --- types -----------------------------------------------------------------

struct Type;

struct TyCon {
  Name name;
  bool operator==(const TyCon&) const = default;
};
struct TyVar {
  Name name;
  bool operator==(const TyVar&) const = default;
};
struct TyApp {
  Box<Type> fun;
  Box<Type> arg;
  bool operator==(const TyApp&) const = default;
};
struct TyFun {
  Box<Type> from;
  Box<Type> to;
  bool operator==(const TyFun&) const = default;
};
struct TyFocus {
  Box<Type> inner;
  bool operator==(const TyFocus&) const = default;
};

struct Type : std::variant<TyCon, TyVar, TyApp, TyFun, TyFocus> {
  using variant::variant;
  static constexpr std::string_view term_name = "Type";
  bool operator==(const Type&) const = default;
};

// --- patterns --------------------------------------------------------------

struct Pattern;

struct PVar {
  Name name;
  bool operator==(const PVar&) const = default;
};
struct PCon {
  Name name;
  std::vector<Pattern> args;
  bool operator==(const PCon&) const;
};

struct Pattern : std::variant<PVar, PCon> {
  using variant::variant;
  static constexpr std::string_view term_name = "Pattern";
  bool operator==(const Pattern&) const = default;
};

inline bool PCon::operator==(const PCon& o) const {
  return name == o.name && args == o.args;
}

// --- expressions -----------------------------------------------------------

struct Expr;

struct Var {
  Name name;
  bool operator==(const Var&) const = default;
};
struct Con {
  Name name;
  bool operator==(const Con&) const = default;
};
struct LitInt {
  Integer value;
  bool operator==(const LitInt&) const = default;
};
struct LitStr {
  std::string value;
  bool operator==(const LitStr&) const = default;
};
struct App {
  Box<Expr> fun;
  Box<Expr> arg;
  bool operator==(const App&) const = default;
};
struct Lam {
  Pattern param;
  Box<Expr> body;
  bool operator==(const Lam&) const = default;
};
struct Let {
  Name name;
  Box<Expr> bound;
  Box<Expr> body;
  bool operator==(const Let&) const = default;
};
struct Focus {
  Box<Expr> inner;
  bool operator==(const Focus&) const = default;
};

struct Expr : std::variant<Var, Con, LitInt, LitStr, App, Lam, Let, Focus> {
  using variant::variant;
  static constexpr std::string_view term_name = "Expr";
  bool operator==(const Expr&) const = default;
};

// --- declarations ----------------------------------------------------------

struct ConDecl {
  Name name;
  std::vector<Type> fields;
  bool operator==(const ConDecl&) const = default;
};

struct DataDecl {
  Name name;
  std::vector<ConDecl> constructors;
  bool operator==(const DataDecl&) const = default;
};
struct TypeSyn {
  Name name;
  Type rhs;
  bool operator==(const TypeSyn&) const = default;
};
struct FunBind {
  Name name;
  std::vector<Pattern> params;
  Expr body;
  bool operator==(const FunBind&) const = default;
};

struct Decl : std::variant<DataDecl, TypeSyn, FunBind> {
  using variant::variant;
  static constexpr std::string_view term_name = "Decl";
  bool operator==(const Decl&) const = default;
};

struct Module {
  Name name;
  std::vector<Decl> decls;
  bool operator==(const Module&) const = default;
};

// Registers Module and every node type reachable from it.
void register_minilang(rep::Registry& registry);

}  // namespace strategem::minilang
