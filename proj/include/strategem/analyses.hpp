#pragma once

// Analyses and transformations over the mini-language, each written as a
// strategy (the worker) behind a plain function (the keyhole).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "strategem/minilang/ast.hpp"
#include "strategem/strategy.hpp"
#include "strategem/themes.hpp"

namespace strategem::analyses {

using minilang::Decl;
using minilang::Expr;
using minilang::Module;
using minilang::Name;
using minilang::Type;

enum class FailureKind { NoFocus, NoSuchAlias, GuardFailed };

std::string_view kind_name(FailureKind kind);

class AnalysisError : public std::runtime_error {
 public:
  AnalysisError(FailureKind kind, const std::string& detail);
  FailureKind kind() const { return kind_; }

 private:
  FailureKind kind_;
};

// --- increment -------------------------------------------------------------

TP<Identity> increment();

template <rep::Datatype T>
T inc_ints(const T& t) {
  return apply_tp(increment(), t);
}

// --- type constructor names ------------------------------------------------

// Declaration sites: heads of data and synonym declarations.
NameSet dec_types(const Decl& d);
// Use sites: type constructors.
NameSet ref_types(const Type& t);

TU<NameSet, Identity> any_types();

NameSet all_types(const Module& m);
bool is_fresh_type(const Name& n, const Module& m);

// Partial steps on the same type merged by choice.
std::optional<Name> type_con(const Decl& d);
std::optional<Name> data_con(const Decl& d);
TU<Name, Partial> dec_con();

// --- variables -------------------------------------------------------------

TU<NameSet, Identity> ref_vars();
TU<NameSet, Identity> dec_vars();
TU<NameSet, Identity> free_vars_strategy();

template <rep::Datatype T>
NameSet free_vars(const T& t) {
  return apply_tu(free_vars_strategy(), t);
}

// Variables in scope at the expression focus.
NameSet bound_at_focus(const Module& m);

// --- focus -----------------------------------------------------------------

TU<Expr, Partial> get_focus();
TU<Type, Partial> get_type_focus();

Expr select_focus(const Module& m);
Type select_type_focus(const Module& m);
Type get_alias(const Name& n, const Module& m);
Module replace_type_focus(const Type& replacement, const Module& m);

// Replaces the focused type by the synonym `n`, provided `n` is declared as
// exactly that type.
Module to_alias(const Name& n, const Module& m);

// --- renaming with a hidden counter ----------------------------------------

using FreshNames = PartialState<std::string>;

TP<FreshNames> de_bruijn_core();
TP<Partial> de_bruijn_strategy();

template <rep::Datatype T>
T de_bruijn(const T& t) {
  return *apply_tp(de_bruijn_strategy(), t);
}

// --- generic container -----------------------------------------------------

struct Coder {
  std::int64_t counter = 0;
  TU<std::int64_t, Partial> lookup = fail_tu<std::int64_t, Partial>();
};

Coder no_codes();
std::optional<std::int64_t> get_code(const Coder& c, const rep::Term& t);
// Maps `t` to the coder's current counter.
Coder set_code(const Coder& c, const rep::Term& t);
std::pair<std::int64_t, Coder> next_code(const Coder& c);
std::pair<std::int64_t, Coder> encode(const Coder& c, const rep::Term& t);

template <rep::Datatype T>
std::optional<std::int64_t> get_code(const Coder& c, const T& t) {
  return apply_tu(c.lookup, t);
}

template <rep::Datatype T>
Coder set_code(const Coder& c, const T& x) {
  auto prev = c.lookup;
  auto code = c.counter;
  auto lookup = adhoc_tu(prev, [prev, code, x](const T& y) {
    if (y == x) return std::optional<std::int64_t>(code);
    return apply_tu(prev, y);
  });
  return Coder{c.counter, std::move(lookup)};
}

template <rep::Datatype T>
std::pair<std::int64_t, Coder> encode(const Coder& c, const T& t) {
  if (auto known = get_code(c, t)) return {*known, c};
  auto [code, next] = next_code(c);
  return {code, set_code(next, t)};
}

// --- type arguments --------------------------------------------------------

template <class T>
using TypeToken = Unit (*)(const T&);

template <class T>
TypeToken<T> type_token() {
  return [](const T&) { return Unit{}; };
}

template <class T>
TU<std::int64_t, Identity> type_tick(TypeToken<T>) {
  return adhoc_tu(build_tu<Identity>(std::int64_t{0}),
                  [](const T&) { return std::int64_t{1}; });
}

template <class T, rep::Datatype U>
std::int64_t count_of_type(TypeToken<T> token, const U& t) {
  return apply_tu(crush(type_tick(token), sum_monoid<std::int64_t>()), t);
}

std::int64_t count_decls(const Module& m);

}  // namespace strategem::analyses
