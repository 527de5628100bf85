#include "strategem/analyses.hpp"

#include <variant>

namespace strategem::analyses {

using minilang::DataDecl;
using minilang::Focus;
using minilang::FunBind;
using minilang::Lam;
using minilang::Let;
using minilang::PCon;
using minilang::PVar;
using minilang::Pattern;
using minilang::TyCon;
using minilang::TyFocus;
using minilang::TypeSyn;
using minilang::Var;

std::string_view kind_name(FailureKind kind) {
  switch (kind) {
    case FailureKind::NoFocus: return "NoFocus";
    case FailureKind::NoSuchAlias: return "NoSuchAlias";
    case FailureKind::GuardFailed: return "GuardFailed";
  }
  return "AnalysisError";
}

AnalysisError::AnalysisError(FailureKind kind, const std::string& detail)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + detail),
      kind_(kind) {}

namespace {

template <class Alt, class V>
const Alt* alt(const V& v) {
  return std::get_if<Alt>(&static_cast<const typename V::variant&>(v));
}

void pattern_vars(const Pattern& p, NameSet& out) {
  if (const auto* v = alt<PVar>(p)) {
    out.insert(v->name);
  } else if (const auto* c = alt<PCon>(p)) {
    for (const auto& a : c->args) pattern_vars(a, out);
  }
}

NameSet unite(NameSet a, const NameSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

}  // namespace

// --- increment -------------------------------------------------------------

TP<Identity> increment() {
  return topdown(adhoc_tp(identity_tp<Identity>(),
                          [](const Integer& i) { return i + Integer(1); }));
}

// --- type constructor names ------------------------------------------------

NameSet dec_types(const Decl& d) {
  if (const auto* dd = alt<DataDecl>(d)) return {dd->name};
  if (const auto* ts = alt<TypeSyn>(d)) return {ts->name};
  return {};
}

NameSet ref_types(const Type& t) {
  if (const auto* c = alt<TyCon>(t)) return {c->name};
  return {};
}

TU<NameSet, Identity> any_types() {
  return adhoc_tu(adhoc_tu(build_tu<Identity>(NameSet{}), dec_types), ref_types);
}

NameSet all_types(const Module& m) {
  return apply_tu(crush(any_types(), set_monoid<std::string>()), m);
}

bool is_fresh_type(const Name& n, const Module& m) {
  return !all_types(m).contains(n);
}

std::optional<Name> type_con(const Decl& d) {
  if (const auto* ts = alt<TypeSyn>(d)) return ts->name;
  return std::nullopt;
}

std::optional<Name> data_con(const Decl& d) {
  if (const auto* dd = alt<DataDecl>(d)) return dd->name;
  return std::nullopt;
}

TU<Name, Partial> dec_con() {
  return choice_tu(adhoc_tu(fail_tu<Name, Partial>(), type_con),
                   adhoc_tu(fail_tu<Name, Partial>(), data_con));
}

// --- variables -------------------------------------------------------------

TU<NameSet, Identity> ref_vars() {
  return adhoc_tu(build_tu<Identity>(NameSet{}), [](const Expr& e) {
    if (const auto* v = alt<Var>(e)) return NameSet{v->name};
    return NameSet{};
  });
}

TU<NameSet, Identity> dec_vars() {
  auto in_expr = [](const Expr& e) {
    NameSet out;
    if (const auto* l = alt<Lam>(e)) pattern_vars(l->param, out);
    if (const auto* l = alt<Let>(e)) out.insert(l->name);
    return out;
  };
  auto in_decl = [](const Decl& d) {
    NameSet out;
    if (const auto* f = alt<FunBind>(d)) {
      for (const auto& p : f->params) pattern_vars(p, out);
    }
    return out;
  };
  auto in_module = [](const Module& m) {
    NameSet out;
    for (const auto& d : m.decls) {
      if (const auto* f = alt<FunBind>(d)) out.insert(f->name);
    }
    return out;
  };
  return adhoc_tu(
      adhoc_tu(adhoc_tu(build_tu<Identity>(NameSet{}), in_expr), in_decl),
      in_module);
}

TU<NameSet, Identity> free_vars_strategy() {
  return free_names(ref_vars(), dec_vars());
}

NameSet bound_at_focus(const Module& m) {
  EnvUpdate<NameSet, Partial> update = [](const NameSet& env) {
    return let_tu(msubst_tu(lift_partial(), dec_vars()), [env](const NameSet& d) {
      return build_tu<Partial>(unite(env, d));
    });
  };
  std::function<TU<NameSet, Partial>(const NameSet&)> action =
      [](const NameSet& env) {
        return adhoc_tu(fail_tu<NameSet, Partial>(),
                        [env](const Expr& e) -> std::optional<NameSet> {
                          if (alt<Focus>(e)) return env;
                          return std::nullopt;
                        });
      };
  auto found = apply_tu(selectenv<NameSet, NameSet, Partial>({}, update, action), m);
  if (!found) throw AnalysisError(FailureKind::NoFocus, "no expression focus");
  return *found;
}

// --- focus -----------------------------------------------------------------

TU<Expr, Partial> get_focus() {
  return adhoc_tu(fail_tu<Expr, Partial>(),
                  [](const Expr& e) -> std::optional<Expr> {
                    if (const auto* f = alt<Focus>(e)) return *f->inner;
                    return std::nullopt;
                  });
}

TU<Type, Partial> get_type_focus() {
  return adhoc_tu(fail_tu<Type, Partial>(),
                  [](const Type& t) -> std::optional<Type> {
                    if (const auto* f = alt<TyFocus>(t)) return *f->inner;
                    return std::nullopt;
                  });
}

Expr select_focus(const Module& m) {
  auto e = apply_tu(select(get_focus()), m);
  if (!e) throw AnalysisError(FailureKind::NoFocus, "no expression focus");
  return *e;
}

Type select_type_focus(const Module& m) {
  auto t = apply_tu(select(get_type_focus()), m);
  if (!t) throw AnalysisError(FailureKind::NoFocus, "no type focus");
  return *t;
}

Type get_alias(const Name& n, const Module& m) {
  auto rhs = adhoc_tu(fail_tu<Type, Partial>(),
                      [n](const Decl& d) -> std::optional<Type> {
                        const auto* ts = alt<TypeSyn>(d);
                        if (ts && ts->name == n) return ts->rhs;
                        return std::nullopt;
                      });
  auto t = apply_tu(select(rhs), m);
  if (!t) throw AnalysisError(FailureKind::NoSuchAlias, "no type synonym " + n);
  return *t;
}

Module replace_type_focus(const Type& replacement, const Module& m) {
  auto step = adhoc_tp(fail_tp<Partial>(),
                       [replacement](const Type& t) -> std::optional<Type> {
                         if (alt<TyFocus>(t)) return replacement;
                         return std::nullopt;
                       });
  auto out = apply_tp(once_td(step), m);
  if (!out) throw AnalysisError(FailureKind::NoFocus, "no type focus");
  return *out;
}

Module to_alias(const Name& n, const Module& m) {
  Type focused = select_type_focus(m);
  Type aliased = get_alias(n, m);
  if (!(focused == aliased)) {
    throw AnalysisError(FailureKind::GuardFailed,
                        "focused type differs from the right-hand side of " + n);
  }
  return replace_type_focus(TyCon{n}, m);
}

// --- renaming --------------------------------------------------------------

TP<FreshNames> de_bruijn_core() {
  auto fresh = [](const std::string&) {
    return FreshNames::bind(FreshNames::get(), [](std::string s) {
      return FreshNames::bind(FreshNames::put(s + "'"),
                              [s](Unit) { return FreshNames::pure(s); });
    });
  };
  return topdown(adhoc_tp(identity_tp<FreshNames>(), fresh));
}

TP<Partial> de_bruijn_strategy() {
  return local_state(std::string("1"), de_bruijn_core());
}

// --- generic container -----------------------------------------------------

Coder no_codes() { return Coder{}; }

std::optional<std::int64_t> get_code(const Coder& c, const rep::Term& t) {
  return apply_tu(c.lookup, t);
}

Coder set_code(const Coder& c, const rep::Term& x) {
  auto prev = c.lookup;
  auto code = c.counter;
  TU<std::int64_t, Partial> lookup([prev, code, x](const rep::Term& y) {
    if (rep::structurally_equal(x, y)) return std::optional<std::int64_t>(code);
    return prev.run(y);
  });
  return Coder{c.counter, std::move(lookup)};
}

std::pair<std::int64_t, Coder> next_code(const Coder& c) {
  return {c.counter + 1, Coder{c.counter + 1, c.lookup}};
}

std::pair<std::int64_t, Coder> encode(const Coder& c, const rep::Term& t) {
  if (auto known = get_code(c, t)) return {*known, c};
  auto [code, next] = next_code(c);
  return {code, set_code(next, t)};
}

std::int64_t count_decls(const Module& m) {
  return count_of_type(type_token<Decl>(), m);
}

}  // namespace strategem::analyses
