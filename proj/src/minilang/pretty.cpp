#include "strategem/minilang/pretty.hpp"

#include <type_traits>
#include <variant>

namespace strategem::minilang {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

enum class Prec { Top, App, Atom };

std::string type_at(const Type& t, Prec p) {
  const auto& v = static_cast<const Type::variant&>(t);
  return std::visit(
      overloaded{
          [](const TyCon& c) { return c.name; },
          [](const TyVar& c) { return c.name; },
          [p](const TyApp& a) {
            std::string s = type_at(*a.fun, Prec::App) + " " +
                            type_at(*a.arg, Prec::Atom);
            return p == Prec::Atom ? "(" + s + ")" : s;
          },
          [p](const TyFun& f) {
            std::string s = type_at(*f.from, Prec::App) + " -> " +
                            type_at(*f.to, Prec::Top);
            return p == Prec::Top ? s : "(" + s + ")";
          },
          [](const TyFocus& f) { return "<< " + type_at(*f.inner, Prec::Top) + " >>"; },
      },
      v);
}

std::string pattern_text(const Pattern& p) {
  const auto& v = static_cast<const Pattern::variant&>(p);
  return std::visit(overloaded{
                        [](const PVar& x) { return x.name; },
                        [](const PCon& c) {
                          std::string s = "(" + c.name;
                          for (const auto& a : c.args) s += " " + pattern_text(a);
                          return s + ")";
                        },
                    },
                    v);
}

std::string expr_at(const Expr& e, Prec p) {
  const auto& v = static_cast<const Expr::variant&>(e);
  auto wrap = [p](std::string s, Prec needs) {
    return p > needs ? "(" + s + ")" : s;
  };
  return std::visit(
      overloaded{
          [](const Var& x) { return x.name; },
          [](const Con& c) { return c.name; },
          [](const LitInt& i) { return i.value.to_string(); },
          [](const LitStr& s) { return "\"" + s.value + "\""; },
          [&](const App& a) {
            return wrap(expr_at(*a.fun, Prec::App) + " " + expr_at(*a.arg, Prec::Atom),
                        Prec::App);
          },
          [&](const Lam& l) {
            return wrap("\\" + pattern_text(l.param) + " -> " + expr_at(*l.body, Prec::Top),
                        Prec::Top);
          },
          [&](const Let& l) {
            return wrap("let " + l.name + " = " + expr_at(*l.bound, Prec::Top) +
                            " in " + expr_at(*l.body, Prec::Top),
                        Prec::Top);
          },
          [](const Focus& f) { return "<< " + expr_at(*f.inner, Prec::Top) + " >>"; },
      },
      v);
}

}  // namespace

std::string pretty(const Type& t) { return type_at(t, Prec::Top); }

std::string pretty(const Pattern& p) { return pattern_text(p); }

std::string pretty(const Expr& e) { return expr_at(e, Prec::Top); }

std::string pretty(const Decl& d) {
  const auto& v = static_cast<const Decl::variant&>(d);
  return std::visit(
      overloaded{
          [](const DataDecl& dd) {
            std::string s = "data " + dd.name + " =";
            for (std::size_t i = 0; i < dd.constructors.size(); ++i) {
              const auto& c = dd.constructors[i];
              if (i > 0) s += " |";
              s += " " + c.name;
              for (const auto& f : c.fields) s += " " + type_at(f, Prec::Atom);
            }
            return s;
          },
          [](const TypeSyn& ts) { return "type " + ts.name + " = " + pretty(ts.rhs); },
          [](const FunBind& fb) {
            std::string s = fb.name;
            for (const auto& p : fb.params) s += " " + pattern_text(p);
            return s + " = " + pretty(fb.body);
          },
      },
      v);
}

std::string pretty(const Module& m) {
  std::string out = "module " + m.name + " where\n";
  for (const auto& d : m.decls) out += pretty(d) + "\n";
  return out;
}

}  // namespace strategem::minilang
