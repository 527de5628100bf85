#pragma once

// Hand-written, non-generic recursions over the AST. They share no code with
// the strategy library and serve as reference results.

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "strategem/minilang/ast.hpp"
#include "strategem/term_rep.hpp"

namespace oracle {

using namespace strategem::minilang;
using strategem::Integer;
using Names = std::set<std::string>;

template <class... Fs>
struct match : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
match(Fs...) -> match<Fs...>;

template <class V, class... Fs>
decltype(auto) on(const V& v, Fs... fs) {
  return std::visit(match{fs...}, static_cast<const typename V::variant&>(v));
}

// --- per-type node counts ------------------------------------------------

struct Counts {
  std::int64_t decls = 0, exprs = 0, types = 0, patterns = 0, ints = 0,
               strings = 0;
};

inline void count(const Type& t, Counts& c) {
  ++c.types;
  on(t,
     [&](const TyCon&) { ++c.strings; },
     [&](const TyVar&) { ++c.strings; },
     [&](const TyApp& a) { count(*a.fun, c); count(*a.arg, c); },
     [&](const TyFun& f) { count(*f.from, c); count(*f.to, c); },
     [&](const TyFocus& f) { count(*f.inner, c); });
}

inline void count(const Pattern& p, Counts& c) {
  ++c.patterns;
  ++c.strings;
  on(p, [](const PVar&) {},
     [&](const PCon& k) {
       for (const auto& a : k.args) count(a, c);
     });
}

inline void count(const Expr& e, Counts& c) {
  ++c.exprs;
  on(e,
     [&](const Var&) { ++c.strings; },
     [&](const Con&) { ++c.strings; },
     [&](const LitInt&) { ++c.ints; },
     [&](const LitStr&) { ++c.strings; },
     [&](const App& a) { count(*a.fun, c); count(*a.arg, c); },
     [&](const Lam& l) { count(l.param, c); count(*l.body, c); },
     [&](const Let& l) { ++c.strings; count(*l.bound, c); count(*l.body, c); },
     [&](const Focus& f) { count(*f.inner, c); });
}

inline void count(const Decl& d, Counts& c) {
  ++c.decls;
  ++c.strings;
  on(d,
     [&](const DataDecl& dd) {
       for (const auto& k : dd.constructors) {
         ++c.strings;
         for (const auto& t : k.fields) count(t, c);
       }
     },
     [&](const TypeSyn& ts) { count(ts.rhs, c); },
     [&](const FunBind& f) {
       for (const auto& p : f.params) count(p, c);
       count(f.body, c);
     });
}

inline Counts count(const Module& m) {
  Counts c;
  ++c.strings;
  for (const auto& d : m.decls) count(d, c);
  return c;
}

// --- integers in preorder ------------------------------------------------

inline void ints(const Expr& e, std::vector<Integer>& out) {
  on(e, [](const Var&) {}, [](const Con&) {},
     [&](const LitInt& i) { out.push_back(i.value); }, [](const LitStr&) {},
     [&](const App& a) { ints(*a.fun, out); ints(*a.arg, out); },
     [&](const Lam& l) { ints(*l.body, out); },
     [&](const Let& l) { ints(*l.bound, out); ints(*l.body, out); },
     [&](const Focus& f) { ints(*f.inner, out); });
}

inline std::vector<Integer> ints(const Module& m) {
  std::vector<Integer> out;
  for (const auto& d : m.decls) {
    on(d, [](const DataDecl&) {}, [](const TypeSyn&) {},
       [&](const FunBind& f) { ints(f.body, out); });
  }
  return out;
}

// --- type constructor names ----------------------------------------------

inline void type_names(const Type& t, Names& out) {
  on(t, [&](const TyCon& c) { out.insert(c.name); }, [](const TyVar&) {},
     [&](const TyApp& a) { type_names(*a.fun, out); type_names(*a.arg, out); },
     [&](const TyFun& f) { type_names(*f.from, out); type_names(*f.to, out); },
     [&](const TyFocus& f) { type_names(*f.inner, out); });
}

inline Names type_names(const Module& m) {
  Names out;
  for (const auto& d : m.decls) {
    on(d,
       [&](const DataDecl& dd) {
         out.insert(dd.name);
         for (const auto& k : dd.constructors) {
           for (const auto& t : k.fields) type_names(t, out);
         }
       },
       [&](const TypeSyn& ts) {
         out.insert(ts.name);
         type_names(ts.rhs, out);
       },
       [](const FunBind&) {});
  }
  return out;
}

// --- free variables (recursive let, module-level function names) ---------

inline void binders(const Pattern& p, Names& out) {
  on(p, [&](const PVar& v) { out.insert(v.name); },
     [&](const PCon& k) {
       for (const auto& a : k.args) binders(a, out);
     });
}

inline Names minus(Names a, const Names& b) {
  for (const auto& n : b) a.erase(n);
  return a;
}

inline Names unite(Names a, const Names& b) {
  a.insert(b.begin(), b.end());
  return a;
}

inline Names free(const Expr& e) {
  return on(
      e, [](const Var& v) { return Names{v.name}; },
      [](const Con&) { return Names{}; }, [](const LitInt&) { return Names{}; },
      [](const LitStr&) { return Names{}; },
      [](const App& a) { return unite(free(*a.fun), free(*a.arg)); },
      [](const Lam& l) {
        Names bound;
        binders(l.param, bound);
        return minus(free(*l.body), bound);
      },
      [](const Let& l) {
        return minus(unite(free(*l.bound), free(*l.body)), Names{l.name});
      },
      [](const Focus& f) { return free(*f.inner); });
}

inline Names free(const Decl& d) {
  return on(
      d, [](const DataDecl&) { return Names{}; },
      [](const TypeSyn&) { return Names{}; },
      [](const FunBind& f) {
        Names bound;
        for (const auto& p : f.params) binders(p, bound);
        return minus(free(f.body), bound);
      });
}

inline Names free(const Module& m) {
  Names frees, defined;
  for (const auto& d : m.decls) {
    frees = unite(frees, free(d));
    on(d, [](const DataDecl&) {}, [](const TypeSyn&) {},
       [&](const FunBind& f) { defined.insert(f.name); });
  }
  return minus(frees, defined);
}

// --- generic preorder enumeration ----------------------------------------

inline void preorder(const strategem::rep::Term& t,
                     std::vector<strategem::rep::Term>& out) {
  out.push_back(t);
  for (const auto& k : t.children()) preorder(k, out);
}

inline std::vector<strategem::rep::Term> preorder(const strategem::rep::Term& t) {
  std::vector<strategem::rep::Term> out;
  preorder(t, out);
  return out;
}

}  // namespace oracle
