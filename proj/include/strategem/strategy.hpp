#pragma once

// Strategy types and the basic combinators.
//
// TP<E> is a type-preserving strategy: for a value of any datatype it yields
// a computation (in effect context E) of a value of the same type.
// TU<R, E> is a type-unifying strategy: whatever the input type, it yields a
// computation of an R. Strategies are immutable first-class values; the
// combinators below build new ones, and apply_tp / apply_tu run them.

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "strategem/effects.hpp"
#include "strategem/term_rep.hpp"

namespace strategem {

template <EffectContext E>
class TP {
 public:
  using effect = E;
  using Fn = std::function<Comp<E, rep::Term>(const rep::Term&)>;

  explicit TP(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

  // Term-level application; apply_tp is the typed front door.
  Comp<E, rep::Term> run(const rep::Term& t) const { return (*fn_)(t); }

 private:
  std::shared_ptr<const Fn> fn_;
};

template <class R, EffectContext E>
class TU {
 public:
  using effect = E;
  using result_type = R;
  using Fn = std::function<Comp<E, R>(const rep::Term&)>;

  explicit TU(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

  Comp<E, R> run(const rep::Term& t) const { return (*fn_)(t); }

 private:
  std::shared_ptr<const Fn> fn_;
};

// A strategy parameterized by a value of a unifying type.
template <class R, class S>
using ParamStrategy = std::function<S(const R&)>;

class TypePreservationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

template <class F>
struct callable_traits : callable_traits<decltype(&F::operator())> {};
template <class C, class Ret, class A>
struct callable_traits<Ret (C::*)(A) const> {
  using arg = std::remove_cvref_t<A>;
};
template <class C, class Ret, class A>
struct callable_traits<Ret (C::*)(A)> {
  using arg = std::remove_cvref_t<A>;
};
template <class Ret, class A>
struct callable_traits<Ret (*)(A)> {
  using arg = std::remove_cvref_t<A>;
};
template <class Ret, class A>
struct callable_traits<Ret(A)> {
  using arg = std::remove_cvref_t<A>;
};

template <class F>
using arg_t = typename callable_traits<std::remove_cvref_t<F>>::arg;

template <class T>
T expect(const rep::Term& t) {
  if (const T* v = t.get_if<T>()) return *v;
  throw TypePreservationError("strategy changed type " +
                              std::string(rep::type_tag<T>().name()) + " to " +
                              std::string(t.type().name()));
}

// Defers building a strategy until it is applied, so that recursive
// definitions such as topdown can refer to themselves.
template <EffectContext E, class Make>
TP<E> lazy_tp(Make make) {
  return TP<E>([make](const rep::Term& t) { return make().run(t); });
}

template <class R, EffectContext E, class Make>
TU<R, E> lazy_tu(Make make) {
  return TU<R, E>([make](const rep::Term& t) { return make().run(t); });
}

template <EffectContext E>
Comp<E, std::vector<rep::Term>> map_children(
    const TP<E>& s, std::shared_ptr<const std::vector<rep::Term>> kids,
    std::size_t i, std::vector<rep::Term> done) {
  if (i == kids->size()) return E::pure(std::move(done));
  return E::bind(s.run((*kids)[i]), [s, kids, i, done](rep::Term k) {
    auto next = done;
    next.push_back(std::move(k));
    return map_children<E>(s, kids, i + 1, std::move(next));
  });
}

template <class R, EffectContext E>
Comp<E, R> fold_children(const TU<R, E>& s, const MonoidSpec<R>& monoid,
                         std::shared_ptr<const std::vector<rep::Term>> kids,
                         std::size_t i, R acc) {
  if (i == kids->size()) return E::pure(std::move(acc));
  return E::bind(s.run((*kids)[i]), [s, monoid, kids, i, acc](R r) {
    return fold_children<R, E>(s, monoid, kids, i + 1, monoid.append(acc, r));
  });
}

template <EffectContext E>
Comp<E, rep::Term> one_child_tp(
    const TP<E>& s, const rep::Term& node,
    std::shared_ptr<const std::vector<rep::Term>> kids, std::size_t i) {
  if (i == kids->size()) return E::template zero<rep::Term>();
  auto here = E::bind(s.run((*kids)[i]), [node, kids, i](rep::Term k) {
    std::vector<rep::Term> replaced(*kids);
    replaced[i] = std::move(k);
    return E::pure(node.rebuild(replaced));
  });
  return E::template plus<rep::Term>(std::move(here), [s, node, kids, i] {
    return one_child_tp<E>(s, node, kids, i + 1);
  });
}

template <class R, EffectContext E>
Comp<E, R> one_child_tu(const TU<R, E>& s,
                        std::shared_ptr<const std::vector<rep::Term>> kids,
                        std::size_t i) {
  if (i == kids->size()) return E::template zero<R>();
  return E::template plus<R>(s.run((*kids)[i]), [s, kids, i] {
    return one_child_tu<R, E>(s, kids, i + 1);
  });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Application

template <EffectContext E, rep::Datatype T>
Comp<E, T> apply_tp(const TP<E>& s, const T& value) {
  return fmap<E, rep::Term>(s.run(rep::Term::of(value)),
                            [](const rep::Term& r) { return detail::expect<T>(r); });
}

template <EffectContext E>
Comp<E, rep::Term> apply_tp(const TP<E>& s, const rep::Term& t) {
  return s.run(t);
}

template <class R, EffectContext E, rep::Datatype T>
Comp<E, R> apply_tu(const TU<R, E>& s, const T& value) {
  return s.run(rep::Term::of(value));
}

template <class R, EffectContext E>
Comp<E, R> apply_tu(const TU<R, E>& s, const rep::Term& t) {
  return s.run(t);
}

// ---------------------------------------------------------------------------
// Nullary combinators

template <EffectContext E>
TP<E> identity_tp() {
  return TP<E>([](const rep::Term& t) { return E::pure(t); });
}

// Ignores the input and yields `value`.
template <EffectContext E, class R>
TU<R, E> build_tu(R value) {
  return TU<R, E>([value](const rep::Term&) { return E::template pure<R>(value); });
}

template <PartialEffect E>
TP<E> fail_tp() {
  return TP<E>([](const rep::Term&) { return E::template zero<rep::Term>(); });
}

template <class R, PartialEffect E>
TU<R, E> fail_tu() {
  return TU<R, E>([](const rep::Term&) { return E::template zero<R>(); });
}

// ---------------------------------------------------------------------------
// Type-specific customization: behave like `f` on its argument type, like `s`
// on every other type. `f` takes `const T&` and returns Comp<E, T>.

template <EffectContext E, class F>
TP<E> adhoc_tp(TP<E> s, F f) {
  using T = detail::arg_t<F>;
  static_assert(rep::Datatype<T>, "adhoc_tp: argument type is not a datatype");
  static_assert(std::is_same_v<std::invoke_result_t<F&, const T&>, Comp<E, T>>,
                "adhoc_tp: step must return Comp<E, T>");
  return TP<E>([s = std::move(s), f = std::move(f)](
                   const rep::Term& t) -> Comp<E, rep::Term> {
    if (const T* v = t.get_if<T>()) {
      return fmap<E, T>(f(*v), [](T r) { return rep::Term::of(std::move(r)); });
    }
    return s.run(t);
  });
}

// `f` takes `const T&` and returns Comp<E, R>.
template <class R, EffectContext E, class F>
TU<R, E> adhoc_tu(TU<R, E> s, F f) {
  using T = detail::arg_t<F>;
  static_assert(rep::Datatype<T>, "adhoc_tu: argument type is not a datatype");
  static_assert(std::is_same_v<std::invoke_result_t<F&, const T&>, Comp<E, R>>,
                "adhoc_tu: step must return Comp<E, R>");
  return TU<R, E>([s = std::move(s), f = std::move(f)](
                      const rep::Term& t) -> Comp<E, R> {
    if (const T* v = t.get_if<T>()) return f(*v);
    return s.run(t);
  });
}

// ---------------------------------------------------------------------------
// Sequential composition

template <EffectContext E>
TP<E> seq_tp(TP<E> first, TP<E> second) {
  return TP<E>([first, second](const rep::Term& t) {
    return E::bind(first.run(t),
                   [second](const rep::Term& u) { return second.run(u); });
  });
}

template <class R, EffectContext E>
TU<R, E> seq_tu(TP<E> first, TU<R, E> second) {
  return TU<R, E>([first, second](const rep::Term& t) {
    return E::bind(first.run(t),
                   [second](const rep::Term& u) { return second.run(u); });
  });
}

// The value computed by `first` instantiates `second`, which then runs on the
// same input.
template <class R, EffectContext E>
TP<E> let_tp(TU<R, E> first,
             std::type_identity_t<ParamStrategy<R, TP<E>>> second) {
  return TP<E>([first, second](const rep::Term& t) {
    return E::bind(first.run(t),
                   [second, t](const R& r) { return second(r).run(t); });
  });
}

// `second` maps an R to a TU<R2, E>.
template <class R, EffectContext E, class P>
auto let_tu(TU<R, E> first, P second) {
  using S = std::invoke_result_t<P&, const R&>;
  using R2 = typename S::result_type;
  static_assert(std::is_same_v<S, TU<R2, E>>,
                "let_tu: parameterized strategy must be TU<R2, E>");
  return TU<R2, E>([first, second](const rep::Term& t) {
    return E::bind(first.run(t),
                   [second, t](const R& r) { return second(r).run(t); });
  });
}

// ---------------------------------------------------------------------------
// Choice: the first strategy's result if it succeeds, otherwise the second
// strategy on the original input.

template <PartialEffect E>
TP<E> choice_tp(TP<E> first, TP<E> second) {
  return TP<E>([first, second](const rep::Term& t) {
    return E::template plus<rep::Term>(first.run(t),
                                       [second, t] { return second.run(t); });
  });
}

template <class R, PartialEffect E>
TU<R, E> choice_tu(TU<R, E> first, TU<R, E> second) {
  return TU<R, E>([first, second](const rep::Term& t) {
    return E::template plus<R>(first.run(t),
                               [second, t] { return second.run(t); });
  });
}

// ---------------------------------------------------------------------------
// One-layer traversal

// Applies `s` to every immediate child, left to right, and rebuilds with the
// outermost constructor. Fails as soon as one child fails.
template <EffectContext E>
TP<E> all_tp(TP<E> s) {
  return TP<E>([s](const rep::Term& t) -> Comp<E, rep::Term> {
    auto kids = std::make_shared<const std::vector<rep::Term>>(t.children());
    if (kids->empty()) return E::pure(t);
    return E::bind(detail::map_children<E>(s, kids, 0, {}),
                   [t](const std::vector<rep::Term>& ks) {
                     return E::pure(t.rebuild(ks));
                   });
  });
}

// Folds the children's results left to right, starting from the neutral
// element.
template <class R, EffectContext E>
TU<R, E> all_tu(TU<R, E> s, MonoidSpec<R> monoid) {
  return TU<R, E>([s, monoid](const rep::Term& t) {
    auto kids = std::make_shared<const std::vector<rep::Term>>(t.children());
    return detail::fold_children<R, E>(s, monoid, kids, 0, monoid.neutral);
  });
}

// Tries `s` on the children left to right and replaces only the first child
// on which it succeeds. Fails on leaves.
template <PartialEffect E>
TP<E> one_tp(TP<E> s) {
  return TP<E>([s](const rep::Term& t) {
    auto kids = std::make_shared<const std::vector<rep::Term>>(t.children());
    return detail::one_child_tp<E>(s, t, kids, 0);
  });
}

template <class R, PartialEffect E>
TU<R, E> one_tu(TU<R, E> s) {
  return TU<R, E>([s](const rep::Term& t) {
    auto kids = std::make_shared<const std::vector<rep::Term>>(t.children());
    return detail::one_child_tu<R, E>(s, kids, 0);
  });
}

// ---------------------------------------------------------------------------
// Effect substitution

template <EffectMorphism M>
TP<typename M::target> msubst_tp(M m2m, TP<typename M::source> s) {
  return TP<typename M::target>([m2m, s](const rep::Term& t) {
    return m2m.template map<rep::Term>(s.run(t));
  });
}

template <EffectMorphism M, class R>
TU<R, typename M::target> msubst_tu(M m2m, TU<R, typename M::source> s) {
  return TU<R, typename M::target>([m2m, s](const rep::Term& t) {
    return m2m.template map<R>(s.run(t));
  });
}

}  // namespace strategem
