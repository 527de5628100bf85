#pragma once

// Effect contexts: the sequencing contract strategies are generic over.
//
// A context E provides a computation type `E::Comp<V>` with `pure` and
// `bind`. Partial contexts add `zero` (failure) and `plus` (committed
// first-success alternative). State contexts add `get`/`put` over one state
// layer, stacked on Identity or Partial.

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <type_traits>
#include <utility>
#include <vector>

namespace strategem {

struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
};

enum class EffectKind { Identity, Partial, State, PartialState };

struct Identity {
  static constexpr EffectKind kind = EffectKind::Identity;
  template <class V>
  using Comp = V;

  template <class V>
  static Comp<V> pure(V v) {
    return v;
  }

  template <class V, class F>
  static auto bind(V c, F&& f) {
    return std::invoke(std::forward<F>(f), std::move(c));
  }
};

struct Partial {
  static constexpr EffectKind kind = EffectKind::Partial;
  template <class V>
  using Comp = std::optional<V>;

  template <class V>
  static Comp<V> pure(V v) {
    return Comp<V>(std::move(v));
  }

  template <class V, class F>
  static auto bind(std::optional<V> c, F&& f) {
    using R = std::invoke_result_t<F, V>;
    if (!c) return R{};
    return std::invoke(std::forward<F>(f), std::move(*c));
  }

  template <class V>
  static Comp<V> zero() {
    return std::nullopt;
  }

  // `alternative` is a thunk; it runs only when `c` failed.
  template <class V, class Alt>
  static Comp<V> plus(Comp<V> c, Alt&& alternative) {
    if (c) return c;
    return std::invoke(std::forward<Alt>(alternative));
  }
};

// One state layer of type S over an inner context (Identity or Partial).
template <class S, class Inner = Identity>
struct StateT {
  static_assert(std::is_same_v<Inner, Identity> ||
                    std::is_same_v<Inner, Partial>,
                "state is supported over Identity or Partial only");

  static constexpr EffectKind kind = std::is_same_v<Inner, Identity>
                                         ? EffectKind::State
                                         : EffectKind::PartialState;
  using state_type = S;
  using inner = Inner;

  template <class V>
  using Comp =
      std::function<typename Inner::template Comp<std::pair<V, S>>(S)>;

  template <class V>
  static Comp<V> pure(V v) {
    return [v = std::move(v)](S s) {
      return Inner::pure(std::pair<V, S>(v, std::move(s)));
    };
  }

  template <class V, class F>
  static auto bind(Comp<V> c, F f) {
    using R = std::invoke_result_t<F, V>;
    return R([c = std::move(c), f = std::move(f)](S s) {
      return Inner::bind(c(std::move(s)), [&f](std::pair<V, S> p) {
        return f(std::move(p.first))(std::move(p.second));
      });
    });
  }

  static Comp<S> get() {
    return [](S s) { return Inner::pure(std::pair<S, S>(s, s)); };
  }

  static Comp<Unit> put(S next) {
    return [next = std::move(next)](S) {
      return Inner::pure(std::pair<Unit, S>(Unit{}, next));
    };
  }

  template <class V>
    requires std::is_same_v<Inner, Partial>
  static Comp<V> zero() {
    return [](S) -> typename Inner::template Comp<std::pair<V, S>> {
      return std::nullopt;
    };
  }

  template <class V, class Alt>
    requires std::is_same_v<Inner, Partial>
  static Comp<V> plus(Comp<V> c, Alt alternative) {
    return [c = std::move(c), alternative = std::move(alternative)](S s) {
      auto first = c(s);
      if (first) return first;
      return alternative()(std::move(s));
    };
  }
};

template <class S>
using State = StateT<S, Identity>;
template <class S>
using PartialState = StateT<S, Partial>;

template <class E>
concept EffectContext = requires {
  { E::kind } -> std::convertible_to<EffectKind>;
  typename E::template Comp<int>;
};

template <class E>
concept PartialEffect =
    EffectContext<E> && (E::kind == EffectKind::Partial ||
                         E::kind == EffectKind::PartialState);

template <class E>
concept StateEffect = EffectContext<E> && (E::kind == EffectKind::State ||
                                           E::kind == EffectKind::PartialState);

template <EffectContext E, class V>
using Comp = typename E::template Comp<V>;

template <EffectContext E, class V, class F>
auto fmap(Comp<E, V> c, F f) {
  using W = std::invoke_result_t<F, V>;
  return E::bind(std::move(c),
                 [f = std::move(f)](V v) { return E::template pure<W>(f(std::move(v))); });
}

template <class V>
V run_identity(V c) {
  return c;
}

template <class V>
std::optional<V> run_partial(std::optional<V> c) {
  return c;
}

// Threads `initial` through a State or PartialState computation; returns the
// final (value, state), wrapped in optional for PartialState.
template <class C, class S>
auto run_state(const C& c, S initial) {
  return c(std::move(initial));
}

// ---------------------------------------------------------------------------
// Monoids for type-unifying traversal.

template <class A>
struct MonoidSpec {
  A neutral;
  std::function<A(const A&, const A&)> append;
};

template <class T>
MonoidSpec<std::vector<T>> list_monoid() {
  return {{}, [](const std::vector<T>& a, const std::vector<T>& b) {
            std::vector<T> out(a);
            out.insert(out.end(), b.begin(), b.end());
            return out;
          }};
}

template <class T>
MonoidSpec<std::set<T>> set_monoid() {
  return {{}, [](const std::set<T>& a, const std::set<T>& b) {
            std::set<T> out(a);
            out.insert(b.begin(), b.end());
            return out;
          }};
}

template <class N = std::int64_t>
MonoidSpec<N> sum_monoid() {
  return {N(0), [](const N& a, const N& b) { return a + b; }};
}

// ---------------------------------------------------------------------------
// Effect morphisms: total maps from computations in `source` to computations
// in `target`, used by msubst. `map<V>` must preserve pure.

template <class M>
concept EffectMorphism = EffectContext<typename M::source> &&
                         EffectContext<typename M::target>;

template <EffectContext E>
struct IdentityMorphism {
  using source = E;
  using target = E;

  template <class V>
  Comp<E, V> map(Comp<E, V> c) const {
    return c;
  }
};

// Runs the state layer from `initial` and drops the final state.
template <class S, class Inner = Identity>
struct UnliftState {
  using source = StateT<S, Inner>;
  using target = Inner;
  S initial;

  template <class V>
  Comp<Inner, V> map(const Comp<source, V>& c) const {
    return Inner::bind(c(initial), [](std::pair<V, S> p) {
      return Inner::template pure<V>(std::move(p.first));
    });
  }
};

template <class Inner = Identity, class S>
UnliftState<S, Inner> unlift_state(S initial) {
  return UnliftState<S, Inner>{std::move(initial)};
}

// Identity to Partial: every computation succeeds.
struct LiftPartial {
  using source = Identity;
  using target = Partial;

  template <class V>
  std::optional<V> map(V c) const {
    return std::optional<V>(std::move(c));
  }
};

inline LiftPartial lift_partial() { return {}; }

// Partial to Identity for one result type: failure becomes `fallback`.
template <class R>
struct RecoverWith {
  using source = Partial;
  using target = Identity;
  R fallback;

  template <class V>
    requires std::is_same_v<V, R>
  V map(const std::optional<V>& c) const {
    return c ? *c : fallback;
  }
};

template <class R>
RecoverWith<R> recover_with(R fallback) {
  return RecoverWith<R>{std::move(fallback)};
}

}  // namespace strategem
