#pragma once

// Kind-neutral combinators. Each of seq_s, all_s, one_s, choice_s and adhoc_s
// works on a type-preserving TP<E> and on a type-unifying strategy paired with
// its monoid (Unifying<R, E>), so a definition written against them commits
// to neither kind.
//
// For Unifying strategies, seq_s runs both strategies on the same input and
// appends the first result to the second.

#include <utility>

#include "strategem/strategy.hpp"

namespace strategem {

template <class R, EffectContext E>
struct Unifying {
  TU<R, E> strategy;
  MonoidSpec<R> monoid;
};

template <class R, EffectContext E>
Unifying<R, E> unifying(TU<R, E> strategy, MonoidSpec<R> monoid) {
  return {std::move(strategy), std::move(monoid)};
}

inline constexpr struct SeqS {
  template <EffectContext E>
  TP<E> operator()(TP<E> a, TP<E> b) const {
    return seq_tp(std::move(a), std::move(b));
  }

  template <class R, EffectContext E>
  Unifying<R, E> operator()(Unifying<R, E> a, Unifying<R, E> b) const {
    auto monoid = a.monoid;
    auto second = b.strategy;
    auto combined = let_tu(a.strategy, [second, monoid](const R& x) {
      return let_tu(second, [x, monoid](const R& y) {
        return build_tu<E>(monoid.append(x, y));
      });
    });
    return {std::move(combined), std::move(monoid)};
  }
} seq_s{};

inline constexpr struct ChoiceS {
  template <PartialEffect E>
  TP<E> operator()(TP<E> a, TP<E> b) const {
    return choice_tp(std::move(a), std::move(b));
  }

  template <class R, PartialEffect E>
  Unifying<R, E> operator()(Unifying<R, E> a, Unifying<R, E> b) const {
    return {choice_tu(std::move(a.strategy), std::move(b.strategy)), a.monoid};
  }
} choice_s{};

inline constexpr struct AllS {
  template <EffectContext E>
  TP<E> operator()(TP<E> s) const {
    return all_tp(std::move(s));
  }

  template <class R, EffectContext E>
  Unifying<R, E> operator()(Unifying<R, E> s) const {
    return {all_tu(std::move(s.strategy), s.monoid), s.monoid};
  }
} all_s{};

inline constexpr struct OneS {
  template <PartialEffect E>
  TP<E> operator()(TP<E> s) const {
    return one_tp(std::move(s));
  }

  template <class R, PartialEffect E>
  Unifying<R, E> operator()(Unifying<R, E> s) const {
    return {one_tu(std::move(s.strategy)), s.monoid};
  }
} one_s{};

inline constexpr struct AdhocS {
  template <EffectContext E, class F>
  TP<E> operator()(TP<E> s, F f) const {
    return adhoc_tp(std::move(s), std::move(f));
  }

  template <class R, EffectContext E, class F>
  Unifying<R, E> operator()(Unifying<R, E> s, F f) const {
    return {adhoc_tu(std::move(s.strategy), std::move(f)), s.monoid};
  }
} adhoc_s{};

namespace detail {

template <EffectContext E, class Make>
TP<E> lazy_like(const TP<E>&, Make make) {
  return lazy_tp<E>(std::move(make));
}

template <class R, EffectContext E, class Make>
Unifying<R, E> lazy_like(const Unifying<R, E>& like, Make make) {
  return {lazy_tu<R, E>([make] { return make().strategy; }), like.monoid};
}

}  // namespace detail

}  // namespace strategem
