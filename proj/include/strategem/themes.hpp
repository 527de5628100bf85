#pragma once

// Traversal schemes built from the basic combinators only. None of them
// mentions a concrete datatype; type-specific behaviour comes in through the
// strategy arguments.

#include <set>
#include <string>
#include <utility>

#include "strategem/overloading.hpp"
#include "strategem/strategy.hpp"

namespace strategem {

using NameSet = std::set<std::string>;

// --- traversal -------------------------------------------------------------

template <EffectContext E>
TP<E> topdown(TP<E> s) {
  return seq_tp(s, all_tp(detail::lazy_tp<E>([s] { return topdown(s); })));
}

template <EffectContext E>
TP<E> bottomup(TP<E> s) {
  return seq_tp(all_tp(detail::lazy_tp<E>([s] { return bottomup(s); })), s);
}

// Succeeds at the first node, in pre-order, where `s` succeeds.
template <PartialEffect E>
TP<E> once_td(TP<E> s) {
  return choice_tp(s, one_tp(detail::lazy_tp<E>([s] { return once_td(s); })));
}

template <class R, PartialEffect E>
TU<R, E> once_td(TU<R, E> s) {
  return choice_tu(s,
                   one_tu(detail::lazy_tu<R, E>([s] { return once_td(s); })));
}

// Succeeds at the first node, in post-order, where `s` succeeds.
template <PartialEffect E>
TP<E> once_bu(TP<E> s) {
  return choice_tp(one_tp(detail::lazy_tp<E>([s] { return once_bu(s); })), s);
}

template <class R, PartialEffect E>
TU<R, E> once_bu(TU<R, E> s) {
  return choice_tu(
      one_tu(detail::lazy_tu<R, E>([s] { return once_bu(s); })), s);
}

// Applies `s` top-down but does not descend below nodes where it succeeded.
template <PartialEffect E>
TP<E> stop_td(TP<E> s) {
  return choice_tp(s, all_tp(detail::lazy_tp<E>([s] { return stop_td(s); })));
}

template <class R, PartialEffect E>
TU<R, E> stop_td(TU<R, E> s, MonoidSpec<R> monoid) {
  return choice_tu(s, all_tu(detail::lazy_tu<R, E>([s, monoid] {
                               return stop_td(s, monoid);
                             }),
                             monoid));
}

// --- fixpoints -------------------------------------------------------------

template <PartialEffect E>
TP<E> try_(TP<E> s) {
  return choice_tp(std::move(s), identity_tp<E>());
}

template <PartialEffect E>
TP<E> repeat_(TP<E> s) {
  return try_(seq_tp(s, detail::lazy_tp<E>([s] { return repeat_(s); })));
}

// Normalizes bottom-up: afterwards `s` fails on every node. Does not
// terminate if `s` is not normalizing.
template <PartialEffect E>
TP<E> innermost(TP<E> s) {
  auto again = detail::lazy_tp<E>([s] { return innermost(s); });
  return seq_tp(all_tp(again), try_(seq_tp(s, again)));
}

// --- reduction and selection -----------------------------------------------

// Deep reduction over the whole term: the node's result first, then the
// children's left to right, combined with the monoid.
template <class R, EffectContext E>
TU<R, E> crush(TU<R, E> s, MonoidSpec<R> monoid) {
  return let_tu(s, [s, monoid](const R& here) {
    auto below = all_tu(
        detail::lazy_tu<R, E>([s, monoid] { return crush(s, monoid); }),
        monoid);
    return let_tu(below, [here, monoid](const R& rest) {
      return build_tu<E>(monoid.append(here, rest));
    });
  });
}

// The result of `s` at the first node, in pre-order, where it succeeds.
template <class R, PartialEffect E>
TU<R, E> select(TU<R, E> s) {
  return choice_tu(s, one_tu(detail::lazy_tu<R, E>([s] { return select(s); })));
}

// Given the current environment, yields a strategy that computes the
// environment for the children of the node it is applied to.
template <class Env, EffectContext E>
using EnvUpdate = std::function<TU<Env, E>(const Env&)>;

// select with an environment handed down: at each node the action runs with
// the current environment; if it fails, the environment is updated for that
// node and selection continues into the children.
template <class R, class Env, PartialEffect E>
TU<R, E> selectenv(Env env, EnvUpdate<Env, E> update,
                   std::function<TU<R, E>(const Env&)> action) {
  auto descend = let_tu(update(env), [update, action](const Env& next) {
    return one_tu(selectenv<R, Env, E>(next, update, action));
  });
  return choice_tu(action(env), std::move(descend));
}

// Names referenced at or below a node minus the names declared at it.
template <EffectContext E>
TU<NameSet, E> free_names(TU<NameSet, E> refs, TU<NameSet, E> decs) {
  return let_tu(refs, [refs, decs](const NameSet& here) {
    auto below = all_tu(detail::lazy_tu<NameSet, E>(
                            [refs, decs] { return free_names(refs, decs); }),
                        set_monoid<std::string>());
    return let_tu(below, [here, decs](const NameSet& frees) {
      return let_tu(decs, [here, frees](const NameSet& declared) {
        NameSet out;
        for (const auto& n : here) {
          if (!declared.contains(n)) out.insert(n);
        }
        for (const auto& n : frees) {
          if (!declared.contains(n)) out.insert(n);
        }
        return build_tu<E>(std::move(out));
      });
    });
  });
}

// --- effects ---------------------------------------------------------------

// Runs the strategy's state layer from `initial` on every application; the
// result type shows no state.
template <class S, class Inner>
TP<Inner> local_state(S initial, TP<StateT<S, Inner>> s) {
  return msubst_tp(unlift_state<Inner>(std::move(initial)), std::move(s));
}

template <class S, class Inner, class R>
TU<R, Inner> local_state(S initial, TU<R, StateT<S, Inner>> s) {
  return msubst_tu(unlift_state<Inner>(std::move(initial)), std::move(s));
}

// --- meta scheme -----------------------------------------------------------

// traverse_meta(o, t, s) = o(s, t(traverse_meta(o, t, s))) for a binary
// combinator o and a unary combinator t from the kind-neutral set.
template <class O, class U, class S>
S traverse_meta(O o, U t, S s) {
  auto again = detail::lazy_like(s, [o, t, s] { return traverse_meta(o, t, s); });
  return o(s, t(std::move(again)));
}

// Full top-down traversal: topdown for TP, crush for Unifying.
template <class S>
S totaltd_s(S s) {
  return traverse_meta(seq_s, all_s, std::move(s));
}

}  // namespace strategem
