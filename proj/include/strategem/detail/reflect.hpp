#pragma once

// Compile-time reflection over aggregates and variant-derived sum types.
// This is what lets a plain C++ datatype take part in generic traversal
// without a hand-written descriptor.

#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <utility>
#include <variant>

namespace strategem::detail {

// Converts to anything except the aggregate being probed, so that
// `T{any, any, ...}` never resolves to T's copy constructor.
template <class Outer>
struct AnyField {
  template <class U>
    requires(!std::is_same_v<std::remove_cvref_t<U>, Outer>)
  operator U() const;  // never defined; unevaluated use only
};

template <class T, std::size_t... I>
constexpr bool brace_initializable(std::index_sequence<I...>) {
  return requires { T{(void(I), AnyField<T>{})...}; };
}

inline constexpr std::size_t kMaxFields = 8;

template <class T, std::size_t N = kMaxFields>
constexpr std::size_t field_count() {
  if constexpr (brace_initializable<T>(std::make_index_sequence<N>{})) {
    return N;
  } else {
    static_assert(N > 0, "type is not an aggregate with at most 8 fields");
    return field_count<T, N - 1>();
  }
}

template <class T>
auto tie_fields(T& v) {
  constexpr std::size_t n = field_count<std::remove_const_t<T>>();
  static_assert(n <= kMaxFields);
  if constexpr (n == 0) {
    return std::tie();
  } else if constexpr (n == 1) {
    auto& [a] = v;
    return std::tie(a);
  } else if constexpr (n == 2) {
    auto& [a, b] = v;
    return std::tie(a, b);
  } else if constexpr (n == 3) {
    auto& [a, b, c] = v;
    return std::tie(a, b, c);
  } else if constexpr (n == 4) {
    auto& [a, b, c, d] = v;
    return std::tie(a, b, c, d);
  } else if constexpr (n == 5) {
    auto& [a, b, c, d, e] = v;
    return std::tie(a, b, c, d, e);
  } else if constexpr (n == 6) {
    auto& [a, b, c, d, e, f] = v;
    return std::tie(a, b, c, d, e, f);
  } else if constexpr (n == 7) {
    auto& [a, b, c, d, e, f, g] = v;
    return std::tie(a, b, c, d, e, f, g);
  } else {
    auto& [a, b, c, d, e, f, g, h] = v;
    return std::tie(a, b, c, d, e, f, g, h);
  }
}

template <class T, std::size_t I>
using field_type_t = std::remove_cvref_t<
    std::tuple_element_t<I, decltype(tie_fields(std::declval<T&>()))>>;

// Sum types are classes publicly derived from std::variant.
template <class... Alts>
std::variant<Alts...> variant_base_of(const std::variant<Alts...>&);

template <class T>
struct is_std_variant : std::false_type {};
template <class... A>
struct is_std_variant<std::variant<A...>> : std::true_type {};

template <class T>
concept VariantDerived = std::is_class_v<T> && !is_std_variant<T>::value &&
                         requires(const T& t) { variant_base_of(t); };

template <VariantDerived T>
using variant_base_t = decltype(variant_base_of(std::declval<const T&>()));

template <VariantDerived T>
const variant_base_t<T>& as_variant(const T& v) {
  return v;
}

template <class T>
concept ReflectableAggregate =
    std::is_class_v<T> && std::is_aggregate_v<T> && !VariantDerived<T>;

// Unqualified type name as spelled by the compiler.
template <class T>
std::string_view raw_type_name() {
#if defined(__clang__)
  std::string_view sig = __PRETTY_FUNCTION__;
  constexpr std::string_view key = "T = ";
  auto start = sig.find(key) + key.size();
  auto end = sig.find_first_of("];", start);
#elif defined(__GNUC__)
  std::string_view sig = __PRETTY_FUNCTION__;
  constexpr std::string_view key = "T = ";
  auto start = sig.find(key) + key.size();
  auto end = sig.find_first_of("];", start);
#else
#error "unsupported compiler"
#endif
  return sig.substr(start, end - start);
}

template <class T>
concept HasTermName = requires {
  { T::term_name } -> std::convertible_to<std::string_view>;
};

// Constructor/datatype name: `static constexpr std::string_view term_name`
// overrides; otherwise the last component of the qualified name.
template <class T>
std::string short_type_name() {
  if constexpr (HasTermName<T>) {
    return std::string(T::term_name);
  } else {
    std::string_view full = raw_type_name<T>();
    auto angle = full.find('<');
    auto head = full.substr(0, angle);
    auto colon = head.rfind("::");
    if (colon != std::string_view::npos) {
      full.remove_prefix(colon + 2);
    }
    return std::string(full);
  }
}

}  // namespace strategem::detail
