#pragma once

// Universal representation of typed terms.
//
// Any value of a derivable datatype can be viewed as a `rep::Term`: a typed,
// immutable handle that decomposes into its constructor's children and can be
// rebuilt from replacement children. Strategy combinators are implemented on
// top of this view; user code normally works with concrete values and never
// touches a Term directly.
//
// Derivable datatypes:
//   * atoms: bool, Integer, std::string (leaves, zero children)
//   * std::vector<T> (as a cons list), std::pair<A, B>, std::optional<T>
//   * classes publicly derived from std::variant<C1, ..., Cn> whose
//     alternatives are aggregates: each alternative is a constructor
//   * plain aggregates: a single-constructor datatype
// Fields of type Box<T> are children of type T.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <atomic>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <typeindex>
#include <utility>
#include <vector>

#include "strategem/box.hpp"
#include "strategem/detail/reflect.hpp"
#include "strategem/integer.hpp"

namespace strategem::rep {

class Term;
class TypeInfo;

using TypeInfoRef = const TypeInfo& (*)();

class TermRepError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A traversal tried to rebuild a node with the wrong number of children.
class ArityMismatch : public TermRepError {
 public:
  using TermRepError::TermRepError;
};

// A traversal tried to rebuild a node with a child of the wrong type.
class ChildTypeMismatch : public TermRepError {
 public:
  using TermRepError::TermRepError;
};

class DuplicateRegistration : public TermRepError {
 public:
  using TermRepError::TermRepError;
};

class RegistryFrozen : public TermRepError {
 public:
  using TermRepError::TermRepError;
};

class TypeTag {
 public:
  explicit TypeTag(const TypeInfo& info) : info_(&info) {}

  std::string_view name() const;
  std::type_index identity() const;
  const TypeInfo& info() const { return *info_; }

  friend bool operator==(const TypeTag& a, const TypeTag& b) {
    return a.identity() == b.identity();
  }

 private:
  const TypeInfo* info_;
};

struct ConstructorTag {
  std::string name;
  std::size_t index = 0;
  std::size_t arity = 0;
  TypeTag owner;

  friend bool operator==(const ConstructorTag& a, const ConstructorTag& b) {
    return a.owner == b.owner && a.index == b.index;
  }
};

struct ConstructorInfo {
  std::string name;
  std::vector<TypeInfoRef> fields;
};

enum class TypeKind { Atom, Algebraic };

// Runtime image of a derived datatype: shape plus the decompose/rebuild
// operations. Produced by `type_info<T>()`; the Registry keeps copies.
class TypeInfo {
 public:
  std::string name;
  std::type_index identity = typeid(void);
  TypeKind kind = TypeKind::Algebraic;
  std::vector<ConstructorInfo> constructors;

  std::size_t (*constructor_index)(const void* value) = nullptr;
  std::vector<Term> (*decompose)(const Term& t) = nullptr;
  // Children are already checked against the constructor's field types.
  Term (*compose)(const Term& original, std::size_t ctor,
                  std::span<const Term> kids) = nullptr;
  bool (*atom_equal)(const void* a, const void* b) = nullptr;
  std::string (*atom_text)(const void* value) = nullptr;
};

class Term {
 public:
  template <class T>
  static Term of(T value);

  // Views an existing shared value without copying it.
  template <class T>
  static Term share(std::shared_ptr<const T> value);

  TypeTag type() const { return TypeTag(*info_); }
  const TypeInfo& info() const { return *info_; }
  ConstructorTag constructor() const;
  std::vector<Term> children() const { return info_->decompose(*this); }
  std::size_t arity() const;

  // Same constructor, new children. Throws ArityMismatch or
  // ChildTypeMismatch.
  Term rebuild(std::span<const Term> kids) const;

  template <class T>
  const T* get_if() const;

  template <class T>
  std::shared_ptr<const T> shared() const;

  const void* raw() const { return value_.get(); }

  // Atom value rendering, or the constructor name for algebraic nodes.
  std::string label() const;

 private:
  Term(const TypeInfo* info, std::shared_ptr<const void> value)
      : info_(info), value_(std::move(value)) {}

  const TypeInfo* info_;
  std::shared_ptr<const void> value_;
};

TypeTag type_of(const Term& t);
std::vector<Term> children(const Term& t);
Term rebuild(const Term& t, std::span<const Term> kids);

// Equal constructors and pairwise structurally equal children; atoms compare
// by value.
bool structurally_equal(const Term& a, const Term& b);

// Debug rendering, e.g. `App(Var("f"), Var("x"))`.
std::string show(const Term& t);

// ---------------------------------------------------------------------------
// Derivation

template <class T>
struct is_vector : std::false_type {};
template <class T, class A>
struct is_vector<std::vector<T, A>> : std::true_type {};

template <class T>
struct is_pair : std::false_type {};
template <class A, class B>
struct is_pair<std::pair<A, B>> : std::true_type {};

template <class T>
struct is_optional : std::false_type {};
template <class T>
struct is_optional<std::optional<T>> : std::true_type {};

template <class T>
concept Atom = std::is_same_v<T, bool> || std::is_same_v<T, Integer> ||
               std::is_same_v<T, std::string>;

// Shallow check; field types are verified when the instance is derived.
template <class T>
concept Datatype = std::is_same_v<T, std::remove_cvref_t<T>> &&
                   (Atom<T> || is_vector<T>::value || is_pair<T>::value ||
                    is_optional<T>::value || detail::VariantDerived<T> ||
                    detail::ReflectableAggregate<T>);

template <Datatype T>
const TypeInfo& type_info();

template <Datatype T>
TypeTag type_tag() {
  return TypeTag(type_info<T>());
}

template <class T>
std::optional<T> cast(const Term& t) {
  if (const T* p = t.get_if<T>()) return *p;
  return std::nullopt;
}

namespace derive {

template <class F>
TypeInfoRef field_ref() {
  return &type_info<unbox_t<F>>;
}

template <class F>
Term field_term(const F& field) {
  if constexpr (is_box<F>::value) {
    return Term::share(field.shared());
  } else {
    return Term::of(field);
  }
}

template <class F>
F field_value(const Term& kid) {
  if constexpr (is_box<F>::value) {
    return F(kid.template shared<unbox_t<F>>());
  } else {
    return *kid.template get_if<F>();
  }
}

template <class A>
std::vector<TypeInfoRef> aggregate_fields() {
  constexpr std::size_t n = detail::field_count<A>();
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::vector<TypeInfoRef>{field_ref<detail::field_type_t<A, I>>()...};
  }(std::make_index_sequence<n>{});
}

template <class A>
void aggregate_children(const A& value, std::vector<Term>& out) {
  std::apply([&](const auto&... f) { (out.push_back(field_term(f)), ...); },
             detail::tie_fields(value));
}

template <class A>
A aggregate_from(std::span<const Term> kids) {
  constexpr std::size_t n = detail::field_count<A>();
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return A{field_value<detail::field_type_t<A, I>>(kids[I])...};
  }(std::make_index_sequence<n>{});
}

std::string paren_if_spaced(std::string_view name);

template <class T>
std::string datatype_name() {
  if constexpr (std::is_same_v<T, bool>) {
    return "Bool";
  } else if constexpr (std::is_same_v<T, Integer>) {
    return "Int";
  } else if constexpr (std::is_same_v<T, std::string>) {
    return "String";
  } else if constexpr (is_vector<T>::value) {
    return "[" + type_info<typename T::value_type>().name + "]";
  } else if constexpr (is_pair<T>::value) {
    return "(" + type_info<typename T::first_type>().name + "," +
           type_info<typename T::second_type>().name + ")";
  } else if constexpr (is_optional<T>::value) {
    return "Maybe " + paren_if_spaced(type_info<typename T::value_type>().name);
  } else {
    return detail::short_type_name<T>();
  }
}

template <class T>
std::string atom_text(const void* p) {
  const T& v = *static_cast<const T*>(p);
  if constexpr (std::is_same_v<T, bool>) {
    return v ? "True" : "False";
  } else if constexpr (std::is_same_v<T, Integer>) {
    return v.to_string();
  } else {
    return "\"" + v + "\"";
  }
}

template <class T>
TypeInfo make_atom() {
  TypeInfo info;
  info.name = datatype_name<T>();
  info.identity = typeid(T);
  info.kind = TypeKind::Atom;
  info.constructor_index = [](const void*) -> std::size_t { return 0; };
  info.decompose = [](const Term&) { return std::vector<Term>{}; };
  info.compose = [](const Term& original, std::size_t,
                    std::span<const Term>) { return original; };
  info.atom_equal = [](const void* a, const void* b) {
    return *static_cast<const T*>(a) == *static_cast<const T*>(b);
  };
  info.atom_text = &atom_text<T>;
  return info;
}

template <class T>
TypeInfo make_vector() {
  using E = typename T::value_type;
  TypeInfo info;
  info.name = datatype_name<T>();
  info.identity = typeid(T);
  info.constructors = {{"[]", {}}, {":", {field_ref<E>(), field_ref<T>()}}};
  info.constructor_index = [](const void* p) -> std::size_t {
    return static_cast<const T*>(p)->empty() ? 0 : 1;
  };
  info.decompose = [](const Term& t) {
    const T& v = *t.get_if<T>();
    if (v.empty()) return std::vector<Term>{};
    return std::vector<Term>{Term::of(v.front()),
                             Term::of(T(v.begin() + 1, v.end()))};
  };
  info.compose = [](const Term& original, std::size_t ctor,
                    std::span<const Term> kids) {
    if (ctor == 0) return original;
    const T& tail = *kids[1].get_if<T>();
    T out;
    out.reserve(tail.size() + 1);
    out.push_back(*kids[0].get_if<E>());
    out.insert(out.end(), tail.begin(), tail.end());
    return Term::of(std::move(out));
  };
  return info;
}

template <class T>
TypeInfo make_pair() {
  using A = typename T::first_type;
  using B = typename T::second_type;
  TypeInfo info;
  info.name = datatype_name<T>();
  info.identity = typeid(T);
  info.constructors = {{"(,)", {field_ref<A>(), field_ref<B>()}}};
  info.constructor_index = [](const void*) -> std::size_t { return 0; };
  info.decompose = [](const Term& t) {
    const T& v = *t.get_if<T>();
    return std::vector<Term>{Term::of(v.first), Term::of(v.second)};
  };
  info.compose = [](const Term&, std::size_t, std::span<const Term> kids) {
    return Term::of(T(*kids[0].get_if<A>(), *kids[1].get_if<B>()));
  };
  return info;
}

template <class T>
TypeInfo make_optional() {
  using E = typename T::value_type;
  TypeInfo info;
  info.name = datatype_name<T>();
  info.identity = typeid(T);
  info.constructors = {{"Nothing", {}}, {"Just", {field_ref<E>()}}};
  info.constructor_index = [](const void* p) -> std::size_t {
    return static_cast<const T*>(p)->has_value() ? 1 : 0;
  };
  info.decompose = [](const Term& t) {
    const T& v = *t.get_if<T>();
    if (!v) return std::vector<Term>{};
    return std::vector<Term>{Term::of(*v)};
  };
  info.compose = [](const Term& original, std::size_t ctor,
                    std::span<const Term> kids) {
    if (ctor == 0) return original;
    return Term::of(T(*kids[0].get_if<E>()));
  };
  return info;
}

template <class T, class Alt>
Term compose_alternative(std::span<const Term> kids) {
  return Term::of(T(aggregate_from<Alt>(kids)));
}

template <class T, class... Alts>
TypeInfo make_sum(std::variant<Alts...>*) {
  TypeInfo info;
  info.name = datatype_name<T>();
  info.identity = typeid(T);
  (info.constructors.push_back(
       {detail::short_type_name<Alts>(), aggregate_fields<Alts>()}),
   ...);
  info.constructor_index = [](const void* p) -> std::size_t {
    return detail::as_variant(*static_cast<const T*>(p)).index();
  };
  info.decompose = [](const Term& t) {
    std::vector<Term> out;
    std::visit([&](const auto& alt) { aggregate_children(alt, out); },
               detail::as_variant(*t.get_if<T>()));
    return out;
  };
  info.compose = [](const Term&, std::size_t ctor, std::span<const Term> kids) {
    using Fn = Term (*)(std::span<const Term>);
    static constexpr Fn table[] = {&compose_alternative<T, Alts>...};
    return table[ctor](kids);
  };
  return info;
}

template <class T>
TypeInfo make_product() {
  TypeInfo info;
  info.name = datatype_name<T>();
  info.identity = typeid(T);
  info.constructors = {{info.name, aggregate_fields<T>()}};
  info.constructor_index = [](const void*) -> std::size_t { return 0; };
  info.decompose = [](const Term& t) {
    std::vector<Term> out;
    aggregate_children(*t.get_if<T>(), out);
    return out;
  };
  info.compose = [](const Term&, std::size_t, std::span<const Term> kids) {
    return Term::of(aggregate_from<T>(kids));
  };
  return info;
}

}  // namespace derive

template <Datatype T>
const TypeInfo& type_info() {
  static const TypeInfo info = [] {
    if constexpr (Atom<T>) {
      return derive::make_atom<T>();
    } else if constexpr (is_vector<T>::value) {
      return derive::make_vector<T>();
    } else if constexpr (is_pair<T>::value) {
      return derive::make_pair<T>();
    } else if constexpr (is_optional<T>::value) {
      return derive::make_optional<T>();
    } else if constexpr (detail::VariantDerived<T>) {
      return derive::make_sum<T>(
          static_cast<detail::variant_base_t<T>*>(nullptr));
    } else {
      return derive::make_product<T>();
    }
  }();
  return info;
}

template <class T>
Term Term::of(T value) {
  static_assert(Datatype<T>, "not a derivable datatype");
  return Term(&type_info<T>(), std::make_shared<const T>(std::move(value)));
}

template <class T>
Term Term::share(std::shared_ptr<const T> value) {
  static_assert(Datatype<T>, "not a derivable datatype");
  return Term(&type_info<T>(), std::move(value));
}

template <class T>
const T* Term::get_if() const {
  if (info_->identity != std::type_index(typeid(T))) return nullptr;
  return static_cast<const T*>(value_.get());
}

template <class T>
std::shared_ptr<const T> Term::shared() const {
  if (info_->identity != std::type_index(typeid(T))) return nullptr;
  return std::static_pointer_cast<const T>(value_);
}

// ---------------------------------------------------------------------------
// Registry

// Process-wide catalogue of datatypes, populated at startup and then frozen.
// After freeze() lookups take no lock.
class Registry {
 public:
  static Registry& global();

  Registry() = default;
  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;

  // Registers one datatype. Re-registering the same shape is a no-op; a
  // different shape (or a different type under the same name) throws
  // DuplicateRegistration.
  void register_datatype(const TypeInfo& info);

  // Registers T and every datatype reachable through its fields.
  template <Datatype T>
  void enroll() {
    enroll_closure(type_info<T>());
  }

  void freeze();
  bool frozen() const { return frozen_.load(std::memory_order_acquire); }

  const TypeInfo* find(std::string_view name) const;
  bool contains(const TypeTag& tag) const;
  std::vector<std::string> names() const;

  // Field types referenced by registered datatypes but not registered
  // themselves, as "Owner.Con -> Field". Empty when the closure holds.
  std::vector<std::string> closure_violations() const;

 private:
  void enroll_closure(const TypeInfo& info);
  void check_writable() const;

  mutable std::mutex mutex_;
  std::atomic<bool> frozen_{false};
  std::map<std::string, TypeInfo, std::less<>> by_name_;
};

bool same_shape(const TypeInfo& a, const TypeInfo& b);

}  // namespace strategem::rep
