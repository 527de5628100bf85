#include "strategem/term_rep.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace strategem {

Integer Integer::from_string(std::string_view text) {
  std::string s(text);
  std::size_t digits = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == digits ||
      !std::all_of(s.begin() + digits, s.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal integer: " + s);
  }
  return Integer(mpz_class(s, 10));
}

}  // namespace strategem

namespace strategem::rep {

std::string_view TypeTag::name() const { return info_->name; }
std::type_index TypeTag::identity() const { return info_->identity; }

ConstructorTag Term::constructor() const {
  std::size_t index = info_->constructor_index(raw());
  if (info_->kind == TypeKind::Atom) {
    return ConstructorTag{info_->atom_text(raw()), 0, 0, type()};
  }
  const ConstructorInfo& c = info_->constructors.at(index);
  return ConstructorTag{c.name, index, c.fields.size(), type()};
}

std::size_t Term::arity() const {
  if (info_->kind == TypeKind::Atom) return 0;
  return info_->constructors.at(info_->constructor_index(raw())).fields.size();
}

Term Term::rebuild(std::span<const Term> kids) const {
  std::size_t index = info_->constructor_index(raw());
  if (info_->kind == TypeKind::Atom) {
    if (!kids.empty()) {
      throw ArityMismatch("atom " + label() + " has no children, got " +
                          std::to_string(kids.size()));
    }
    return *this;
  }
  const ConstructorInfo& c = info_->constructors.at(index);
  if (kids.size() != c.fields.size()) {
    throw ArityMismatch(info_->name + "." + c.name + " expects " +
                        std::to_string(c.fields.size()) + " children, got " +
                        std::to_string(kids.size()));
  }
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const TypeInfo& want = c.fields[i]();
    if (kids[i].info().identity != want.identity) {
      throw ChildTypeMismatch(info_->name + "." + c.name + " field " +
                              std::to_string(i) + " expects " + want.name +
                              ", got " + kids[i].info().name);
    }
  }
  return info_->compose(*this, index, kids);
}

std::string Term::label() const {
  if (info_->kind == TypeKind::Atom) return info_->atom_text(raw());
  return info_->constructors.at(info_->constructor_index(raw())).name;
}

TypeTag type_of(const Term& t) { return t.type(); }
std::vector<Term> children(const Term& t) { return t.children(); }
Term rebuild(const Term& t, std::span<const Term> kids) {
  return t.rebuild(kids);
}

bool structurally_equal(const Term& a, const Term& b) {
  if (a.type() != b.type()) return false;
  if (a.raw() == b.raw()) return true;
  const TypeInfo& info = a.info();
  if (info.kind == TypeKind::Atom) return info.atom_equal(a.raw(), b.raw());
  if (info.constructor_index(a.raw()) != info.constructor_index(b.raw())) {
    return false;
  }
  auto ka = a.children();
  auto kb = b.children();
  return std::equal(ka.begin(), ka.end(), kb.begin(), kb.end(),
                    structurally_equal);
}

std::string show(const Term& t) {
  if (t.info().kind == TypeKind::Atom) return t.label();
  auto kids = t.children();
  std::string out = t.label();
  if (kids.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) out += ", ";
    out += show(kids[i]);
  }
  return out + ")";
}

namespace derive {

std::string paren_if_spaced(std::string_view name) {
  if (name.find(' ') == std::string_view::npos) return std::string(name);
  return "(" + std::string(name) + ")";
}

}  // namespace derive

bool same_shape(const TypeInfo& a, const TypeInfo& b) {
  if (a.name != b.name || a.identity != b.identity || a.kind != b.kind ||
      a.constructors.size() != b.constructors.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.constructors.size(); ++i) {
    const auto& ca = a.constructors[i];
    const auto& cb = b.constructors[i];
    if (ca.name != cb.name || ca.fields.size() != cb.fields.size()) {
      return false;
    }
    for (std::size_t j = 0; j < ca.fields.size(); ++j) {
      if (ca.fields[j]().identity != cb.fields[j]().identity) return false;
    }
  }
  return true;
}

Registry& Registry::global() {
  static Registry registry;
  return registry;
}

void Registry::check_writable() const {
  if (frozen()) throw RegistryFrozen("registry is frozen");
}

void Registry::register_datatype(const TypeInfo& info) {
  std::lock_guard lock(mutex_);
  check_writable();
  auto it = by_name_.find(info.name);
  if (it != by_name_.end()) {
    if (!same_shape(it->second, info)) {
      throw DuplicateRegistration("datatype " + info.name +
                                  " already registered with a different shape");
    }
    return;
  }
  by_name_.emplace(info.name, info);
}

void Registry::enroll_closure(const TypeInfo& root) {
  std::vector<const TypeInfo*> pending{&root};
  std::set<std::type_index> seen;
  while (!pending.empty()) {
    const TypeInfo* info = pending.back();
    pending.pop_back();
    if (!seen.insert(info->identity).second) continue;
    register_datatype(*info);
    for (const auto& c : info->constructors) {
      for (TypeInfoRef field : c.fields) pending.push_back(&field());
    }
  }
}

void Registry::freeze() {
  std::lock_guard lock(mutex_);
  frozen_.store(true, std::memory_order_release);
}

const TypeInfo* Registry::find(std::string_view name) const {
  auto lookup = [&]() -> const TypeInfo* {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &it->second;
  };
  if (frozen()) return lookup();
  std::lock_guard lock(mutex_);
  return lookup();
}

bool Registry::contains(const TypeTag& tag) const {
  const TypeInfo* info = find(tag.name());
  return info != nullptr && info->identity == tag.identity();
}

std::vector<std::string> Registry::names() const {
  std::unique_lock lock(mutex_, std::defer_lock);
  if (!frozen()) lock.lock();
  std::vector<std::string> out;
  for (const auto& [name, info] : by_name_) out.push_back(name);
  return out;
}

std::vector<std::string> Registry::closure_violations() const {
  std::unique_lock lock(mutex_, std::defer_lock);
  if (!frozen()) lock.lock();
  std::vector<std::string> out;
  for (const auto& [name, info] : by_name_) {
    for (const auto& c : info.constructors) {
      for (TypeInfoRef field : c.fields) {
        const TypeInfo& f = field();
        auto it = by_name_.find(f.name);
        if (it == by_name_.end() || it->second.identity != f.identity) {
          out.push_back(name + "." + c.name + " -> " + f.name);
        }
      }
    }
  }
  return out;
}

}  // namespace strategem::rep
