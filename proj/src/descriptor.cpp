#include "strategem/descriptor.hpp"

#include <sstream>

namespace strategem::rep {
namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Splits on whitespace outside brackets; unwraps `( ... )` groups that are
// not tuples.
std::vector<std::string> split_fields(std::string_view s, std::size_t line) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    if (current.empty()) return;
    if (current.front() == '(' && current.back() == ')') {
      int d = 0;
      bool tuple = false;
      for (std::size_t i = 1; i + 1 < current.size(); ++i) {
        char c = current[i];
        if (c == '(' || c == '[') ++d;
        if (c == ')' || c == ']') --d;
        if (c == ',' && d == 0) tuple = true;
      }
      if (!tuple) current = current.substr(1, current.size() - 2);
    }
    out.push_back(current);
    current.clear();
  };
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw DescriptorError(line, "unbalanced brackets");
    if ((c == ' ' || c == '\t') && depth == 0) {
      flush();
    } else {
      current += c;
    }
  }
  if (depth != 0) throw DescriptorError(line, "unbalanced brackets");
  flush();
  return out;
}

}  // namespace

std::vector<DatatypeShape> parse_descriptor(std::string_view text) {
  std::vector<DatatypeShape> shapes;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s.starts_with("--")) continue;
    std::string head;
    std::string rest;
    if (auto sep = s.find(" : "); sep != std::string::npos) {
      head = trim(std::string_view(s).substr(0, sep));
      rest = trim(std::string_view(s).substr(sep + 3));
    } else if (s.ends_with(" :")) {
      head = trim(std::string_view(s).substr(0, s.size() - 2));
    } else {
      throw DescriptorError(line, "expected `TypeName.ConName : FieldType*`");
    }
    auto dot = head.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == head.size()) {
      throw DescriptorError(line, "constructor must be written TypeName.ConName");
    }
    std::string type = head.substr(0, dot);
    ConstructorShape con{head.substr(dot + 1), split_fields(rest, line)};
    if (shapes.empty() || shapes.back().name != type) {
      for (const auto& existing : shapes) {
        if (existing.name == type) {
          throw DescriptorError(line, "constructors of " + type +
                                          " must be contiguous");
        }
      }
      shapes.push_back({type, {}});
    }
    shapes.back().constructors.push_back(std::move(con));
  }
  return shapes;
}

DatatypeShape shape_of(const TypeInfo& info) {
  DatatypeShape shape{info.name, {}};
  for (const auto& c : info.constructors) {
    ConstructorShape con{c.name, {}};
    for (TypeInfoRef f : c.fields) con.fields.push_back(f().name);
    shape.constructors.push_back(std::move(con));
  }
  return shape;
}

std::string render_descriptor(const TypeInfo& info) {
  std::string out;
  for (const auto& c : info.constructors) {
    out += info.name + "." + c.name + " :";
    for (TypeInfoRef f : c.fields) {
      out += " " + derive::paren_if_spaced(f().name);
    }
    out += "\n";
  }
  return out;
}

std::string render_descriptor(const Registry& registry) {
  std::string out;
  for (const auto& name : registry.names()) {
    out += render_descriptor(*registry.find(name));
  }
  return out;
}

void register_descriptor(Registry& registry, std::string_view text) {
  for (const auto& shape : parse_descriptor(text)) {
    const TypeInfo* info = registry.find(shape.name);
    if (info == nullptr) {
      throw DescriptorError(0, "datatype " + shape.name +
                                   " has no derived instance");
    }
    if (shape_of(*info) != shape) {
      throw DuplicateRegistration("datatype " + shape.name +
                                  " already registered with a different shape");
    }
  }
}

}  // namespace strategem::rep
