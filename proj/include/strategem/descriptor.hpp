#pragma once

// Textual datatype descriptors, one line per constructor:
//
//   TypeName.ConName : FieldType*
//
// Field types are separated by whitespace; a field type whose name contains
// a space is written in parentheses, e.g. `Expr.Opt : (Maybe Int)`. Blank
// lines and lines starting with `--` are ignored.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strategem/term_rep.hpp"

namespace strategem::rep {

class DescriptorError : public TermRepError {
 public:
  DescriptorError(std::size_t line, const std::string& message)
      : TermRepError("descriptor line " + std::to_string(line) + ": " +
                     message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ConstructorShape {
  std::string name;
  std::vector<std::string> fields;
  bool operator==(const ConstructorShape&) const = default;
};

struct DatatypeShape {
  std::string name;
  std::vector<ConstructorShape> constructors;
  bool operator==(const DatatypeShape&) const = default;
};

std::vector<DatatypeShape> parse_descriptor(std::string_view text);

DatatypeShape shape_of(const TypeInfo& info);

// Descriptor lines for one datatype; atoms produce no lines.
std::string render_descriptor(const TypeInfo& info);

// Descriptor for every algebraic datatype in the registry, sorted by name.
std::string render_descriptor(const Registry& registry);

// Checks each described shape against the registry. A described datatype
// must already be registered (derived) with exactly that shape; a different
// shape throws DuplicateRegistration, an unknown name throws
// DescriptorError.
void register_descriptor(Registry& registry, std::string_view text);

}  // namespace strategem::rep
