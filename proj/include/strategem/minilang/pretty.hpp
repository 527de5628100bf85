#pragma once

#include <string>

#include "strategem/minilang/ast.hpp"

namespace strategem::minilang {

// Output reparses to the same tree: one declaration per line, parentheses
// only where precedence needs them, foci as `<< ... >>`.
std::string pretty(const Module& m);
std::string pretty(const Decl& d);
std::string pretty(const Expr& e);
std::string pretty(const Type& t);
std::string pretty(const Pattern& p);

}  // namespace strategem::minilang
