#include "strategem/minilang/ast.hpp"

namespace strategem::minilang {

void register_minilang(rep::Registry& registry) { registry.enroll<Module>(); }

}  // namespace strategem::minilang
