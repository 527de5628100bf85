#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace strategem::cli {

enum class Format { Text, Structured };

struct Command {
  std::string name;
  std::optional<std::string> type_name;
  Format format = Format::Text;
  std::string input;
};

const std::vector<std::string>& command_names();

// Exit status: 0 on success, 1 when an analysis or guard fails, 2 on a
// syntax error, an unreadable input or bad usage.
int run(const Command& cmd, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace strategem::cli
