#include "strategem/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "strategem/analyses.hpp"
#include "strategem/minilang/parser.hpp"
#include "strategem/minilang/pretty.hpp"

namespace strategem::cli {
namespace {

using nlohmann::json;
namespace ml = strategem::minilang;
namespace an = strategem::analyses;

// An analysis result: either a block of text (a module or a term), a set of
// names, a count or a truth value.
struct Result {
  enum class Kind { Text, Names, Count, Flag };
  Kind kind = Kind::Text;
  std::string text;
  NameSet names;
  std::int64_t count = 0;
  bool flag = false;

  static Result of_text(std::string t) {
    Result r;
    r.kind = Kind::Text;
    r.text = std::move(t);
    return r;
  }
  static Result of_names(NameSet n) {
    Result r;
    r.kind = Kind::Names;
    r.names = std::move(n);
    return r;
  }
  static Result of_count(std::int64_t n) {
    Result r;
    r.kind = Kind::Count;
    r.count = n;
    return r;
  }
  static Result of_flag(bool b) {
    Result r;
    r.kind = Kind::Flag;
    r.flag = b;
    return r;
  }
};

Result evaluate(const Command& cmd, const ml::Module& m) {
  const std::string& c = cmd.name;
  if (c == "inc-ints") return Result::of_text(ml::pretty(an::inc_ints(m)));
  if (c == "collect-types") return Result::of_names(an::all_types(m));
  if (c == "fresh-type") return Result::of_flag(an::is_fresh_type(*cmd.type_name, m));
  if (c == "free-vars") return Result::of_names(an::free_vars(m));
  if (c == "count-decls") return Result::of_count(an::count_decls(m));
  if (c == "debruijn") return Result::of_text(ml::pretty(an::de_bruijn(m)));
  if (c == "to-alias") return Result::of_text(ml::pretty(an::to_alias(*cmd.type_name, m)));
  // select-focus: the expression focus if there is one, else the type focus.
  try {
    return Result::of_text(ml::pretty(an::select_focus(m)) + "\n");
  } catch (const an::AnalysisError&) {
    return Result::of_text(ml::pretty(an::select_type_focus(m)) + "\n");
  }
}

void emit(const Command& cmd, const Result& r, std::ostream& out) {
  if (cmd.format == Format::Structured) {
    json doc;
    doc["command"] = cmd.name;
    doc["input"] = cmd.input;
    switch (r.kind) {
      case Result::Kind::Text: doc["result"] = r.text; break;
      case Result::Kind::Names: doc["result"] = r.names; break;
      case Result::Kind::Count: doc["result"] = r.count; break;
      case Result::Kind::Flag: doc["result"] = r.flag; break;
    }
    out << doc.dump(2) << "\n";
    return;
  }
  switch (r.kind) {
    case Result::Kind::Text: out << r.text; break;
    case Result::Kind::Names:
      for (const auto& n : r.names) out << n << "\n";
      break;
    case Result::Kind::Count: out << r.count << "\n"; break;
    case Result::Kind::Flag: out << (r.flag ? "true" : "false") << "\n"; break;
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "inc-ints", "collect-types", "fresh-type", "free-vars",
      "count-decls", "debruijn", "to-alias", "select-focus"};
  return names;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  if ((cmd.name == "fresh-type" || cmd.name == "to-alias") && !cmd.type_name) {
    err << "strategem: " << cmd.name << " requires --name\n";
    return 2;
  }
  std::ifstream in(cmd.input, std::ios::binary);
  if (!in) {
    err << "strategem: cannot read " << cmd.input << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  ml::Module m;
  try {
    m = ml::parse(buf.str());
  } catch (const ml::SyntaxError& e) {
    err << cmd.input << ":" << e.line() << ":" << e.column() << ": "
        << e.message() << "\n";
    return 2;
  }

  try {
    emit(cmd, evaluate(cmd, m), out);
  } catch (const an::AnalysisError& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strategic traversals over .ml0 modules", "strategem"};
  Command cmd;
  std::string format = "text";
  std::string type_name;
  app.add_option("command", cmd.name, "Command to run")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--name", type_name, "Type name for fresh-type and to-alias");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("file", cmd.input, "Input .ml0 file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (app.count("--name") > 0) cmd.type_name = type_name;
  cmd.format = format == "structured" ? Format::Structured : Format::Text;
  return run(cmd, out, err);
}

}  // namespace strategem::cli
