#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "strategem/analyses.hpp"
#include "strategem/minilang/parser.hpp"
#include "strategem/minilang/pretty.hpp"
#include "support/corpus.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace strategem;
using namespace strategem::analyses;
using namespace strategem::minilang;
using rep::Term;

namespace {

const char* list_src = "module M where\ndata L = Nil | Cons Int L";

std::vector<Module> corpus_modules() {
  std::vector<Module> out;
  for (const auto& p : corpus::files()) out.push_back(parse(corpus::read(p)));
  return out;
}

template <class T>
std::int64_t preorder_count(const Term& t) {
  std::int64_t n = 0;
  for (const auto& k : oracle::preorder(t)) n += k.type() == rep::type_tag<T>() ? 1 : 0;
  return n;
}

std::vector<std::string> strings_of(const Term& t) {
  std::vector<std::string> out;
  for (const auto& k : oracle::preorder(t)) {
    if (const auto* s = k.get_if<std::string>()) out.push_back(*s);
  }
  return out;
}

FailureKind failure_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AnalysisError& e) {
    return e.kind();
  }
  FAIL("no analysis error");
  return FailureKind::NoFocus;
}

}  // namespace

TEST_CASE("inc_ints") {
  std::vector<std::pair<bool, Integer>> in{{true, Integer(1)}, {false, Integer(2)}};
  std::vector<std::pair<bool, Integer>> out{{true, Integer(2)}, {false, Integer(3)}};
  CHECK(inc_ints(in) == out);

  Module none = parse(list_src);
  CHECK(inc_ints(none) == none);
  CHECK(inc_ints(parse_expr("let a = 41 in a")) == parse_expr("let a = 42 in a"));
  CHECK(inc_ints(parse_expr("99999999999999999999")) == parse_expr("100000000000000000000"));
}

TEST_CASE("inc_ints keeps the skeleton") {
  gen::Gen g(3);
  for (int i = 0; i < 200; ++i) {
    Module m = g.module(4);
    auto before = oracle::preorder(Term::of(m));
    auto after = oracle::preorder(Term::of(inc_ints(m)));
    REQUIRE(before.size() == after.size());
    for (std::size_t k = 0; k < before.size(); ++k) {
      REQUIRE(before[k].type() == after[k].type());
      if (const auto* n = before[k].get_if<Integer>()) {
        CHECK(*after[k].get_if<Integer>() == *n + Integer(1));
      } else {
        CHECK(before[k].constructor().name == after[k].constructor().name);
      }
    }
  }
}

TEST_CASE("any_types and all_types") {
  CHECK(apply_tu(any_types(), Type(TyCon{"Int"})) == NameSet{"Int"});
  Module list = parse(list_src);
  CHECK(apply_tu(any_types(), list.decls[0]) == NameSet{"L"});
  CHECK(apply_tu(any_types(), Expr(LitInt{Integer(3)})).empty());

  CHECK(all_types(list) == NameSet{"L", "Int"});
  CHECK(all_types(parse("module M where")).empty());
  CHECK(all_types(parse(std::string(list_src) + "\ntype N = L")) == NameSet{"N", "L", "Int"});

  CHECK(is_fresh_type("Fresh", list));
  CHECK_FALSE(is_fresh_type("L", list));
  CHECK(is_fresh_type("Anything", parse("module M where")));

  for (const auto& m : corpus_modules()) CHECK(all_types(m) == oracle::type_names(m));
  gen::Gen g(17);
  for (int i = 0; i < 200; ++i) {
    Module m = g.module(4);
    CHECK(all_types(m) == oracle::type_names(m));
  }
}

TEST_CASE("choice between partial steps on one type") {
  Module m = parse("module M where\ndata D = D\ntype S = Int\nf = 1");
  CHECK(apply_tu(dec_con(), m.decls[0]) == std::optional<Name>("D"));
  CHECK(apply_tu(dec_con(), m.decls[1]) == std::optional<Name>("S"));
  CHECK_FALSE(apply_tu(dec_con(), m.decls[2]).has_value());
}

TEST_CASE("free_vars") {
  CHECK(free_vars(parse_expr("\\x -> add x y")) == NameSet{"add", "y"});
  CHECK(free_vars(parse_expr("let y = f y in y")) == NameSet{"f"});
  CHECK(free_vars(parse_expr("v")) == NameSet{"v"});
  CHECK(free_vars(parse_expr("\\(Cons h t) -> add h (len t)")) == NameSet{"add", "len"});
  CHECK(free_vars(parse_expr("f (\\x -> x) x")) == NameSet{"f", "x"});
  CHECK(free_vars(parse_expr("Just 1")).empty());
  CHECK(free_vars(parse("module M where\nlen (Cons h t) = add 1 (len t)\nmain = len xs")) ==
        NameSet{"add", "xs"});
  CHECK(free_vars(parse("module M where\nid x = x\nk = \\a -> \\b -> a")).empty());

  for (const auto& m : corpus_modules()) CHECK(free_vars(m) == oracle::free(m));
  gen::Gen g(23);
  for (int i = 0; i < 300; ++i) {
    Module m = g.module(4);
    CHECK(free_vars(m) == oracle::free(m));
    for (const auto& d : m.decls) CHECK(free_vars(d) == oracle::free(d));
  }

  // Closing a term over its free variables leaves nothing free.
  for (int i = 0; i < 100; ++i) {
    Expr e = g.expr(4);
    for (const auto& v : oracle::free(e)) e = Lam{PVar{v}, e};
    CHECK(free_vars(e).empty());
  }
}

TEST_CASE("variables in scope at the focus") {
  Module m = parse("module M where\nf x = \\y -> let z = 1 in <<add x y>>\ng = 2");
  CHECK(bound_at_focus(m) == NameSet{"f", "g", "x", "y", "z"});
  CHECK(failure_of([] { bound_at_focus(parse(list_src)); }) == FailureKind::NoFocus);
}

TEST_CASE("focus selection") {
  CHECK(select_focus(parse("module M where\nf x = <<x>>")) == Expr(Var{"x"}));
  CHECK(failure_of([] { select_focus(parse(list_src)); }) == FailureKind::NoFocus);
  CHECK(select_focus(parse("module M where\nf = << add 1 2 >>")) == parse_expr("add 1 2"));
  CHECK(select_type_focus(parse("module M where\ntype T = Maybe <<L>>")) == Type(TyCon{"L"}));
  CHECK(failure_of([] { select_type_focus(parse("module M where\nf = <<x>>")); }) ==
        FailureKind::NoFocus);
}

TEST_CASE("to_alias") {
  Module m = parse(std::string(list_src) + "\ntype N = L\ndata W = W <<L>> Int");
  Module out = to_alias("N", m);
  CHECK(pretty(out) == "module M where\ndata L = Nil | Cons Int L\ntype N = L\ndata W = W N Int\n");
  CHECK(all_types(parse(pretty(out))).contains("N"));

  CHECK(failure_of([&] { to_alias("Missing", m); }) == FailureKind::NoSuchAlias);
  Module wrong = parse(std::string(list_src) + "\ntype N = L\ndata W = W <<Int>>");
  CHECK(failure_of([&] { to_alias("N", wrong); }) == FailureKind::GuardFailed);
  try {
    to_alias("N", wrong);
  } catch (const AnalysisError& e) {
    CHECK(std::string(e.what()).rfind("GuardFailed: ", 0) == 0);
  }
}

TEST_CASE("to_alias golden cases") {
  auto dir = corpus::data_dir() / "golden" / "to_alias";
  std::ifstream cases(dir / "cases.txt");
  std::string line;
  int seen = 0;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string id, name;
    fields >> id >> name;
    Module m = parse(corpus::read(dir / (id + ".ml0")));
    std::string expected = corpus::read(dir / (id + ".expected"));
    std::string actual;
    try {
      actual = pretty(to_alias(name, m));
    } catch (const AnalysisError& e) {
      actual = std::string(kind_name(e.kind())) + "\n";
    }
    CHECK_MESSAGE(actual == expected, id);
    ++seen;
  }
  CHECK(seen == 10);
}

TEST_CASE("de_bruijn") {
  std::vector<std::string> abc{"a", "b", "a"};
  CHECK(de_bruijn(abc) == std::vector<std::string>{"1", "1'", "1''"});
  CHECK(de_bruijn(Integer(4)) == Integer(4));
  CHECK(de_bruijn(abc) == de_bruijn(abc));

  static_assert(std::is_same_v<decltype(de_bruijn_strategy()), TP<Partial>>);
  static_assert(!StateEffect<Partial>);

  gen::Gen g(31);
  for (int i = 0; i < 100; ++i) {
    Module m = g.module(3);
    auto in = strings_of(Term::of(m));
    auto out = strings_of(Term::of(de_bruijn(m)));
    REQUIRE(out.size() == in.size());
    CHECK(static_cast<std::int64_t>(in.size()) == oracle::count(m).strings);
    std::string expected = "1";
    for (const auto& s : out) {
      CHECK(s == expected);
      expected += "'";
    }
  }
}

TEST_CASE("coder") {
  Expr x = Var{"x"}, y = Var{"y"};
  Coder c = no_codes();
  CHECK_FALSE(get_code(c, Term::of(x)).has_value());

  auto [a, c1] = encode(c, Term::of(x));
  auto [a2, c2] = encode(c1, Term::of(x));
  CHECK(a == 1);
  CHECK(a2 == 1);
  CHECK(c2.counter == c1.counter);
  auto [b, c3] = encode(c2, Term::of(y));
  CHECK(b == 2);
  CHECK(c3.counter == 2);
  CHECK(get_code(c3, Term::of(x)) == 1);

  Coder set = set_code(next_code(no_codes()).second, Term::of(y));
  CHECK(get_code(set, Term::of(y)) == 1);

  // Typed interface.
  auto [t1, d1] = encode(no_codes(), x);
  auto [t2, d2] = encode(d1, Type(TyCon{"x"}));
  CHECK(t1 == 1);
  CHECK(t2 == 2);
  CHECK(get_code(d2, x) == 1);
  CHECK_FALSE(get_code(d2, y).has_value());
}

TEST_CASE("coder assigns a bijection") {
  gen::Gen g(37);
  for (int round = 0; round < 20; ++round) {
    Coder c = no_codes();
    std::map<std::string, std::int64_t> seen;  // keyed by printed form
    for (int i = 0; i < 40; ++i) {
      Expr e = g.expr(g.pick(3));
      auto [code, next] = encode(c, Term::of(e));
      auto [it, fresh] = seen.emplace(pretty(e), code);
      CHECK(it->second == code);
      if (fresh) CHECK(code == static_cast<std::int64_t>(seen.size()));
      CHECK(code <= next.counter);
      c = next;
    }
    CHECK(c.counter == static_cast<std::int64_t>(seen.size()));
    for (const auto& [text, code] : seen) CHECK(get_code(c, Term::of(parse_expr(text))) == code);
  }
}

TEST_CASE("type tokens and counting") {
  static_assert(!std::is_same_v<TypeToken<Decl>, TypeToken<Expr>>);
  CHECK(type_token<Decl>() == type_token<Decl>());

  CHECK(count_of_type(type_token<Decl>(),
                      parse("module M where\ndata A = A\ntype B = A\nf = 1")) == 3);
  CHECK(count_decls(parse("module M where")) == 0);
  CHECK(count_of_type(type_token<Expr>(), Expr(Var{"x"})) == 1);

  gen::Gen g(41);
  for (int i = 0; i < 100; ++i) {
    Module m = g.module(4);
    Term t = Term::of(m);
    auto counts = oracle::count(m);
    CHECK(count_decls(m) == counts.decls);
    CHECK(count_of_type(type_token<Expr>(), m) == counts.exprs);
    CHECK(count_of_type(type_token<Type>(), m) == counts.types);
    CHECK(count_of_type(type_token<Pattern>(), m) == counts.patterns);
    CHECK(count_of_type(type_token<Integer>(), m) == preorder_count<Integer>(t));
    CHECK(count_of_type(type_token<std::string>(), m) == preorder_count<std::string>(t));
  }
}
