#include <doctest.h>

#include <atomic>
#include <optional>
#include <thread>

#include "strategem/descriptor.hpp"
#include "strategem/minilang/ast.hpp"
#include "strategem/minilang/parser.hpp"
#include "strategem/term_rep.hpp"
#include "support/corpus.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace strategem;
using namespace strategem::rep;
using namespace strategem::minilang;

namespace {

struct IntList;
struct Nil {
  bool operator==(const Nil&) const = default;
};
struct Cons {
  Integer head;
  Box<IntList> tail;
  bool operator==(const Cons&) const = default;
};
struct IntList : std::variant<Nil, Cons> {
  using variant::variant;
  bool operator==(const IntList&) const = default;
};

IntList nil() { return Nil{}; }
IntList cons(long h, IntList t) { return Cons{Integer(h), std::move(t)}; }

// Same name as the AST's Expr, different C++ type and shape.
struct FakeExpr {
  static constexpr std::string_view term_name = "Expr";
  Integer only;
};

}  // namespace

TEST_CASE("type_of names the concrete datatype") {
  Expr lit = LitInt{Integer(1)};
  CHECK(type_of(Term::of(lit)).name() == "Expr");
  Decl d = TypeSyn{"N", TyCon{"L"}};
  CHECK(type_of(Term::of(d)).name() == "Decl");

  Expr app = App{Expr(Var{"f"}), Expr(Var{"x"})};
  CHECK(type_of(children(Term::of(app))[0]).name() == "Expr");
  CHECK(type_of(Term::of(app)) == type_tag<Expr>());
  CHECK_FALSE(type_of(Term::of(app)) == type_tag<Decl>());
}

TEST_CASE("container types are registered per instantiation") {
  CHECK(type_tag<std::vector<Expr>>().name() == "[Expr]");
  CHECK(type_tag<std::vector<Decl>>().name() == "[Decl]");
  CHECK_FALSE(type_tag<std::vector<Expr>>() == type_tag<std::vector<Decl>>());
  CHECK(type_tag<std::pair<bool, Integer>>().name() == "(Bool,Int)");
  CHECK(type_tag<std::optional<Integer>>().name() == "Maybe Int");
}

TEST_CASE("children in field order, atoms are leaves") {
  CHECK(children(Term::of(nil())).empty());

  auto kids = children(Term::of(cons(1, nil())));
  REQUIRE(kids.size() == 2);
  CHECK(cast<Integer>(kids[0]) == Integer(1));
  CHECK(cast<IntList>(kids[1]) == nil());

  CHECK(children(Term::of(Integer(42))).empty());
  CHECK(children(Term::of(std::string("s"))).empty());
  CHECK(children(Term::of(true)).empty());
}

TEST_CASE("rebuild") {
  Term t = Term::of(cons(1, nil()));
  CHECK(cast<IntList>(rebuild(t, children(t))) == cons(1, nil()));

  std::vector<Term> kids{Term::of(Integer(2)), Term::of(nil())};
  CHECK(cast<IntList>(rebuild(t, kids)) == cons(2, nil()));

  std::vector<Term> short_kids{Term::of(nil())};
  CHECK_THROWS_AS(rebuild(t, short_kids), ArityMismatch);

  std::vector<Term> swapped{Term::of(nil()), Term::of(Integer(2))};
  CHECK_THROWS_AS(rebuild(t, swapped), ChildTypeMismatch);
}

TEST_CASE("cast") {
  CHECK(cast<Integer>(Term::of(Integer(5))) == Integer(5));
  CHECK_FALSE(cast<Decl>(Term::of(Integer(5))).has_value());

  Expr app = App{Expr(Var{"f"}), Expr(Var{"x"})};
  CHECK(cast<Expr>(children(Term::of(app))[1]) == Expr(Var{"x"}));
}

TEST_CASE("constructor tags") {
  Term t = Term::of(cons(1, nil()));
  ConstructorTag c = t.constructor();
  CHECK(c.name == "Cons");
  CHECK(c.arity == 2);
  CHECK(c.owner == type_tag<IntList>());
  CHECK(Term::of(nil()).constructor().arity == 0);
  CHECK(show(t) == "Cons(1, Nil)");
}

TEST_CASE("box children share the pointee") {
  Expr inner = Var{"x"};
  Expr lam = Lam{PVar{"x"}, inner};
  const auto& body = std::get<Lam>(static_cast<const Expr::variant&>(lam)).body;
  auto kids = children(Term::of(lam));
  REQUIRE(kids.size() == 2);
  CHECK(kids[1].raw() == static_cast<const void*>(&body.get()));
}

TEST_CASE("round trip, arity and cast laws over random terms") {
  gen::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    Module m = g.module(4);
    for (const Term& t : oracle::preorder(Term::of(m))) {
      auto kids = children(t);
      CHECK(kids.size() == t.constructor().arity);
      CHECK(structurally_equal(rebuild(t, kids), t));
      bool is_expr = t.get_if<Expr>() != nullptr;
      CHECK(cast<Expr>(t).has_value() == is_expr);
      CHECK(is_expr == (type_of(t) == type_tag<Expr>()));
    }
  }
}

TEST_CASE("structural equality") {
  CHECK(structurally_equal(Term::of(cons(1, nil())), Term::of(cons(1, nil()))));
  CHECK_FALSE(structurally_equal(Term::of(cons(1, nil())), Term::of(cons(2, nil()))));
  CHECK_FALSE(structurally_equal(Term::of(Integer(1)), Term::of(std::string("1"))));
}

TEST_CASE("registry closure over the mini-language") {
  Registry r;
  register_minilang(r);
  CHECK(r.closure_violations().empty());
  for (const char* name : {"Module", "Decl", "Expr", "Type", "Pattern", "ConDecl"}) {
    CHECK(r.find(name) != nullptr);
  }

  // Every node reached from a corpus module belongs to a registered type.
  for (const auto& path : corpus::files()) {
    Module m = parse(corpus::read(path));
    for (const Term& t : oracle::preorder(Term::of(m))) {
      CHECK_MESSAGE(r.contains(t.type()), path.filename().string());
    }
  }
}

TEST_CASE("registry for nested containers") {
  Registry r;
  r.enroll<std::vector<std::pair<bool, Integer>>>();
  r.enroll<std::optional<std::pair<Integer, std::pair<std::vector<Integer>, Integer>>>>();
  CHECK(r.closure_violations().empty());
  CHECK(r.find("[(Bool,Int)]") != nullptr);
  CHECK(r.find("Maybe (Int,([Int],Int))") != nullptr);
}

TEST_CASE("conflicting registrations") {
  Registry r;
  register_minilang(r);
  register_minilang(r);  // same shapes again: no-op

  TypeInfo altered = type_info<Expr>();
  altered.constructors.pop_back();
  CHECK_THROWS_AS(r.register_datatype(altered), DuplicateRegistration);
  CHECK_THROWS_AS(r.enroll<FakeExpr>(), DuplicateRegistration);

  r.freeze();
  CHECK(r.frozen());
  CHECK_THROWS_AS(r.enroll<IntList>(), RegistryFrozen);
  CHECK(r.find("Expr") != nullptr);
}

TEST_CASE("frozen registry serves concurrent readers") {
  Registry r;
  register_minilang(r);
  r.freeze();
  std::vector<std::thread> readers;
  std::atomic<int> found{0};
  for (int i = 0; i < 4; ++i) {
    readers.emplace_back([&] {
      for (int k = 0; k < 1000; ++k) {
        if (r.find("Expr") && r.contains(type_tag<Decl>())) ++found;
      }
    });
  }
  for (auto& t : readers) t.join();
  CHECK(found == 4000);
}

TEST_CASE("textual descriptors") {
  std::string text = render_descriptor(type_info<IntList>());
  CHECK(text == "IntList.Nil :\nIntList.Cons : Int IntList\n");

  auto shapes = parse_descriptor(
      "-- comment\n"
      "Opt.None :\n"
      "Opt.Some : (Maybe Int) [Expr] (Int,String)\n");
  REQUIRE(shapes.size() == 1);
  CHECK(shapes[0].name == "Opt");
  REQUIRE(shapes[0].constructors.size() == 2);
  CHECK(shapes[0].constructors[1].fields ==
        std::vector<std::string>{"Maybe Int", "[Expr]", "(Int,String)"});

  // Rendering then parsing gives back the derived shape.
  Registry r;
  register_minilang(r);
  auto described = parse_descriptor(render_descriptor(r));
  for (const auto& shape : described) {
    CHECK(shape == shape_of(*r.find(shape.name)));
  }
  CHECK_NOTHROW(register_descriptor(r, render_descriptor(r)));
  CHECK_THROWS_AS(register_descriptor(r, "Expr.Var : String\n"), DuplicateRegistration);
  CHECK_THROWS_AS(register_descriptor(r, "Nope.A :\n"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("no colon here"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("A.X :\nB.Y :\nA.Z :\n"), DescriptorError);
}

TEST_CASE("the list constructor survives a descriptor round trip") {
  auto text = render_descriptor(type_info<std::vector<Integer>>());
  CHECK(text == "[Int].[] :\n[Int].: : Int [Int]\n");
  auto shapes = parse_descriptor(text);
  REQUIRE(shapes.size() == 1);
  CHECK(shapes[0] == shape_of(type_info<std::vector<Integer>>()));
}
