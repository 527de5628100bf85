import os
import pathlib

import pytest

import strategem

DATA = pathlib.Path(os.environ.get("STRATEGEM_TEST_DATA", pathlib.Path(__file__).parents[1]))
LIST = "module M where\ndata L = Nil | Cons Int L"


def corpus():
    return sorted((DATA / "corpus").glob("*.ml0"))


def test_parse_and_pretty():
    m = strategem.parse(LIST)
    assert m.name == "M"
    assert len(m) == 1
    assert str(m) == LIST + "\n"
    assert strategem.Module.parse(LIST) == m


@pytest.mark.parametrize("path", corpus(), ids=lambda p: p.name)
def test_round_trip(path):
    m = strategem.parse(path.read_text())
    assert strategem.parse(strategem.pretty(m)) == m


def test_syntax_errors():
    with pytest.raises(strategem.MultipleFociError):
        strategem.parse("module M where\nf x = <<x>> <<x>>")
    with pytest.raises(strategem.SyntaxError) as err:
        strategem.parse("module M where\n  f = 1")
    assert str(err.value).startswith("2:3:")


def test_analyses():
    m = strategem.parse(LIST)
    assert strategem.all_types(m) == ["Int", "L"]
    assert strategem.is_fresh_type("Fresh", m)
    assert not strategem.is_fresh_type("L", m)
    assert strategem.count_decls(m) == 1
    assert strategem.free_vars_expr("\\x -> add x y") == ["add", "y"]
    assert strategem.free_vars(strategem.parse("module M where\nf = g 1")) == ["g"]


def test_increment():
    m = strategem.parse("module M where\nf = add 41 99999999999999999999")
    assert str(strategem.inc_ints(m)) == "module M where\nf = add 42 100000000000000000000\n"
    pairs = strategem.inc_pairs([(True, 1), (False, 2**70)])
    assert pairs == [(True, 2), (False, 2**70 + 1)]


def test_focus_and_alias():
    m = strategem.parse(LIST + "\ntype N = L\ndata W = W <<L>> Int\nf = <<g x>>")
    assert strategem.select_focus(m) == "g x"
    assert strategem.select_type_focus(m) == "L"
    out = strategem.to_alias("N", m)
    assert "data W = W N Int" in str(out)
    with pytest.raises(strategem.NoSuchAlias):
        strategem.to_alias("Missing", m)
    with pytest.raises(strategem.NoFocus):
        strategem.to_alias("N", strategem.parse(LIST))
    assert issubclass(strategem.GuardFailed, strategem.AnalysisError)


def test_de_bruijn():
    m = strategem.parse('module M where\nf = g "a" "b"')
    assert str(strategem.de_bruijn(m)) == "module 1 where\n1' = 1'' \"1'''\" \"1''''\"\n"


def test_coder():
    c = strategem.Coder()
    assert c.get("x") is None
    assert c.encode("x") == 1
    assert c.encode("f y") == 2
    assert c.encode("x") == 1
    assert c.counter == 2


def test_cli():
    code, out, err = strategem.run_cli(["collect-types", str(DATA / "corpus" / "list.ml0")])
    assert (code, out, err) == (0, "Int\nL\n", "")
    code, out, err = strategem.run_cli(["to-alias", "--name", "N", str(DATA / "corpus" / "list.ml0")])
    assert code == 1
    assert "NoFocus" in err
