import json
import random

import pytest
from fractions import Fraction

from lexmv import cli, dsl, finite
from lexmv import groups as gr
from lexmv.algebra import PmvAlgebra
from lexmv.dsl import (
    ParseError,
    SemanticError,
    as_finite,
    build_algebra,
    build_elem,
    build_group,
    parse,
    parse_elem,
    parse_group,
    print_ast,
    tokenize,
)


def test_tokenize_spans():
    toks = tokenize("gamma(Z,\n 4)")
    assert [(t.kind, t.text) for t in toks] == [
        ("name", "gamma"),
        ("punct", "("),
        ("name", "Z"),
        ("punct", ","),
        ("int", "4"),
        ("punct", ")"),
        ("end", ""),
    ]
    assert (toks[4].line, toks[4].col) == (2, 2)
    with pytest.raises(ParseError, match="1:7"):
        tokenize("gamma(@)")


def test_parse_errors_carry_position():
    with pytest.raises(ParseError, match="1:1"):
        parse("spiral(Z)")
    with pytest.raises(ParseError, match=r"expected '\)'"):
        parse("chain(3,4)")
    with pytest.raises(ParseError, match="trailing"):
        parse("chain(3) chain(4)")
    with pytest.raises(ParseError, match="expected an element"):
        parse("gamma(Z,")
    with pytest.raises(ParseError, match="end of input"):
        parse("gamma(Z,4")
    with pytest.raises(ParseError, match="zero denominator"):
        parse_elem("3/0")


def test_print_parse_roundtrip():
    texts = [
        "gamma(Z,4)",
        "gamma(lex(Z,lex(Z,Z)),(1,(0,0)))",
        "gamma(lex(Q,Z),(1/2,0))",
        "gamma(lex(Z,Aff),(1,aff(2,0)))",
        "gamma(lex(Z,Aff),(1,aff(1/2,-3/4)))",
        "chain(6)",
        "prod(chain(2),prod(chain(1),chain(3)))",
        "gamma(lex(O,Z),(0,5))",
    ]
    for text in texts:
        node = parse(text)
        assert print_ast(node) == text
        assert parse(print_ast(node)) == node
    spaced = parse("  gamma( lex(Z , Z) ,\n (2, 1) ) ")
    assert print_ast(spaced) == "gamma(lex(Z,Z),(2,1))"


def test_semantic_errors():
    with pytest.raises(SemanticError):
        parse("chain(0)")
    with pytest.raises(SemanticError, match="integer"):
        build_elem(gr.Z, parse_elem("1/2"))
    with pytest.raises(SemanticError, match="pair"):
        build_elem(gr.lex(gr.Z, gr.Z), parse_elem("3"))
    with pytest.raises(SemanticError, match="aff"):
        build_elem(gr.AFF, parse_elem("3"))
    with pytest.raises(SemanticError):
        build_elem(gr.O, parse_elem("1"))
    with pytest.raises(SemanticError):
        build_algebra(parse("gamma(Z,0)"))  # not a strong unit
    with pytest.raises(SemanticError):
        build_algebra(parse("gamma(lex(Z,Z),(0,5))"))
    with pytest.raises(SemanticError):
        build_algebra(parse("gamma(Z,-3)"))


def test_build_values():
    assert build_group(parse_group("lex(Q,Aff)")) == gr.lex(gr.Q, gr.AFF)
    assert build_elem(gr.Q, parse_elem("2/6")) == Fraction(1, 3)
    assert build_elem(gr.AFF, parse_elem("aff(2,-1)")) == gr.Aff(2, -1)
    a = build_algebra(parse("gamma(lex(Z,Z),(2,1))"))
    assert isinstance(a, PmvAlgebra) and a.unit == (2, 1)
    c = build_algebra(parse("prod(chain(2),chain(2))"))
    assert isinstance(c, finite.FiniteMv) and c.size == 9


def test_as_finite():
    fin = as_finite(build_algebra(parse("gamma(Z,3)")))
    assert fin.size == 4
    with pytest.raises(SemanticError):
        as_finite(build_algebra(parse("gamma(lex(Z,Z),(1,0))")))


def test_roundtrip_random_prints():
    rng = random.Random(31)

    def rand_group(depth):
        if depth == 0 or rng.random() < 0.5:
            return rng.choice(["Z", "Q", "O", "Aff"])
        return f"lex({rand_group(depth - 1)},{rand_group(depth - 1)})"

    def rand_elem(depth):
        if depth == 0 or rng.random() < 0.5:
            n = rng.randint(-9, 9)
            if rng.random() < 0.3:
                return f"{n}/{rng.randint(1, 9)}"
            return str(n)
        if rng.random() < 0.3:
            return f"aff({rng.randint(1, 9)},{rng.randint(-9, 9)})"
        return f"({rand_elem(depth - 1)},{rand_elem(depth - 1)})"

    for _ in range(200):
        text = f"gamma({rand_group(2)},{rand_elem(2)})"
        node = parse(text)
        assert parse(print_ast(node)) == node


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_exit_codes(capsys):
    code, out = run_cli(capsys, "run", "check-axioms", "chain(4)")
    assert code == 0
    assert json.loads(out)["verdict"] == "pass"
    code, _ = run_cli(capsys, "run", "check-axioms", "gamma(Z", "--samples", "10")
    assert code == 2
    code, _ = run_cli(capsys, "run", "classify", "chain(4)", "--elem", "1")
    assert code == 2  # needs a lexicographic interval algebra
    code, _ = run_cli(capsys, "run", "nonsense", "chain(4)")
    assert code == 2


def test_cli_failure_exit(capsys):
    code, out = run_cli(capsys, "run", "isomorphic", "chain(2)", "--other", "chain(3)")
    assert code == 1
    rep = json.loads(out)
    assert rep["verdict"] == "fail"
    assert rep["counterexamples"][0]["clause"] == "no-isomorphism"


def test_cli_cap_exceeded(capsys):
    code, out = run_cli(capsys, "run", "ideals", "chain(20)")
    assert code == 1
    assert json.loads(out)["verdict"] == "cap-exceeded"
    code, out = run_cli(capsys, "run", "ideals", "chain(20)", "--cap", "30")
    assert code == 0


def test_cli_byte_identical_runs(capsys):
    argv = ("run", "witness", "gamma(lex(Z,Z),(2,1))", "--samples", "50", "--seed", "3")
    code1, out1 = run_cli(capsys, *argv)
    code2, out2 = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "elapsed_s" not in json.loads(out1)
    _, timed = run_cli(capsys, *argv, "--with-timing")
    assert "elapsed_s" in json.loads(timed)


def test_cli_json_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out = run_cli(
        capsys, "run", "radical", "prod(chain(2),chain(2))", "--json", str(path)
    )
    assert code == 0
    assert path.read_text() == out
    rep = json.loads(out)
    assert rep["details"]["rad"] == ["(0,0)"]


def test_cli_table_input(tmp_path, capsys):
    a = finite.make_product(finite.make_chain(2), finite.make_chain(2))
    path = tmp_path / "alg.tbl"
    path.write_text(finite.format_table(a))
    code, out = run_cli(capsys, "run", "states", "--table", str(path))
    assert code == 0
    rep = json.loads(out)
    assert rep["details"]["count"] == 2
    code, _ = run_cli(capsys, "run", "states", "--table", str(tmp_path / "absent.tbl"))
    assert code == 2


def test_cli_classify(capsys):
    code, out = run_cli(
        capsys, "run", "classify", "gamma(lex(Z,Z),(1,0))", "--elem", "(1,-7)"
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["details"]["slice"] == "1"
    code, _ = run_cli(capsys, "run", "classify", "gamma(lex(Z,Z),(1,0))")
    assert code == 2


def test_cli_lexify_weak(capsys):
    code, out = run_cli(
        capsys, "run", "lexify", "gamma(lex(Z,Z),(2,1))", "--samples", "200"
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["details"]["b"] == "(0,1)"
    assert rep["details"]["kind"] == "weak"


def test_cli_isomorphic_pass(capsys):
    code, out = run_cli(
        capsys,
        "run",
        "isomorphic",
        "prod(chain(2),chain(3))",
        "--other",
        "prod(chain(3),chain(2))",
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["details"]["sizes"] == [12, 12]
    code, _ = run_cli(capsys, "run", "isomorphic", "chain(2)")
    assert code == 2


def test_cli_lexid(capsys):
    code, out = run_cli(capsys, "run", "lexid", "prod(chain(2),chain(2))")
    assert code == 0
    assert json.loads(out)["details"]["exists"] is False
