"""Expression grammar, round trips, subcommands, exit codes."""

import random
from fractions import Fraction

import pytest

from chainalg import AlgebraParams, IndexRangeError, element, gen_f, gen_l, gen_s
from chainalg.checks import random_element
from chainalg.cli import ExprSyntaxError, main, parse, render_chain_state
from chainalg.core import render_element

P21 = AlgebraParams(2, 1)
P22 = AlgebraParams(2, 2)


def test_parse_single_interior():
    expr = parse("s[1|2]", P21)
    assert expr.as_element() == element(P21, gen_s((1,), (2,)))


def test_parse_signed_sum_with_rationals():
    expr = parse("3/2*f(1,1;1,1)[|] - l(2,1)[1|]", P22)
    expect = element(
        P22,
        (Fraction(3, 2), gen_f(1, 1, 1, 1, (), ())),
        (-1, gen_l(2, 1, (1,), ())),
    )
    assert expr.as_element() == expect


def test_parse_error_position():
    with pytest.raises(ExprSyntaxError) as err:
        parse("s[1|2", P21)
    assert err.value.column == 6
    assert "column 6" in str(err.value)


def test_parse_error_unknown_character():
    with pytest.raises(ExprSyntaxError) as err:
        parse("s[1|2]$", P21)
    assert err.value.column == 7


def test_parse_out_of_range_cites_bounds():
    with pytest.raises(IndexRangeError) as err:
        parse("s[3|1]", P21)
    assert "lambda=2" in str(err.value)
    with pytest.raises(IndexRangeError) as err:
        parse("l(2,1)[1|]", P21)
    assert "lambda_f=1" in str(err.value)


def test_parse_chain_expression():
    expr = parse("chain(1,2)[1,2,1] + 2*chain(2,1)[]", P22)
    state = expr.as_chain_state()
    assert state.get(__import__("chainalg").chain(1, (1, 2, 1), 2)) == 1
    assert state.get(__import__("chainalg").chain(2, (), 1)) == 2


def test_mixed_expression_rejected():
    expr = parse("s[1|1] + chain(1,1)[]", P21)
    with pytest.raises(ValueError):
        expr.as_element()
    with pytest.raises(ValueError):
        expr.as_chain_state()


def test_parse_render_roundtrip_random():
    rng = random.Random(41)
    for _ in range(60):
        e = random_element(rng, P22)
        text = render_element(e)
        assert parse(text, P22).as_element() == e


def test_render_parse_normalizes_corpus():
    corpus = [
        "s[|]",
        "s[1,2|]",
        "-s[1|1]",
        "2*s[1|1] + 1/3*l(1,1)[|2]",
        "f(1,2;2,1)[1,1|] - r(2,2)[|1]",
    ]
    for text in corpus:
        e = parse(text, P22).as_element()
        assert parse(render_element(e), P22).as_element() == e


def test_cli_bracket_golden(capsys):
    code = main(
        ["bracket", "f(1,1;1,1)[1|2]", "f(1,1;1,1)[2|1]", "--lambda", "2", "--lambda-f", "1"]
    )
    out = capsys.readouterr().out.strip()
    assert code == 0
    # canonical form of f(1,1;1,1)[1|1] - f(1,1;1,1)[2|2]: unit-flavor
    # whole-chain operators are not basis elements, so they expand
    assert out == (
        "s[1|1] - s[2|2] - 2*s[1,1|1,1] + 2*s[2,2|2,2]"
        " + s[1,1,1|1,1,1] + s[1,1,2|1,1,2] - s[1,2,1|1,2,1] - s[1,2,2|1,2,2]"
        " + s[2,1,1|2,1,1] + s[2,1,2|2,1,2] - s[2,2,1|2,2,1] - s[2,2,2|2,2,2]"
    )
    raw = element(
        P21,
        (1, gen_f(1, 1, 1, 1, (1,), (1,))),
        (-1, gen_f(1, 1, 1, 1, (2,), (2,))),
    )
    from chainalg import equal_on_chains

    assert equal_on_chains(parse(out, P21).as_element(), raw, 5)


def test_cli_act(capsys):
    code = main(["act", "s[1|2]", "chain(1,1)[2,2]", "--lambda", "2", "--lambda-f", "1"])
    out = capsys.readouterr().out.strip()
    assert code == 0
    assert out == "chain(1,1)[1,2] + chain(1,1)[2,1]"


def test_cli_rewrite(capsys):
    code = main(["rewrite", "--basis", "b0", "l(1,1)[1|2]", "--lambda", "2", "--lambda-f", "1"])
    out = capsys.readouterr().out.strip()
    assert code == 0
    assert out == "s[1|2] - s[1,1|1,2] - s[2,1|2,2]"
    code = main(
        ["rewrite", "--basis", "b4", "l(1,1)[2,1|2,1]", "--lambda", "2", "--lambda-f", "1"]
    )
    out = capsys.readouterr().out.strip()
    assert code == 0
    assert out == "-f(1,1;1,1)[2|2] + l(1,1)[2|2] - l(1,1)[2,2|2,2]"


def test_cli_classify(capsys):
    code = main(["classify", "s[1|2] + s[2|1]", "--lambda", "2", "--lambda-f", "1"])
    out = capsys.readouterr().out.strip().splitlines()
    assert code == 0
    # ordering compares the lower sequence first, so s[2|1] prints first
    assert out == ["s[2|1]: raising", "s[1|2]: lowering"]


def test_cli_weight_and_gram_file(tmp_path, capsys):
    path = tmp_path / "weight.txt"
    code = main(
        ["weight", "--gamma", "2,1", "--out", str(path), "--lambda", "2", "--lambda-f", "1"]
    )
    assert code == 0
    text = path.read_text()
    assert "lambda 2" in text and "mode af" in text
    code = main(["gram", "--weight", str(path), "--max-size", "1", "--inertia"])
    out = capsys.readouterr().out
    assert code == 0
    assert "inertia:" in out and "neg=0" in out


def test_cli_gram_gamma(capsys):
    code = main(
        ["gram", "--gamma", "1", "--max-size", "2", "--inertia", "--lambda", "1", "--lambda-f", "1"]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "neg=0" in out


def test_cli_gram_accepts_gamma_prefix(capsys):
    code = main(
        ["gram", "--gamma", "gamma=1", "--max-size", "1", "--lambda", "1", "--lambda-f", "1"]
    )
    assert code == 0
    capsys.readouterr()


def test_cli_check_suites(capsys):
    for suite in ("jacobi", "independence"):
        code = main(
            [
                "check",
                "--suite",
                suite,
                "--seed",
                "1",
                "--cases",
                "20",
                "--lambda",
                "2",
                "--lambda-f",
                "1",
            ]
        )
        out = capsys.readouterr().out
        assert code == 0 and out


def test_cli_parse_error_exit_code(capsys):
    code = main(["bracket", "s[1|2", "s[1|1]", "--lambda", "2", "--lambda-f", "1"])
    err = capsys.readouterr().err
    assert code == 2
    assert "column 6" in err


def test_cli_missing_params_exit_code(capsys):
    code = main(["classify", "s[1|2]"])
    assert code == 2
    assert "--lambda" in capsys.readouterr().err


def test_cli_out_of_range_exit_code(capsys):
    code = main(["classify", "s[9|1]", "--lambda", "2", "--lambda-f", "1"])
    assert code == 2
    assert "out of range" in capsys.readouterr().err


def test_cli_check_deterministic_given_seed(capsys):
    argv = [
        "check",
        "--suite",
        "jacobi",
        "--seed",
        "7",
        "--cases",
        "30",
        "--lambda",
        "2",
        "--lambda-f",
        "2",
    ]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out
    assert first == second


def test_cli_check_failure_exit_code(monkeypatch, capsys):
    from chainalg import checks

    monkeypatch.setattr(checks, "suite_jacobi", lambda p, **kw: (False, ["forced"]))
    code = main(
        ["check", "--suite", "jacobi", "--lambda", "1", "--lambda-f", "1"]
    )
    assert code == 1
    assert "forced" in capsys.readouterr().out


def test_cli_check_identities_suite(capsys):
    code = main(
        [
            "check",
            "--suite",
            "identities",
            "--max-len",
            "3",
            "--lambda",
            "1",
            "--lambda-f",
            "1",
        ]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "identities" in out


def test_cli_check_oracle_suite(capsys):
    code = main(
        ["check", "--suite", "oracle", "--lambda", "1", "--lambda-f", "1"]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "word pairs match" in out


def test_render_chain_state_orders_chains():
    from chainalg import chain
    from chainalg.core import Combination

    state = Combination.from_items(
        P21, [(chain(1, (2, 1), 1), 1), (chain(1, (), 1), -2)]
    )
    assert render_chain_state(state) == "-2*chain(1,1)[] + chain(1,1)[2,1]"
