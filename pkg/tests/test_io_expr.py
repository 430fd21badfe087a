"""Table file format, expression grammar, and command-line entry points."""

import pytest

from finring.cli import main
from finring.errors import AxiomViolationError, ExpressionError, RingFormatError
from finring.expr import parse_ring_expr
from finring.ringio import dumps_ring, export_ring, import_ring, loads_ring


# -- round trips --------------------------------------------------------------

ROUND_TRIP = [
    "Zn(4)",
    "Zn(9)",
    "GF(2,2)",
    "M(2,GF(2))",
    "U(2,GF(2))",
    "SkewF4x2()",
    "Reflexive64()",
    "sum(GF(3),Zn(4))",
    "op(U(2,GF(2)))",
    "GA(GF(3),C2)",
    "F2<x>/(x^2)",
]


@pytest.mark.parametrize("expr", ROUND_TRIP)
def test_dump_load_is_bit_exact(expr):
    R = parse_ring_expr(expr)
    S = loads_ring(dumps_ring(R))
    assert S.table_equal(R, labels=True)
    assert S.zero == R.zero and S.one == R.one


def test_file_round_trip_keeps_provenance(tmp_path):
    R = parse_ring_expr("M(2,GF(2))")
    path = tmp_path / "m2f2.ringtab"
    export_ring(R, str(path))
    S = import_ring(str(path))
    assert S.table_equal(R, labels=True)
    assert S.provenance == "ringtab:m2f2.ringtab"


# -- format errors carry line numbers ------------------------------------------


def good_lines():
    return dumps_ring(parse_ring_expr("Zn(4)")).splitlines()


def reject(lines, lineno, fragment):
    with pytest.raises(RingFormatError) as err:
        loads_ring("\n".join(lines) + "\n")
    assert f"line {lineno}:" in str(err.value)
    assert fragment in str(err.value)


def test_bad_magic():
    lines = good_lines()
    lines[0] = "RINGTAB 2"
    reject(lines, 1, "RINGTAB 1")


def test_non_integer_header():
    lines = good_lines()
    lines[1] = "order four"
    reject(lines, 2, "non-integer")


def test_short_label_line():
    lines = good_lines()
    lines[4] = "a"
    reject(lines, 5, "label")


def test_missing_table_row():
    reject(good_lines()[:5], 6, "missing row")


def test_out_of_range_entry():
    lines = good_lines()
    lines[5] = "0 1 2 9"
    reject(lines, 6, "out of range")


def test_trailing_content():
    lines = good_lines() + ["0 0 0 0"]
    reject(lines, 14, "trailing")


def test_import_reverifies_ring_laws():
    # a well-formed file whose tables break associativity must not load
    lines = good_lines()
    lines[11] = "0 2 0 2".replace("0 2 0 2", "0 2 0 3")
    with pytest.raises(AxiomViolationError):
        loads_ring("\n".join(lines) + "\n")


# -- expression grammar --------------------------------------------------------

GRAMMAR_ORDERS = [
    ("Zn(12)", 12),
    ("GF(3)", 3),
    ("GF(2,3)", 8),
    ("M(2,GF(2))", 16),
    ("U(2,GF(2))", 8),
    ("GA(GF(2),Q8)", 256),
    ("GA(GF(3),C2)", 9),
    ("SkewF4x2()", 16),
    ("Reflexive64()", 64),
    ("sum(M(2,GF(2)),U(2,GF(2)))", 128),
    ("op(U(2,GF(2)))", 8),
    ("sum(GF(2),GF(2),GF(2))", 8),
]


@pytest.mark.parametrize("expr,order", GRAMMAR_ORDERS)
def test_expression_orders(expr, order):
    assert parse_ring_expr(expr).order == order


@pytest.mark.parametrize(
    "expr,fragment",
    [
        ("", "empty expression"),
        ("Zn(0)", "positive modulus"),
        ("GF(2,", "unexpected end"),
        ("GF(6)", "not prime"),
        ("frob(GF(4))", "unknown constructor"),
        ("Zn(4) junk", "trailing"),
        ("GA(GF(2),D4)", "unknown group"),
    ],
)
def test_expression_errors_carry_position(expr, fragment):
    with pytest.raises(ExpressionError, match=fragment):
        parse_ring_expr(expr)


# -- command line ---------------------------------------------------------------


def test_cli_build_and_props(capsys):
    assert main(["build", "Zn(4)"]) == 0
    assert main(["props", "Zn(4)", "--kv"]) == 0
    out = capsys.readouterr().out
    assert "order=4" in out
    assert "commutative=true" in out


def test_cli_iso_exit_codes():
    assert main(["iso", "Zn(4)", "Zn(4)"]) == 0
    assert main(["iso", "Zn(4)", "F2<x>/(x^2)"]) == 1


def test_cli_export_import_cycle(tmp_path, capsys):
    path = str(tmp_path / "u2.ringtab")
    assert main(["export", "U(2,GF(2))", "--out", path]) == 0
    assert main(["import", path]) == 0
    out = capsys.readouterr().out
    assert "order" in out


def test_cli_enumerate_census(capsys):
    assert main(["enumerate", "4", "--census"]) == 0
    out = capsys.readouterr().out
    assert "isomorphism classes of order 4: 4" in out


def test_cli_decompose(capsys):
    assert main(["decompose", "U(2,GF(2))"]) == 0
    assert "blocks m=2" in capsys.readouterr().out


def test_cli_bad_input_exits_2(capsys):
    assert main(["build", "Zn(0)"]) == 2
    assert "positive modulus" in capsys.readouterr().err
