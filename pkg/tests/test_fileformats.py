import csv
import io
import json
from fractions import Fraction

import pytest

from heisenberg_cohomology.algebra import (make_heisenberg_even,
                                           make_heisenberg_odd)
from heisenberg_cohomology.cohomology import betti_table, cohomology_dims
from heisenberg_cohomology.fileformats import (AlgebraParseError,
                                               AlgebraValidationError,
                                               CSV_FIELDS, JSON_FIELDS,
                                               emit_report, format_algebra,
                                               parse_algebra)


def test_round_trip_builtin_families():
    algebras = [make_heisenberg_odd(n) for n in (1, 2, 3)]
    algebras += [make_heisenberg_even(n, m) for n in (1, 2) for m in (1, 2)]
    for alg in algebras:
        text = format_algebra(alg)
        assert parse_algebra(text) == alg
        # formatting is idempotent
        assert format_algebra(parse_algebra(text)) == text


def test_hand_written_file_matches_constructor():
    text = """\
# odd-center Heisenberg superalgebra with one x/y pair
name h_1
generator x1 0
generator y1 1
generator z 1
bracket x1 y1 = z:1
"""
    assert parse_algebra(text) == make_heisenberg_odd(1)
    assert parse_algebra(text.encode("utf-8")) == make_heisenberg_odd(1)


def test_fractional_coefficients():
    text = """\
name half
generator y 1
generator z 0
bracket y y = z:1/2
"""
    alg = parse_algebra(text)
    assert alg.bracket(0, 0) == {1: Fraction(1, 2)}


def test_reversed_pair_is_sign_normalized():
    base = "name a\ngenerator p 0\ngenerator q 0\ngenerator r 0\n"
    fwd = parse_algebra(base + "bracket p q = r:2\n")
    rev = parse_algebra(base + "bracket q p = r:-2\n")
    assert fwd == rev
    assert fwd.bracket(0, 1) == {2: Fraction(2)}
    # odd-odd pairs are symmetric: no sign flip on reversal
    odd = "name b\ngenerator u 1\ngenerator v 1\ngenerator w 0\n"
    assert parse_algebra(odd + "bracket u v = w:3\n") == \
        parse_algebra(odd + "bracket v u = w:3\n")


def parse_error(text):
    with pytest.raises(AlgebraParseError) as err:
        parse_algebra(text)
    return err.value


def test_parse_errors_carry_line_numbers():
    err = parse_error("name a\ngenerator x 0\nbracket x w = x:1\n")
    assert err.line == 3 and "unknown generator" in str(err)

    err = parse_error("name a\ngenerator x 2\n")
    assert err.line == 2 and "parity" in str(err)

    err = parse_error("name a\ngenerator x 0\ngenerator y 0\nbracket x y = x:1.5\n")
    assert err.line == 4 and "rational" in str(err)

    err = parse_error("name a\ngenerator x 0\ngenerator y 0\nbracket x y = x:1/0\n")
    assert err.line == 4 and "rational" in str(err)

    err = parse_error("name a\ngenerator x 0\ngenerator x 1\n")
    assert err.line == 3 and "duplicate generator" in str(err)

    err = parse_error("name a\nname b\n")
    assert err.line == 2 and "duplicate 'name'" in str(err)

    err = parse_error("generator x 0\n")
    assert "missing 'name'" in str(err)

    err = parse_error("name a\nfoo bar\n")
    assert err.line == 2 and "unknown directive" in str(err)

    err = parse_error("name a\ngenerator x 0\ngenerator y 0\nbracket x y x:1\n")
    assert err.line == 4 and "expected 'bracket" in str(err)

    err = parse_error("name a\n")
    assert "no generators" in str(err)


def test_duplicate_pair_rejected_in_either_order():
    base = ("name a\ngenerator p 0\ngenerator q 0\ngenerator r 0\n"
            "bracket p q = r:1\n")
    err = parse_error(base + "bracket p q = r:1\n")
    assert err.line == 6 and "already given on line 5" in str(err)
    err = parse_error(base + "bracket q p = r:-1\n")
    assert err.line == 6 and "already given on line 5" in str(err)


def test_axiom_violations_are_validation_errors():
    # an even generator cannot square to something nonzero
    text = """\
name bad
generator x 0
generator z 0
bracket x x = z:1
"""
    with pytest.raises(AlgebraValidationError) as err:
        parse_algebra(text)
    assert any("skew" in v for v in err.value.violations)


def test_emit_csv_golden():
    rep = cohomology_dims(make_heisenberg_odd(1), 0)
    data = emit_report([rep], "csv").decode()
    lines = data.splitlines()
    assert lines[0] == "algebra,q,dim_cochain,dim_cocycles,dim_coboundaries,dim_cohomology,method"
    assert lines[1] == "h_1,0,1,1,0,1,rank"
    assert data.endswith("\n")


def test_emit_csv_quotes_comma_in_name():
    rep = cohomology_dims(make_heisenberg_even(1, 1), 0)
    data = emit_report([rep], "csv").decode()
    assert '"h_{1,1}"' in data.splitlines()[1]
    rows = list(csv.reader(io.StringIO(data)))
    assert rows[1][0] == "h_{1,1}"


def test_emit_empty_report_list():
    assert emit_report([], "csv").decode() == ",".join(CSV_FIELDS) + "\n"
    assert json.loads(emit_report([], "json")) == []


def test_emit_json_field_names():
    reports = betti_table(make_heisenberg_odd(1), 2)
    payload = json.loads(emit_report(reports, "json"))
    assert len(payload) == 3
    for obj, rep in zip(payload, reports):
        assert tuple(obj.keys()) == JSON_FIELDS
        assert obj["algebra_name"] == "h_1"
        assert obj["q"] == rep.q
        assert obj["dim_cohomology"] == rep.dim_cohomology
        assert obj["method"] == "rank"


def test_emit_text_layout():
    reports = betti_table(make_heisenberg_odd(1), 1)
    lines = emit_report(reports, "text").decode().splitlines()
    assert lines[0].split() == list(CSV_FIELDS)
    assert lines[1].split() == ["h_1", "0", "1", "1", "0", "1", "rank"]
    assert lines[2].split() == ["h_1", "1", "3", "2", "0", "2", "rank"]


def test_emit_is_deterministic():
    reports = betti_table(make_heisenberg_even(1, 1), 3)
    for fmt in ("json", "csv", "text"):
        assert emit_report(reports, fmt) == emit_report(reports, fmt)
    with pytest.raises(ValueError):
        emit_report(reports, "yaml")
