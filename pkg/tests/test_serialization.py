import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from swtriangle.errors import FormatError
from swtriangle.floer_harness import random_triangle_data
from swtriangle.invariants import random_surgery_problem
from swtriangle.monopole_count import random_partition_curve
from swtriangle.serialization import ComplexFile, CurveFile, dump_path, dumps, load_path, loads
from swtriangle.triangle_enum import random_triangle_config


@given(st.integers(0, 10**6))
def test_surgery_round_trip(seed):
    pr = random_surgery_problem(seed)
    assert loads(dumps(pr)) == pr


@given(st.integers(0, 10**4), st.integers(1, 4))
def test_curve_round_trip(seed, n):
    curve = random_partition_curve(seed, n, 0, 0, Fraction(1, 10), Fraction(1, 2))
    cf = CurveFile(curve, 0, 0, Fraction(1, 10), Fraction(1, 2), (3, 2))
    back = loads(dumps(cf))
    assert back == cf
    assert loads(dumps(curve)).curve == curve


@given(st.integers(0, 10**6))
def test_complex_round_trip(seed):
    cf = ComplexFile.from_data(random_triangle_data(seed))
    assert loads(dumps(cf)) == cf
    assert loads(dumps(random_triangle_data(seed))) == cf


@given(st.integers(0, 200))
def test_triangle_config_round_trip(seed):
    cfg = random_triangle_config(seed)
    assert loads(dumps(cfg)) == cfg


def test_output_is_canonical(tmp_path):
    pr = random_surgery_problem(1)
    text = dumps(pr)
    assert text.endswith("\n") and text == dumps(loads(text))
    doc = json.loads(text)
    assert doc["kind"] == "surgery" and doc["format_version"] == "1"
    path = tmp_path / "p.json"
    dump_path(pr, path)
    assert load_path(path) == pr


def test_syntax_error_has_line_and_column():
    with pytest.raises(FormatError) as info:
        loads('{\n  "kind": "surgery",\n  "body": {"p": 1,}\n}')
    assert info.value.line == 3 and info.value.column == 19
    assert str(info.value).startswith("line 3, column 19:")


def test_bundled_malformed_file(data_dir):
    with pytest.raises(FormatError) as info:
        load_path(data_dir / "malformed.json")
    assert (info.value.line, info.value.column) == (4, 27)


@pytest.mark.parametrize(
    "doc, where",
    [
        ({"format_version": "2", "kind": "surgery", "body": {}}, "$.format_version"),
        ({"format_version": "1", "kind": "knot", "body": {}}, "$.kind"),
        ({"format_version": "1", "kind": "surgery", "body": {"p": 1}}, "$.body"),
        ({"format_version": "1", "kind": "surgery", "body": {"p": "x", "q": 1}}, "$.body.p"),
        ({"format_version": "1", "kind": "surgery", "body": {"p": 1, "q": 1, "lambda_bar_Y": 0.5}}, "$.body.lambda_bar_Y"),
        ({"format_version": "1", "kind": "surgery", "body": {"p": 1, "q": 1, "alexander": {"coeffs": [1, "a"]}}}, "$.body.alexander.coeffs[1]"),
    ],
)
def test_schema_errors_name_the_path(doc, where):
    with pytest.raises(FormatError) as info:
        loads(json.dumps(doc))
    assert where in str(info.value)


def test_floats_are_rejected_for_rationals():
    cf = json.loads(dumps(CurveFile(random_partition_curve(1, 2, 0, 0, Fraction(1, 10)))))
    cf["body"]["eps"] = 0.1
    with pytest.raises(FormatError, match="eps"):
        loads(json.dumps(cf))


def test_rational_strings_accept_integers_and_fractions():
    doc = {"format_version": "1", "kind": "surgery", "body": {"p": 1, "q": 1, "lambda_bar_Y": "-3/4"}}
    assert loads(json.dumps(doc)).lambda_bar_Y == Fraction(-3, 4)
    doc["body"]["lambda_bar_Y"] = 2
    assert loads(json.dumps(doc)).lambda_bar_Y == 2
