import json

import pytest
from hypothesis import given, settings, strategies as st

from weldlink.model import GaussCode, OVER, Passage, SolidRibbonData, Torus, UNDER
from weldlink.textio import (
    ParseError,
    code_from_json,
    code_to_json,
    emit_gauss_text,
    emit_ribbon_text,
    parse_gauss_text,
    parse_ribbon_text,
    ribbon_from_json,
    ribbon_to_json,
)

from helpers import enumerate_ribbons, random_code, seeded_rng


def test_parse_simple_code():
    code = parse_gauss_text("O1+ U2+ ; U1+ O2+")
    assert code.components == (
        (Passage(1, OVER, 1), Passage(2, UNDER, 1)),
        (Passage(1, UNDER, 1), Passage(2, OVER, 1)),
    )


def test_parse_empty_string_is_zero_components():
    assert parse_gauss_text("") == GaussCode(())


def test_parse_single_semicolon_is_one_empty_component():
    assert parse_gauss_text(";") == GaussCode(((),))


def test_emit_trailing_semicolon_for_final_empty_component():
    assert emit_gauss_text(GaussCode(((),))) == ";"
    assert emit_gauss_text(GaussCode(((), ()))) == "; ;"
    assert emit_gauss_text(GaussCode(())) == ""


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_gauss_text("O1+\nU2+ Q3-")
    assert info.value.line == 2
    assert info.value.column == 5


def test_gauss_text_round_trip_preserves_rotation():
    text = "U2+ O1+ U1+ O2+"
    assert emit_gauss_text(parse_gauss_text(text)) == text


def test_parse_ribbon_fig_shape():
    data = parse_ribbon_text("E3 C1 C2 ; E1 C3 ; E2 | 1:+ 2:+ 3:+")
    assert data.tori == (
        Torus((3,), (frozenset({1, 2}),)),
        Torus((1,), (frozenset({3}),)),
        Torus((2,), (frozenset(),)),
    )
    assert data.signs == {1: 1, 2: 1, 3: 1}


def test_parse_ribbon_default_signs_positive():
    data = parse_ribbon_text("E1 C1")
    assert data.signs == {1: 1}


def test_parse_ribbon_leading_contractibles_wrap():
    # a leading C run belongs to the chamber after the last essential
    data = parse_ribbon_text("C2 E1 E2 C1 | 1:+ 2:+")
    assert data.tori[0] == Torus((1, 2), (frozenset(), frozenset({1, 2})))


def test_parse_ribbon_all_contractible_torus():
    data = parse_ribbon_text("C1 ; E1 | 1:-")
    assert data.tori[0] == Torus((), (frozenset({1}),))
    assert data.signs == {1: -1}


def test_parse_ribbon_single_semicolon():
    data = parse_ribbon_text(";")
    assert data.tori == (Torus((), ()),)


def test_ribbon_text_round_trip_exhaustive_small():
    for k, t in ((0, 1), (1, 1), (2, 1), (1, 2), (2, 2)):
        for data in enumerate_ribbons(k, t):
            text = emit_ribbon_text(data)
            assert parse_ribbon_text(text) == data, text


def test_json_round_trip_code():
    rng = seeded_rng("json-code")
    for _ in range(100):
        code = random_code(rng)
        blob = code_to_json(code)
        again = code_from_json(blob)
        assert again.components == code.components
        obj = json.loads(blob)
        assert obj["format"] == "weldlink/gauss-code"
        assert obj["version"] == 1


def test_json_round_trip_ribbon():
    for data in enumerate_ribbons(2, 2):
        assert ribbon_from_json(ribbon_to_json(data)) == data


def test_json_rejects_wrong_format():
    blob = code_to_json(GaussCode(((),)))
    with pytest.raises(ValueError):
        ribbon_from_json(blob)


@st.composite
def gauss_codes(draw):
    rng = seeded_rng(str(draw(st.integers(0, 10**9))))
    return random_code(rng)


@settings(max_examples=60, deadline=None)
@given(gauss_codes())
def test_text_round_trip_property(code):
    assert parse_gauss_text(emit_gauss_text(code)).components == code.components
