from fractions import Fraction

from weldlink.planar import emit_svg, realize_planar
from weldlink.textio import parse_gauss_text

from helpers import random_code, seeded_rng, small_codes


def test_kink_needs_no_virtuals():
    d = realize_planar(parse_gauss_text("O1+ U1+"))
    assert len(d.classicals) == 1
    assert d.virtuals == ()


def test_two_component_single_crossing_forces_virtuals():
    # two closed curves sharing exactly one transverse double point cannot be
    # drawn without extra intersections
    d = realize_planar(parse_gauss_text("O1+ ; U1+"))
    assert len(d.virtuals) >= 1


def test_read_out_identity_small():
    for code in small_codes(2, 2):
        assert realize_planar(code).read_out() == code


def test_read_out_identity_random():
    rng = seeded_rng("planar")
    for _ in range(60):
        code = random_code(rng, max_crossings=5)
        assert realize_planar(code).read_out() == code


def test_free_loops_for_empty_components():
    d = realize_planar(parse_gauss_text("; ;"))
    assert len(d.free_loops) == 2
    assert d.classicals == () and d.edges == ()


def test_exact_coordinates():
    d = realize_planar(parse_gauss_text("O1+ U2+ O2+ U1+"))
    for e in d.edges:
        for x, y in e.points:
            assert isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction))


def test_virtuals_are_strand_interior_points():
    d = realize_planar(parse_gauss_text("O1- ; U1-"))
    for p in d.virtuals:
        assert len(p) == 2


def test_svg_deterministic_and_annotated():
    code = parse_gauss_text("O1+ U2+ O2+ U1+")
    a = emit_svg(realize_planar(code))
    b = emit_svg(realize_planar(code))
    assert a == b
    text = a.decode("utf-8")
    assert text.startswith('<?xml version="1.0"')
    assert 'data-classical="2"' in text
    assert "data-virtual=" in text
    assert text.count('class="classical"') == 2
    assert text.count('class="under-half"') == 4
    assert text.count('class="overstrand"') == 2


def test_svg_counts_match_diagram():
    d = realize_planar(parse_gauss_text("O1+ ; U1+"))
    text = emit_svg(d).decode("utf-8")
    assert ('data-virtual="%d"' % len(d.virtuals)) in text


def test_svg_free_loop_circle():
    text = emit_svg(realize_planar(parse_gauss_text(";"))).decode("utf-8")
    assert 'class="free-loop"' in text
