import pytest

from reducibility.demo import EX41, EX42, bundled_path
from reducibility.errors import ParseError
from reducibility.ringfile import format_ring_file, load_ring_file, parse_ring_file

BUNDLED = [EX41, *EX42.values()]


@pytest.mark.parametrize("name", BUNDLED)
def test_round_trip(name):
    rf = load_ring_file(bundled_path(name))
    again = parse_ring_file(format_ring_file(rf))
    assert again == rf
    assert format_ring_file(again) == format_ring_file(rf)


def test_subalgebra_file():
    rf = parse_ring_file("""
        # comment
        ring Q[s,t];
        subalgebra A = s^2, s*t, t^2;
        ideal q = s^2, t^2;   # trailing
    """)
    assert rf.subalgebra_generators == ((2, 0), (1, 1), (0, 2))
    ctx = rf.context()
    assert ctx.ring.names == ("a1", "a2", "a3")
    assert ctx.format_ideal(ctx.ideal("q")) == "(s^2, t^2)"
    assert ctx.format_ideal(ctx.ideal("m")) == "(s^2, s*t, t^2)"
    assert ctx.format_ideal(ctx.ideal("0")) == "(0)"
    assert ctx.format_ideal(ctx.ideal("s^4, s^3*t")) == "(s^4, s^3*t)"


def test_quotient_file():
    rf = parse_ring_file("quotient R = Q[x,y] / (x^2, x*y);\nideal p = y;")
    ctx = rf.context()
    assert ctx.ring.dimension == 1
    assert ctx.format_element(ctx.elements("p")[0]) == "y"
    assert parse_ring_file("quotient R = Q[x,y];").relations == ()


@pytest.mark.parametrize("text", [
    "ring Q[s,t]",
    "ideal q = s;",
    "ring Q[s,t]; subalgebra A = s + t;",
    "ring Q[s,t]; ring Q[x];",
    "ring Q[s,t]; ideal q = s; ideal q = t;",
    "ring Q[s,t]; frobnicate;",
    "ring Q[s,t]; subalgebra A = s, , t;",
    "quotient R = Q[x] / (x^2); quotient S = Q[x];",
    "",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ring_file(text)


def test_unknown_ideal_name():
    ctx = load_ring_file(bundled_path(EX41)).context()
    with pytest.raises(ParseError):
        ctx.ideal("nonexistent_name")
