from pathlib import Path

import pytest
from hypothesis import given

from surfcob.notation import ParseError, parse_surface
from surfcob.surface import PROJECTIVE_PLANE as RP2, SPHERE, Surface, nonorientable

from strategies import surfaces

GOLDEN = Path(__file__).parent / "golden" / "notation.txt"


def test_examples():
    assert parse_surface("RP2 + RP2") == Surface([RP2, RP2])
    assert parse_surface("T2 # RP2") == Surface([nonorientable(3)])
    assert parse_surface("O0") == Surface([SPHERE])


def _golden_cases():
    return [line.split("\t") for line in GOLDEN.read_text(encoding="utf-8").splitlines()]


@pytest.mark.parametrize("source, canonical", _golden_cases())
def test_golden_round_trip(source, canonical):
    assert str(parse_surface(source)) == canonical
    assert str(parse_surface(canonical)) == canonical


@given(surfaces(max_size=5))
def test_print_parse_fixed_point(s):
    text = str(s)
    assert parse_surface(text) == s
    assert str(parse_surface(text)) == text


def test_parse_returns_canonical_order():
    s = parse_surface("N2 + O1")
    assert s.components == tuple(sorted(s.components))


@pytest.mark.parametrize(
    "text, offset, message",
    [
        ("N0", 0, "non-orientable genus must be >= 1"),
        ("", 0, "expected a surface"),
        ("RP2 +", 5, "expected a surface"),
        ("RP2 + X", 6, "unexpected character"),
        ("O1 O2", 3, "expected '\\+' or '#'"),
        ("S2 # ", 5, "expected a surface"),
    ],
)
def test_syntax_errors(text, offset, message):
    with pytest.raises(ParseError, match=message) as info:
        parse_surface(text)
    assert info.value.offset == offset


def test_error_offsets_are_bytes():
    # U+3000 is whitespace and three bytes long in UTF-8
    with pytest.raises(ParseError) as info:
        parse_surface("\u3000N0")
    assert info.value.offset == 3
    with pytest.raises(ParseError) as info:
        parse_surface("N1 + \u00e9")
    assert info.value.offset == 5
