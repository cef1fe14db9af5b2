"""Exact complex scalar arithmetic and the rational-string grammar."""

from __future__ import annotations

from fractions import Fraction

import pytest

from graphfp import ExactComplex, FormatError, format_rational, parse_rational
from graphfp.scalars import I, ONE, ZERO, scalar_from_json, scalar_to_json


@pytest.mark.parametrize(
    "text,value",
    [
        ("0", Fraction(0)),
        ("3", Fraction(3)),
        ("-7", Fraction(-7)),
        ("+5", Fraction(5)),
        ("1/2", Fraction(1, 2)),
        ("-3/6", Fraction(-1, 2)),
        ("10/4", Fraction(5, 2)),
    ],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1.5", "1/0", "a", "1/ 2", "1//2", "2/-3", " 1"])
def test_parse_rational_rejects(text):
    with pytest.raises(FormatError):
        parse_rational(text)


def test_format_round_trip():
    for num in (-9, -1, 0, 1, 7):
        for den in (1, 2, 3, 5):
            f = Fraction(num, den)
            assert parse_rational(format_rational(f)) == f


def test_field_operations():
    a = ExactComplex(Fraction(1, 2), Fraction(3))
    b = ExactComplex(Fraction(2), Fraction(-1, 3))
    assert a + b == ExactComplex(Fraction(5, 2), Fraction(8, 3))
    assert a - b == ExactComplex(Fraction(-3, 2), Fraction(10, 3))
    # (1/2 + 3i)(2 - i/3) = 1 + 1/6 i + 6i + 1 = 2 + 37/6 i
    assert a * b == ExactComplex(Fraction(2), Fraction(35, 6))


def test_multiplication_against_builtin_complex():
    a = ExactComplex(Fraction(1, 2), Fraction(3))
    b = ExactComplex(Fraction(2), Fraction(-1, 3))
    assert complex(a * b) == complex(a) * complex(b)


def test_conjugate_and_negation():
    a = ExactComplex(Fraction(2, 3), Fraction(-5))
    assert a.conjugate() == ExactComplex(Fraction(2, 3), Fraction(5))
    assert -a == ExactComplex(Fraction(-2, 3), Fraction(5))
    assert (a * a.conjugate()).im == 0


def test_units_and_zero():
    assert ZERO.is_zero() and not bool(ZERO)
    assert not ONE.is_zero() and bool(ONE)
    assert I * I == -ONE


def test_of_coercion():
    assert ExactComplex.of(3) == ExactComplex(Fraction(3), Fraction(0))
    assert ExactComplex.of(Fraction(1, 4)).re == Fraction(1, 4)
    x = ExactComplex(Fraction(1), Fraction(2))
    assert ExactComplex.of(x) is x


def test_json_round_trip():
    x = ExactComplex(Fraction(-7, 3), Fraction(1, 2))
    assert scalar_from_json(scalar_to_json(x)) == x
    assert scalar_to_json(x) == {"re": "-7/3", "im": "1/2"}


def test_json_shape_errors():
    with pytest.raises(FormatError):
        scalar_from_json(["1", "2"])
    with pytest.raises(FormatError):
        scalar_from_json({"re": "1.5", "im": "0"})
