"""Exact scalar arithmetic."""

from fractions import Fraction

import pytest

from matorder.scalars import (GR_ONE, GR_ZERO, GaussianRational, as_rational,
                              gaussian, rational_str, to_fraction)


def test_construction_accepts_int_str_fraction():
    assert GaussianRational(2).re == 2
    assert GaussianRational("3/4").re == Fraction(3, 4)
    assert GaussianRational(Fraction(-1, 2), 5).im == 5


def test_as_rational_refuses_float():
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_rational_str_is_reduced_with_positive_denominator():
    assert rational_str(as_rational(Fraction(2, 4))) == "1/2"
    assert rational_str(as_rational(Fraction(-3, 6))) == "-1/2"
    assert rational_str(as_rational(7)) == "7/1"


def test_arithmetic_matches_complex_arithmetic():
    a = gaussian("1/2", "1/3")
    b = gaussian(-2, "5/7")
    for op in ("__add__", "__sub__", "__mul__", "__truediv__"):
        got = getattr(a, op)(b)
        want = getattr(complex(a), op)(complex(b))
        assert abs(complex(got) - want) < 1e-12


def test_division_is_exact():
    a = gaussian(1, 1)
    b = gaussian(1, -1)
    q = a / b
    assert q == gaussian(0, 1)
    assert q * b == a


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        gaussian(1) / GR_ZERO


def test_conjugate_and_abs_sq():
    z = gaussian("2/3", "-1/5")
    assert z.conjugate() == gaussian("2/3", "1/5")
    assert z.abs_sq() == Fraction(4, 9) + Fraction(1, 25)
    assert (z * z.conjugate()).re == z.abs_sq()


def test_equality_across_types_and_hash():
    assert gaussian(3) == 3
    assert gaussian("1/2") == Fraction(1, 2)
    assert gaussian(3, 1) != 3
    assert hash(gaussian(2, 5)) == hash(gaussian(2, 5))
    assert GR_ONE == 1 and not GR_ZERO


def test_str_forms():
    assert str(gaussian(2)) == "2"
    assert str(gaussian(0, "1/2")) == "1/2i"
    assert str(gaussian(1, -1)) == "1-1i"


def test_to_fraction_round_trip():
    q = as_rational("22/7")
    assert to_fraction(q) == Fraction(22, 7)
