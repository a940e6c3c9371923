import cmath
import math

import pytest
from hypothesis import given, strategies as st

from seqroots.errors import DegenerateGuessError, ParameterError
from seqroots.initializer import (Circle, Explicit, Spiral, UnitCircle, check_distinct, circle,
                                  initial_guesses, spiral, unit_circle)


def test_unit_circle_small():
    assert unit_circle(1) == [1 + 0j]
    for got, want in zip(unit_circle(4), [1, 1j, -1, -1j]):
        assert abs(got.real - want.real) <= 1e-15 and abs(got.imag - want.imag) <= 1e-15


def test_unit_circle_twenty():
    pts = unit_circle(20)
    assert len(pts) == 20
    for m, z in enumerate(pts):
        assert abs(abs(z) - 1) <= 1e-15
        nxt = pts[(m + 1) % 20]
        gap = (cmath.phase(nxt) - cmath.phase(z)) % (2 * math.pi)
        assert gap == pytest.approx(2 * math.pi / 20, abs=1e-14)


def test_circle():
    for got, want in zip(circle(4, 2), [2, 2j, -2, -2j]):
        assert abs(got - want) <= 2e-15
    assert circle(20, 1.0) == unit_circle(20)
    assert all(abs(abs(z) - 0.8) <= 1e-15 for z in circle(20, 0.8))
    with pytest.raises(ParameterError):
        circle(3, 0)
    with pytest.raises(ParameterError):
        Circle(-1.0)


def test_spiral():
    pts = spiral(2, 0.5, 1.5)
    assert pts[0] == 0.5
    assert abs(pts[1] - (-1.5)) <= 1e-15
    pts = spiral(20, 0.5, 1.5)
    assert pts[0] == 0.5 + 0j
    assert abs(pts[-1]) == pytest.approx(1.5, rel=1e-15)
    assert cmath.phase(pts[-1]) % (2 * math.pi) == pytest.approx(2 * math.pi * 19 / 20)
    with pytest.raises(ParameterError):
        spiral(1, 0.5, 1.5)


@given(st.integers(2, 400), st.floats(0.1, 3), st.floats(0.1, 3))
def test_spiral_distinct_and_endpoints(n, r0, r1):
    pts = spiral(n, r0, r1)
    # brute-force pairwise check
    assert min(abs(a - b) for i, a in enumerate(pts) for b in pts[i + 1:]) > 0
    assert abs(pts[0]) == pytest.approx(r0, rel=1e-15)
    assert abs(pts[-1]) == pytest.approx(r1, rel=1e-15)


def test_check_distinct():
    with pytest.raises(DegenerateGuessError) as info:
        check_distinct([1, 1], 1e-12)
    assert info.value.pair == (0, 1)
    check_distinct(unit_circle(20), 1e-12)
    with pytest.raises(DegenerateGuessError):
        check_distinct([0, 1e-13], 1e-12)


def test_check_distinct_reports_first_pair():
    with pytest.raises(DegenerateGuessError) as info:
        check_distinct([5, 2, 3j, 2, 5], 1e-12)
    assert info.value.pair == (0, 4)


@pytest.mark.parametrize("n", [1, 2, 20, 999, 10_000])
def test_strategies_are_distinct(n):
    check_distinct(unit_circle(n), 1e-12)
    check_distinct(circle(n, 0.2), 1e-12)
    if n >= 2:
        check_distinct(spiral(n, 0.5, 1.5), 1e-12)


def test_initial_guesses():
    assert initial_guesses(None, 3) == unit_circle(3)
    assert initial_guesses(Spiral(), 5) == spiral(5, 0.5, 1.5)
    assert initial_guesses([1, 2, 3], 3) == [1, 2, 3]
    with pytest.raises(ParameterError):
        initial_guesses(Explicit([1, 2]), 3)
    with pytest.raises(DegenerateGuessError):
        initial_guesses(Explicit([1, 2, 1]), 3)
    assert UnitCircle().describe() == "unit-circle"
