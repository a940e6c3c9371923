"""Initial guess sets for the simultaneous iteration.

The iteration cannot start from coincident guesses, so every strategy's
output is checked with :func:`check_distinct` before use.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateGuessError, ParameterError

DEFAULT_MIN_SEP = 1e-12


def unit_circle(n: int) -> list[complex]:
    """``n`` equally spaced points ``exp(2*pi*i*m/n)`` in index order."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return [cmath.exp(2j * math.pi * m / n) for m in range(n)]


def circle(n: int, r: float) -> list[complex]:
    """Unit-circle points scaled to radius ``r``."""
    if not r > 0:
        raise ParameterError(f"circle radius must be positive, got {r}")
    r = float(r)
    return [r * z for z in unit_circle(n)]


def spiral(n: int, r_start: float, r_end: float) -> list[complex]:
    """One full turn on the unit-circle angular grid, radius growing linearly.

    Point ``m`` sits at angle ``2*pi*m/n`` with radius interpolated from
    ``r_start`` (m = 0) to ``r_end`` (m = n - 1).
    """
    if n < 2:
        raise ParameterError(f"spiral needs n >= 2, got {n}")
    if not (r_start > 0 and r_end > 0):
        raise ParameterError("spiral radii must be positive")
    pts = []
    for m, z in enumerate(unit_circle(n)):
        rho = r_start + (r_end - r_start) * m / (n - 1)
        pts.append(rho * z)
    return pts


def check_distinct(points: Sequence[complex], min_sep: float = DEFAULT_MIN_SEP) -> None:
    """Raise :class:`DegenerateGuessError` if any two points are closer than ``min_sep``.

    The reported pair is the lexicographically first offending ``(i, j)``.
    Points are swept in order of real part, so well-separated sets cost
    ``O(n log n)``.
    """
    if not points:
        raise ParameterError("no points to check")
    pts = [complex(p) for p in points]
    order = sorted(range(len(pts)), key=lambda k: pts[k].real)
    worst = None
    for a, i in enumerate(order):
        for j in order[a + 1:]:
            if pts[j].real - pts[i].real >= min_sep:
                break
            d = abs(pts[i] - pts[j])
            if d < min_sep:
                pair = (min(i, j), max(i, j))
                if worst is None or pair < worst[0]:
                    worst = (pair, d)
    if worst is not None:
        (i, j), d = worst
        raise DegenerateGuessError(i, j, d, min_sep)


class InitStrategy:
    """Base class; subclasses produce ``n`` initial guesses."""

    def points(self, n: int) -> list[complex]:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class UnitCircle(InitStrategy):
    def points(self, n):
        return unit_circle(n)

    def describe(self):
        return "unit-circle"


@dataclass(frozen=True)
class Circle(InitStrategy):
    r: float

    def __post_init__(self):
        if not self.r > 0:
            raise ParameterError(f"circle radius must be positive, got {self.r}")

    def points(self, n):
        return circle(n, self.r)

    def describe(self):
        return f"circle:{self.r!r}"


@dataclass(frozen=True)
class Spiral(InitStrategy):
    r_start: float = 0.5
    r_end: float = 1.5

    def __post_init__(self):
        if not (self.r_start > 0 and self.r_end > 0):
            raise ParameterError("spiral radii must be positive")

    def points(self, n):
        return spiral(n, self.r_start, self.r_end)

    def describe(self):
        return f"spiral:{self.r_start!r},{self.r_end!r}"


@dataclass(frozen=True)
class Explicit(InitStrategy):
    values: tuple[complex, ...]

    def __init__(self, values):
        object.__setattr__(self, "values", tuple(complex(v) for v in values))

    def points(self, n):
        if len(self.values) != n:
            raise ParameterError(
                f"explicit guess list has {len(self.values)} points, polynomial degree is {n}"
            )
        return list(self.values)

    def describe(self):
        return "explicit"


def initial_guesses(strategy: InitStrategy | Sequence[complex] | None, n: int,
                    min_sep: float = DEFAULT_MIN_SEP) -> list[complex]:
    """Resolve ``strategy`` to ``n`` validated guesses.

    ``None`` means the unit circle; a plain sequence is treated as explicit
    points.
    """
    if strategy is None:
        strategy = UnitCircle()
    elif not isinstance(strategy, InitStrategy):
        strategy = Explicit(strategy)
    pts = strategy.points(n)
    check_distinct(pts, min_sep)
    return pts
