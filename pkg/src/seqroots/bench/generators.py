"""Seeded test-polynomial generators.

Randomness comes from ``numpy.random.default_rng(seed)`` (PCG64). The same
seed always gives the same coefficients with a given numpy version;
streams are not meant to match other implementations.
"""

from __future__ import annotations

import numpy as np

from ..errors import ParameterError
from ..poly import Polynomial, from_roots, multiply

DEGENERATE_COFACTOR_RANGE = (-0.5, 0.5)


def gen_random_poly(degree: int, lo: float = -5.0, hi: float = 5.0, seed: int = 0) -> Polynomial:
    """Monic polynomial whose coefficients have uniform real and imaginary parts in ``[lo, hi)``."""
    if degree < 1:
        raise ParameterError(f"degree must be >= 1, got {degree}")
    if not lo < hi:
        raise ParameterError(f"need lo < hi, got [{lo}, {hi}]")
    rng = np.random.default_rng(seed)
    re = rng.uniform(lo, hi, degree)
    im = rng.uniform(lo, hi, degree)
    return Polynomial(complex(a, b) for a, b in zip(re.tolist(), im.tolist()))


def make_degenerate_poly(root, multiplicity: int, degree: int, seed: int = 0,
                         lo: float = DEGENERATE_COFACTOR_RANGE[0],
                         hi: float = DEGENERATE_COFACTOR_RANGE[1]) -> Polynomial:
    """``(z - root)**k`` times a random monic cofactor of degree ``n - k``.

    The cofactor's coefficients are drawn in ``[lo, hi)``; the narrow
    default keeps its roots near the unit circle, where double-precision
    residuals stay around ``1e-13``.
    """
    if multiplicity < 2:
        raise ParameterError(f"multiplicity must be >= 2, got {multiplicity}")
    if not multiplicity < degree:
        raise ParameterError(f"multiplicity {multiplicity} must be below degree {degree}")
    repeated = from_roots([complex(root)] * multiplicity)
    cofactor = gen_random_poly(degree - multiplicity, lo, hi, seed)
    return multiply(repeated, cofactor)
