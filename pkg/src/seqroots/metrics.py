"""Accuracy measures for computed root sets.

Per-root accuracy is the residual ``|P(z)|``. Two whole-solution checks come
from the root/coefficient relations: the roots must sum to ``-a_{n-1}`` and
multiply to ``(-1)**n a_0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import MeasureOverflowError, ParameterError
from .poly import Polynomial, eval_poly


@dataclass(frozen=True)
class AccuracyReport:
    sorted_residuals: list[float]
    min: float
    max: float
    mean: float
    global_sum_measure: float
    global_product_measure: float
    product_overflow: bool = False


def residual_set(p: Polynomial, roots: Sequence[complex]) -> list[float]:
    return sorted(abs(eval_poly(p, r)) for r in roots)


def global_sum_measure(p: Polynomial, roots: Sequence[complex]) -> float:
    return abs(p.coeffs[-1] + sum(complex(r) for r in roots))


def global_product_measure(p: Polynomial, roots: Sequence[complex]) -> float:
    """``|(-1)**n a_0 - prod(roots)|``; raises if the product leaves double range."""
    prod = 1 + 0j
    for r in roots:
        prod *= complex(r)
        if not (math.isfinite(prod.real) and math.isfinite(prod.imag)):
            raise MeasureOverflowError(f"root product overflows after factor {r!r}")
    sign = -1 if p.degree % 2 else 1
    out = abs(sign * p.coeffs[0] - prod)
    if not math.isfinite(out):
        raise MeasureOverflowError("product measure is not finite")
    return out


def relative_residual(p: Polynomial, z) -> float:
    """Backward-error style residual ``|P(z)| / (|z|**n + sum |a_m| |z|**m)``."""
    z = complex(z)
    az = abs(z)
    scale = 1.0
    for a in reversed(p.coeffs):
        scale = scale * az + abs(a)
    if scale == 0:
        return 0.0
    return abs(eval_poly(p, z)) / scale


def summarize(p: Polynomial, roots: Sequence[complex]) -> AccuracyReport:
    """Collect residual statistics and both global measures.

    The mean leaves out residuals that are exactly zero.
    """
    if len(roots) == 0:
        raise ParameterError("no roots to summarise")
    res = residual_set(p, roots)
    nonzero = [r for r in res if r > 0]
    mean = sum(nonzero) / len(nonzero) if nonzero else 0.0
    try:
        prod = global_product_measure(p, roots)
        overflow = False
    except MeasureOverflowError:
        prod, overflow = math.inf, True
    return AccuracyReport(
        sorted_residuals=res,
        min=res[0],
        max=res[-1],
        mean=mean,
        global_sum_measure=global_sum_measure(p, roots),
        global_product_measure=prod,
        product_overflow=overflow,
    )


def match_roots(found: Sequence[complex], reference: Sequence[complex]):
    """Pair two root lists by minimum total distance.

    Returns ``(pairs, distances)`` where ``pairs[k] = (i, j)`` links
    ``found[i]`` with ``reference[j]``.
    """
    a = np.asarray(found, dtype=complex)
    b = np.asarray(reference, dtype=complex)
    if a.shape != b.shape:
        raise ParameterError(f"root lists differ in length: {a.size} vs {b.size}")
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return list(zip(rows.tolist(), cols.tolist())), cost[rows, cols]
