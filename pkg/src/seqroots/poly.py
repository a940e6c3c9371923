"""Monic complex polynomials: representation, Horner evaluation, expansion.

Coefficients are stored constant term first, ``coeffs[m] = a_m`` for
``m = 0 .. n-1``; the leading coefficient of ``z**n`` is an implicit 1.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateDegreeError, ParameterError, PolynomialOverflowError

LEADING_EPS = 1e-300


def _as_complex(values: Iterable, what: str) -> tuple[complex, ...]:
    out = tuple(complex(v) for v in values)
    for v in out:
        if not cmath.isfinite(v):
            raise ParameterError(f"non-finite {what}: {v!r}")
    return out


@dataclass(frozen=True)
class Polynomial:
    """Monic polynomial ``z**n + sum(a_m z**m)``.

    Degree is fixed by ``len(coeffs)``; a zero constant term is kept and
    simply means a root at the origin.
    """

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Iterable):
        c = _as_complex(coeffs, "coefficient")
        if not c:
            raise ParameterError("a monic polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def __call__(self, z) -> complex:
        return eval_poly(self, z)

    def __len__(self) -> int:
        return len(self.coeffs)


def eval_poly(p: Polynomial, z) -> complex:
    """Evaluate ``p`` at ``z`` by Horner's rule from the leading 1 downward."""
    z = complex(z)
    acc = 1 + 0j
    for a in reversed(p.coeffs):
        acc = acc * z + a
    if not cmath.isfinite(acc):
        raise PolynomialOverflowError(abs(z), p.degree)
    return acc


def eval_with_derivative(p: Polynomial, z) -> tuple[complex, complex]:
    """Return ``(p(z), p'(z))`` from coupled Horner recurrences.

    The value component is bit-identical to :func:`eval_poly`.
    """
    z = complex(z)
    acc = 1 + 0j
    der = 0j
    for a in reversed(p.coeffs):
        der = der * z + acc
        acc = acc * z + a
    if not (cmath.isfinite(acc) and cmath.isfinite(der)):
        raise PolynomialOverflowError(abs(z), p.degree)
    return acc, der


def from_roots(roots: Sequence) -> Polynomial:
    """Expand ``prod(z - r)`` left to right by synthetic multiplication."""
    rs = _as_complex(roots, "root")
    if not rs:
        raise ParameterError("from_roots needs at least one root")
    # c holds the expanding product, constant term first, leading 1 last
    c = [1 + 0j]
    for r in rs:
        nxt = [0j] * (len(c) + 1)
        for k, ck in enumerate(c):
            nxt[k + 1] += ck
            nxt[k] -= r * ck
        c = nxt
    return Polynomial(c[:-1])


def to_monic(raw: Sequence) -> Polynomial:
    """Normalise a leading-first coefficient list ``[c_n, ..., c_0]``."""
    vals = _as_complex(raw, "coefficient")
    if len(vals) < 2:
        raise DegenerateDegreeError("need at least two coefficients for degree >= 1")
    lead = vals[0]
    if abs(lead) <= LEADING_EPS:
        raise DegenerateDegreeError(f"leading coefficient {lead!r} is zero")
    return Polynomial(v / lead for v in reversed(vals[1:]))


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    """Product of two monic polynomials by coefficient convolution."""
    a = list(p.coeffs) + [1 + 0j]
    b = list(q.coeffs) + [1 + 0j]
    out = [0j] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return Polynomial(out[:-1])


def deflate(p: Polynomial, root) -> Polynomial:
    """Divide out ``(z - root)`` by synthetic division, dropping the remainder.

    Returns the monic quotient of degree ``n - 1``; ``p`` must have degree
    at least 2.
    """
    if p.degree < 2:
        raise ParameterError("cannot deflate a linear polynomial")
    root = complex(root)
    # quotient coefficients from the top: b_{n-1} = 1, b_{k-1} = a_k + root*b_k
    b = 1 + 0j
    out = []
    for a in reversed(p.coeffs[1:]):
        b = a + root * b
        out.append(b)
    return Polynomial(reversed(out))
