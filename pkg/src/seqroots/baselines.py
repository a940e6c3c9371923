"""Reference root finders to compare the sequential scheme against.

* Jacobi-style Weierstrass (Durand-Kerner): every correction in a round is
  computed from the previous round's vector.
* Newton with staged deflation: find one root, divide it out, repeat; the
  last root comes from the exact-factorisation identity, then every root
  gets one Newton polish against the original polynomial.
"""

from __future__ import annotations

import enum
from typing import Optional, Sequence

from .errors import CollisionError, IterationError
from .initializer import DEFAULT_MIN_SEP, InitStrategy, initial_guesses
from .poly import Polynomial, deflate, eval_poly, eval_with_derivative
from .solver import (DEFAULT_COLLISION_EPS, SolveResult, SolverConfig, Trace, closed_form,
                     iterate, residuals_of, weierstrass_step)

NEWTON_STEP_RTOL = 1e-15


class BaselineKind(enum.Enum):
    JACOBI_WEIERSTRASS = "jacobi"
    NEWTON_DEFLATION = "newton"


def jacobi_weierstrass_round(p: Polynomial, estimates: Sequence[complex], steps: int = 1,
                             collision_eps: float = DEFAULT_COLLISION_EPS,
                             trace: Optional[Trace] = None, round: int = 0) -> list[complex]:
    """Correct every root against the *old* estimate vector."""
    old = list(estimates)
    new = []
    for i, s in enumerate(old):
        others = old[:i] + old[i + 1:]
        try:
            for k in range(1, steps + 1):
                s = weierstrass_step(p, s, others, collision_eps)
                if trace is not None:
                    trace.record(round, i, k, abs(eval_poly(p, s)))
        except IterationError as exc:
            raise exc.locate(root_index=i)
        new.append(s)
    return new


def jacobi_weierstrass_solve(p: Polynomial, init: InitStrategy | Sequence[complex] | None = None,
                             config: Optional[SolverConfig] = None) -> SolveResult:
    config = config or SolverConfig()
    if p.degree <= 2:
        roots = closed_form(p)
        return SolveResult(roots, residuals_of(p, roots), 0, 0, True, method="jacobi")
    start = initial_guesses(init, p.degree, DEFAULT_MIN_SEP)
    return iterate(p, start, config, jacobi_weierstrass_round, method="jacobi")


def last_root(p: Polynomial, known_roots: Sequence[complex], z_tilde,
              collision_eps: float = DEFAULT_COLLISION_EPS) -> complex:
    """Recover the one missing root from the other ``n - 1``.

    ``z_tilde - P(z_tilde) / prod(z_tilde - known)`` is exact for any
    ``z_tilde`` when the known roots are exact.
    """
    z = complex(z_tilde)
    denom = 1 + 0j
    for j, r in enumerate(known_roots):
        d = z - r
        if abs(d) < collision_eps:
            raise CollisionError(j, z)
        denom *= d
    return z - eval_poly(p, z) / denom


def _newton(q: Polynomial, z: complex, max_steps: int, collision_eps: float):
    """Newton on ``q`` from ``z``; returns ``(z, steps, converged)``."""
    for k in range(1, max_steps + 1):
        f, df = eval_with_derivative(q, z)
        if f == 0:
            return z, k - 1, True
        if abs(df) < collision_eps:
            raise CollisionError(-1, z)
        dz = f / df
        z = z - dz
        if abs(dz) <= NEWTON_STEP_RTOL * max(abs(z), collision_eps):
            return z, k, True
    return z, max_steps, False


def newton_deflation_solve(p: Polynomial, init: InitStrategy | Sequence[complex] | None = None,
                           config: Optional[SolverConfig] = None) -> SolveResult:
    """Staged deflation with Newton, started from the same guesses as :func:`solve`.

    Each root gets at most ``N * J`` Newton steps; missing that budget is
    reported via ``converged=False``. ``total_steps`` counts Newton steps
    actually taken, including the final polish.
    """
    config = config or SolverConfig()
    n = p.degree
    if n == 1:
        roots = closed_form(p)
        return SolveResult(roots, residuals_of(p, roots), 0, 0, True, method="newton")
    guesses = initial_guesses(init, n, DEFAULT_MIN_SEP)
    budget = config.steps_per_root * config.max_rounds
    q = p
    found = []
    steps = 0
    converged = True
    for m in range(n - 1):
        try:
            z, k, ok = _newton(q, guesses[m], budget, config.collision_eps)
        except IterationError as exc:
            raise exc.locate(root_index=m)
        steps += k
        converged &= ok
        found.append(z)
        q = deflate(q, z)
    found.append(last_root(p, found, guesses[n - 1], config.collision_eps))
    polished = []
    for z in found:
        f, df = eval_with_derivative(p, z)
        polished.append(z - f / df if f != 0 and abs(df) >= config.collision_eps else z)
        steps += 1
    return SolveResult(
        roots=polished,
        residuals=residuals_of(p, polished),
        rounds_used=1,
        total_steps=steps,
        converged=converged,
        method="newton",
    )
