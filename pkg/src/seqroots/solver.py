"""Sequential (Gauss-Seidel) Weierstrass iteration with full deflation.

Every root estimate is corrected against all the other current estimates
at once::

    s <- s - P(s) / prod_{j != i} (s - z_j)

Roots are visited in index order and each one is replaced as soon as its
``N`` inner steps finish, so later roots in the same round already see the
improved values of earlier ones. A round is one pass over all ``n`` roots;
the total step count is therefore ``K = n * N * rounds``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .errors import (CollisionError, DivergenceError, IterationError, ParameterError,
                     PolynomialOverflowError)
from .initializer import DEFAULT_MIN_SEP, InitStrategy, initial_guesses
from .poly import Polynomial, eval_poly

DEFAULT_TOL = 1.1e-13
DEFAULT_COLLISION_EPS = 1e-290
DEFAULT_STATIONARY_RTOL = 1e-15
PERTURBATION = 1e-10 * (1 + 1j)


@dataclass(frozen=True)
class Hard:
    """Every residual must be at most the tolerance."""

    def describe(self):
        return "hard"


@dataclass(frozen=True)
class Soft:
    """Mean of the best ``fraction`` of residuals stops changing between rounds."""

    fraction: float = 1.0
    stability_eps: float = 1e-2

    def __post_init__(self):
        if not 0 < self.fraction <= 1:
            raise ParameterError(f"soft fraction must lie in (0, 1], got {self.fraction}")
        if not self.stability_eps > 0:
            raise ParameterError("stability_eps must be positive")

    def describe(self):
        return f"soft:{self.fraction!r},{self.stability_eps!r}"


@dataclass(frozen=True)
class SolverConfig:
    """Iteration schedule and stopping rule.

    ``stationary_rtol`` lets a root whose residual sits above ``tol`` still
    count as settled when its next correction is no larger than
    ``stationary_rtol * |z|``. Large-modulus roots of high-degree
    polynomials need this: their residual cannot drop to ``tol`` in double
    precision. Set it to ``None`` to disable.
    """

    steps_per_root: int = 1
    max_rounds: int = 100
    tol: float = DEFAULT_TOL
    mode: Hard | Soft = field(default_factory=Hard)
    reorder_by_accuracy: bool = False
    collision_eps: float = DEFAULT_COLLISION_EPS
    record_trace: bool = False
    stationary_rtol: Optional[float] = DEFAULT_STATIONARY_RTOL

    def __post_init__(self):
        if int(self.steps_per_root) != self.steps_per_root or self.steps_per_root < 1:
            raise ParameterError(f"steps_per_root must be a positive integer, got {self.steps_per_root}")
        if int(self.max_rounds) != self.max_rounds or self.max_rounds < 1:
            raise ParameterError(f"max_rounds must be a positive integer, got {self.max_rounds}")
        if not self.tol > 0:
            raise ParameterError(f"tol must be positive, got {self.tol}")
        if not self.collision_eps > 0:
            raise ParameterError("collision_eps must be positive")
        if self.stationary_rtol is not None and not self.stationary_rtol > 0:
            raise ParameterError("stationary_rtol must be positive or None")
        if not isinstance(self.mode, (Hard, Soft)):
            raise ParameterError(f"unknown convergence mode {self.mode!r}")


@dataclass(frozen=True)
class TraceEntry:
    round: int
    root_index: int
    step: int
    residual: float


@dataclass
class Trace:
    """Per-step residual history in execution order."""

    entries: list[TraceEntry] = field(default_factory=list)

    def record(self, round, root_index, step, residual):
        self.entries.append(TraceEntry(round, root_index, step, residual))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def series(self, root_index: int) -> list[float]:
        return [e.residual for e in self.entries if e.root_index == root_index]


@dataclass
class SolveResult:
    roots: list[complex]
    residuals: list[float]
    rounds_used: int
    total_steps: int
    converged: bool
    trace: Optional[Trace] = None
    method: str = "sequential"


def weierstrass_step(p: Polynomial, s, others: Sequence[complex],
                     collision_eps: float = DEFAULT_COLLISION_EPS) -> complex:
    """One correction ``s - P(s) / prod(s - others_j)``.

    A collision with one of ``others`` triggers a single deterministic
    nudge of ``s`` before giving up.
    """
    s = complex(s)
    for attempt in range(2):
        denom = 1 + 0j
        hit = None
        for j, z in enumerate(others):
            d = s - z
            if abs(d) < collision_eps:
                hit = j
                break
            denom *= d
        if hit is None:
            break
        if attempt == 1:
            raise CollisionError(hit, s)
        s = s + PERTURBATION
    try:
        value = eval_poly(p, s)
    except PolynomialOverflowError as exc:
        raise DivergenceError(s) from exc
    new = s - value / denom if denom != 0 else complex(math.inf, math.inf)
    if not cmath.isfinite(new):
        raise DivergenceError(s)
    return new


def correction(p: Polynomial, estimates: Sequence[complex], i: int) -> complex:
    """Size-bearing Weierstrass correction for root ``i`` (no collision handling)."""
    s = estimates[i]
    denom = 1 + 0j
    for j, z in enumerate(estimates):
        if j != i:
            denom *= s - z
    num = eval_poly(p, s)
    if num == 0:
        return 0j
    if denom == 0:
        return complex(math.inf, 0)
    return num / denom


def refine_root(p: Polynomial, i: int, estimates: Sequence[complex], steps: int,
                collision_eps: float = DEFAULT_COLLISION_EPS,
                trace: Optional[Trace] = None, round: int = 0) -> complex:
    """Apply ``steps`` corrections to ``estimates[i]``, other estimates held fixed."""
    others = list(estimates[:i]) + list(estimates[i + 1:])
    s = estimates[i]
    try:
        for k in range(1, steps + 1):
            s = weierstrass_step(p, s, others, collision_eps)
            if trace is not None:
                trace.record(round, i, k, abs(eval_poly(p, s)))
    except IterationError as exc:
        raise exc.locate(root_index=i)
    return s


def sweep_round(p: Polynomial, estimates: Sequence[complex], steps: int,
                collision_eps: float = DEFAULT_COLLISION_EPS,
                trace: Optional[Trace] = None, round: int = 0) -> list[complex]:
    """One Gauss-Seidel pass: refine roots ``0 .. n-1`` in order, updating in place."""
    z = list(estimates)
    for i in range(len(z)):
        z[i] = refine_root(p, i, z, steps, collision_eps, trace, round)
    return z


def hard_converged(residuals: Sequence[float], tol: float) -> bool:
    return max(residuals) <= tol


def _truncated_mean(residuals: Sequence[float], fraction: float) -> float:
    k = max(1, math.ceil(fraction * len(residuals)))
    best = sorted(residuals)[:k]
    return sum(best) / k


def soft_converged(prev: Sequence[float], curr: Sequence[float],
                   fraction: float = 1.0, stability_eps: float = 1e-2) -> bool:
    """True when the mean of the best ``fraction`` of residuals has stabilised.

    With ``fraction < 1`` only the most accurate part of each round enters
    the average.
    """
    a_prev = _truncated_mean(prev, fraction)
    a_curr = _truncated_mean(curr, fraction)
    return abs(a_curr - a_prev) <= stability_eps * max(a_prev, 1e-300)


def reorder_by_accuracy(estimates: Sequence[complex], residuals: Sequence[float]):
    """Sort jointly by descending residual (least accurate first), stable on ties."""
    order = sorted(range(len(residuals)), key=lambda k: -residuals[k])
    return [estimates[k] for k in order], [residuals[k] for k in order]


def residuals_of(p: Polynomial, roots: Sequence[complex]) -> list[float]:
    return [abs(eval_poly(p, z)) for z in roots]


def _settled(p, roots, residuals, tol, stationary_rtol):
    """Per-root flag: residual within ``tol`` or the root is a numerical fixed point."""
    flags = []
    for i, r in enumerate(residuals):
        if r <= tol:
            flags.append(True)
        elif stationary_rtol is None:
            flags.append(False)
        else:
            flags.append(abs(correction(p, roots, i)) <= stationary_rtol * abs(roots[i]))
    return flags


def closed_form(p: Polynomial) -> list[complex]:
    """Roots of degree-1 and degree-2 polynomials."""
    if p.degree == 1:
        return [-p.coeffs[0]]
    if p.degree == 2:
        a0, a1 = p.coeffs
        disc = cmath.sqrt(a1 * a1 - 4 * a0)
        return [0.5 * (-a1 + disc), 0.5 * (-a1 - disc)]
    raise ParameterError("closed form only for degree 1 and 2")


RoundFn = Callable[..., list]


def iterate(p: Polynomial, start: Sequence[complex], config: SolverConfig,
            round_fn: RoundFn = sweep_round, method: str = "sequential") -> SolveResult:
    """Drive ``round_fn`` for up to ``max_rounds`` rounds with round-level stopping."""
    n = p.degree
    z = list(start)
    trace = Trace() if config.record_trace else None
    prev = None
    converged = False
    rounds = 0
    for rnd in range(1, config.max_rounds + 1):
        try:
            z = round_fn(p, z, config.steps_per_root, config.collision_eps, trace, rnd)
        except IterationError as exc:
            raise exc.locate(round=rnd)
        rounds = rnd
        res = residuals_of(p, z)
        if isinstance(config.mode, Hard):
            converged = all(_settled(p, z, res, config.tol, config.stationary_rtol))
        elif prev is not None:
            converged = soft_converged(prev, res, config.mode.fraction, config.mode.stability_eps)
        if config.reorder_by_accuracy:
            z, res = reorder_by_accuracy(z, res)
        prev = res
        if converged:
            break
    return SolveResult(
        roots=z,
        residuals=residuals_of(p, z),
        rounds_used=rounds,
        total_steps=n * config.steps_per_root * rounds,
        converged=converged,
        trace=trace,
        method=method,
    )


def solve(p: Polynomial, init: InitStrategy | Sequence[complex] | None = None,
          config: Optional[SolverConfig] = None) -> SolveResult:
    """Find all roots of ``p``.

    Degrees 1 and 2 are answered in closed form with zero iteration steps.
    Otherwise the guesses from ``init`` (unit circle by default) are
    validated and iterated. Running out of rounds is not an error; the
    result carries ``converged=False`` and the last estimates.
    """
    config = config or SolverConfig()
    if p.degree <= 2:
        roots = closed_form(p)
        return SolveResult(roots, residuals_of(p, roots), 0, 0, True,
                           Trace() if config.record_trace else None)
    start = initial_guesses(init, p.degree, DEFAULT_MIN_SEP)
    return iterate(p, start, config, sweep_round)
