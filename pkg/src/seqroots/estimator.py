"""scikit-learn compatible front end.

:class:`SequentialWeierstrass` maps rows of monic coefficients (constant
term first) to rows of roots, so it slots into pipelines and supports
``get_params`` / ``set_params`` / ``clone``::

    est = SequentialWeierstrass(steps_per_root=1, max_rounds=40)
    roots = est.fit_transform(coeff_rows)
    est.residuals_, est.rounds_used_, est.converged_
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .baselines import jacobi_weierstrass_solve, newton_deflation_solve
from .errors import ParameterError
from .initializer import Circle, Explicit, InitStrategy, Spiral, UnitCircle
from .poly import Polynomial
from .solver import (DEFAULT_COLLISION_EPS, DEFAULT_STATIONARY_RTOL, DEFAULT_TOL, Hard, Soft,
                     SolverConfig, solve)
from .validation import check_coefficients, check_positive_int

_METHODS = {
    "sequential": solve,
    "jacobi": jacobi_weierstrass_solve,
    "newton": newton_deflation_solve,
}


def make_init(init) -> InitStrategy:
    """Accept an :class:`InitStrategy`, a CLI-style string, or explicit points."""
    if init is None:
        return UnitCircle()
    if isinstance(init, InitStrategy):
        return init
    if isinstance(init, str):
        kind, _, arg = init.partition(":")
        if kind == "unit-circle" and not arg:
            return UnitCircle()
        if kind == "circle":
            return Circle(float(arg))
        if kind == "spiral":
            if not arg:
                return Spiral()
            lo, hi = (float(v) for v in arg.split(","))
            return Spiral(lo, hi)
        raise ParameterError(f"unrecognised init strategy {init!r}")
    return Explicit(init)


def make_mode(mode, soft_fraction=1.0, stability_eps=1e-2):
    if isinstance(mode, (Hard, Soft)):
        return mode
    if mode == "hard":
        return Hard()
    if mode == "soft":
        return Soft(soft_fraction, stability_eps)
    raise ParameterError(f"mode must be 'hard' or 'soft', got {mode!r}")


class SequentialWeierstrass(TransformerMixin, BaseEstimator):
    """All roots of monic complex polynomials by sequential Weierstrass correction.

    Parameters
    ----------
    steps_per_root : int
        Inner correction steps applied to each root per round (N).
    max_rounds : int
        Upper bound on full sweeps over the roots (J).
    tol : float
        Absolute residual target ``|P(z)|`` for hard convergence.
    mode : {"hard", "soft"}
    soft_fraction, stability_eps : float
        Soft-mode parameters; only the best ``soft_fraction`` of residuals
        enter the averaged accuracy.
    reorder : bool
        Re-sort estimates least-accurate-first after every round.
    init : str, InitStrategy or sequence of complex
        ``"unit-circle"``, ``"circle:R"``, ``"spiral:R0,R1"`` or explicit points.
    method : {"sequential", "jacobi", "newton"}
        The sequential scheme or one of the baselines.
    stationary_rtol : float or None
        See :class:`~seqroots.solver.SolverConfig`.

    Attributes
    ----------
    roots_ : ndarray of shape (n_polys, degree)
    residuals_ : ndarray of shape (n_polys, degree)
    rounds_used_, total_steps_ : ndarray of int
    converged_ : ndarray of bool
    n_features_in_ : int
        Polynomial degree seen during ``fit``.
    """

    def __init__(self, steps_per_root=1, max_rounds=100, tol=DEFAULT_TOL, mode="hard",
                 soft_fraction=1.0, stability_eps=1e-2, reorder=False, init="unit-circle",
                 method="sequential", collision_eps=DEFAULT_COLLISION_EPS,
                 stationary_rtol=DEFAULT_STATIONARY_RTOL):
        self.steps_per_root = steps_per_root
        self.max_rounds = max_rounds
        self.tol = tol
        self.mode = mode
        self.soft_fraction = soft_fraction
        self.stability_eps = stability_eps
        self.reorder = reorder
        self.init = init
        self.method = method
        self.collision_eps = collision_eps
        self.stationary_rtol = stationary_rtol

    def _config(self):
        return SolverConfig(
            steps_per_root=check_positive_int(self.steps_per_root, "steps_per_root"),
            max_rounds=check_positive_int(self.max_rounds, "max_rounds"),
            tol=float(self.tol),
            mode=make_mode(self.mode, self.soft_fraction, self.stability_eps),
            reorder_by_accuracy=bool(self.reorder),
            collision_eps=float(self.collision_eps),
            stationary_rtol=self.stationary_rtol,
        )

    def _solve_rows(self, X):
        if self.method not in _METHODS:
            raise ParameterError(f"unknown method {self.method!r}")
        run = _METHODS[self.method]
        config = self._config()
        init = make_init(self.init)
        return [run(Polynomial(row), init, config) for row in X]

    def fit(self, X, y=None):
        X = check_coefficients(X)
        results = self._solve_rows(X)
        self.n_features_in_ = X.shape[1]
        self.roots_ = np.array([r.roots for r in results], dtype=complex)
        self.residuals_ = np.array([r.residuals for r in results], dtype=float)
        self.rounds_used_ = np.array([r.rounds_used for r in results], dtype=int)
        self.total_steps_ = np.array([r.total_steps for r in results], dtype=int)
        self.converged_ = np.array([r.converged for r in results], dtype=bool)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        X = check_coefficients(X)
        if X.shape[1] != self.n_features_in_:
            raise ParameterError(
                f"X has degree {X.shape[1]}, estimator was fitted on degree {self.n_features_in_}"
            )
        return np.array([r.roots for r in self._solve_rows(X)], dtype=complex)

    def fit_transform(self, X, y=None):
        return self.fit(X).roots_.copy()
