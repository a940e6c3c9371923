"""Experiment runners behind the CLI subcommands."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from ..baselines import jacobi_weierstrass_solve, newton_deflation_solve
from ..errors import RootFindingError
from ..initializer import Circle, InitStrategy, UnitCircle
from ..metrics import match_roots, summarize
from ..poly import Polynomial
from ..solver import SolverConfig, solve
from .coeffio import result_document

SOLVERS = {
    "sequential": solve,
    "jacobi": jacobi_weierstrass_solve,
    "newton": newton_deflation_solve,
}


@dataclass(frozen=True)
class ExperimentSpec:
    poly: Polynomial
    init: InitStrategy = UnitCircle()
    config: SolverConfig = SolverConfig()
    method: str = "sequential"


def run_solve(spec: ExperimentSpec):
    """Solve once; returns ``(result, document)``."""
    result = SOLVERS[spec.method](spec.poly, spec.init, spec.config)
    doc = result_document(
        spec.poly, result,
        init=spec.init.describe(),
        mode=spec.config.mode.describe(),
        tol=spec.config.tol,
        steps=spec.config.steps_per_root,
        max_rounds=spec.config.max_rounds,
    )
    return result, doc


def _row(spec: ExperimentSpec, **keys) -> dict:
    row = dict(keys)
    try:
        result = SOLVERS[spec.method](spec.poly, spec.init, spec.config)
    except RootFindingError as exc:
        row.update(J_used=None, K=None, converged=False, min=None, max=None, mean=None,
                   error=str(exc))
        return row
    rep = summarize(spec.poly, result.roots)
    row.update(J_used=result.rounds_used, K=result.total_steps, converged=result.converged,
               min=rep.min, max=rep.max, mean=rep.mean, error="")
    return row


def run_schedule_sweep(spec: ExperimentSpec, steps: Sequence[int]) -> list[dict]:
    """One row per ``N``: rounds used, ``K`` and residual statistics.

    A failing row records its error and the sweep carries on.
    """
    return [_row(replace(spec, config=replace(spec.config, steps_per_root=int(n))), N=int(n))
            for n in steps]


def radius_grid(r_min: float = 0.2, r_max: float = 2.2, n_steps: int = 10) -> list[float]:
    return [float(r) for r in np.linspace(r_min, r_max, n_steps + 1)]


def run_radius_sweep(spec: ExperimentSpec, steps: Sequence[int], radii: Sequence[float],
                     first_converged: bool = False) -> list[dict]:
    """Rows over ``(N, r)`` with guesses on a circle of radius ``r``.

    With ``first_converged`` the scan over ``r`` stops, per ``N``, at the
    first radius that converges, leaving one row per ``N``; if none do, the
    last radius is kept.
    """
    rows = []
    for n in steps:
        cfg = replace(spec.config, steps_per_root=int(n))
        per_n = []
        for r in radii:
            row = _row(replace(spec, init=Circle(float(r)), config=cfg), N=int(n), r=float(r))
            per_n.append(row)
            if first_converged and row["converged"]:
                break
        rows.extend(per_n[-1:] if first_converged else per_n)
    return rows


def compare_baselines(spec: ExperimentSpec, methods: Optional[Sequence[str]] = None) -> dict:
    """Run the sequential scheme and each baseline from the same guesses."""
    methods = list(methods or SOLVERS)
    docs = {}
    roots = {}
    for m in methods:
        try:
            result, doc = run_solve(replace(spec, method=m))
            roots[m] = result.roots
        except RootFindingError as exc:
            doc = {"method": m, "error": str(exc)}
        docs[m] = doc
    ref = roots.get("sequential")
    if ref is not None:
        for m, r in roots.items():
            if m != "sequential":
                _, dist = match_roots(r, ref)
                docs[m]["max_distance_to_sequential"] = float(dist.max())
    return {"degree": spec.poly.degree, "init": spec.init.describe(), "methods": docs}
