"""All roots of monic complex polynomials by sequential, fully deflated
Weierstrass correction, with baselines and accuracy measures."""

from .baselines import jacobi_weierstrass_solve, last_root, newton_deflation_solve
from .errors import (CollisionError, DegenerateDegreeError, DegenerateGuessError,
                     DivergenceError, ParameterError, PolynomialOverflowError, RootFindingError)
from .estimator import SequentialWeierstrass
from .initializer import Circle, Explicit, Spiral, UnitCircle, check_distinct
from .metrics import relative_residual, residual_set, summarize
from .poly import Polynomial, eval_poly, eval_with_derivative, from_roots, to_monic
from .solver import Hard, Soft, SolveResult, SolverConfig, solve

__version__ = "0.1.0"
