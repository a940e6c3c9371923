"""Exception hierarchy shared by all modules."""


class RootFindingError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(RootFindingError, ValueError):
    """An argument is outside its documented domain."""


class PolynomialOverflowError(RootFindingError, OverflowError):
    """Polynomial evaluation produced a non-finite value."""

    def __init__(self, modulus, degree):
        self.modulus = modulus
        self.degree = degree
        super().__init__(
            f"non-finite value evaluating degree-{degree} polynomial at |z| = {modulus:.6g}"
        )


class DegenerateDegreeError(RootFindingError, ValueError):
    """Leading coefficient is zero, so the stated degree is not attained."""


class DegenerateGuessError(RootFindingError, ValueError):
    """Two initial guesses coincide (closer than the separation threshold)."""

    def __init__(self, i, j, distance, min_sep):
        self.pair = (i, j)
        self.distance = distance
        self.min_sep = min_sep
        super().__init__(
            f"initial guesses {i} and {j} are {distance:.3g} apart (< {min_sep:.3g})"
        )


class IterationError(RootFindingError, ArithmeticError):
    """Failure inside the correction loop.

    ``round`` and ``root_index`` are filled in by the driver that caught the
    error, so the caller can tell where the iteration broke down.
    """

    round = None
    root_index = None

    def locate(self, round=None, root_index=None):
        if round is not None:
            self.round = round
        if root_index is not None and self.root_index is None:
            self.root_index = root_index
        return self

    def __str__(self):
        msg = super().__str__()
        where = []
        if self.round is not None:
            where.append(f"round {self.round}")
        if self.root_index is not None:
            where.append(f"root {self.root_index}")
        return f"{msg} ({', '.join(where)})" if where else msg


class CollisionError(IterationError):
    """The iterate coincides with one of the fixed factors."""

    def __init__(self, j, s):
        self.other_index = j
        self.s = s
        super().__init__(f"iterate {s!r} collides with estimate {j}")


class DivergenceError(IterationError):
    """A correction step produced a non-finite value."""

    def __init__(self, s):
        self.s = s
        super().__init__(f"non-finite correction at s = {s!r}")


class MeasureOverflowError(RootFindingError, OverflowError):
    """A global accuracy measure exceeds the double range."""
