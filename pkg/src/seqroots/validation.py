"""Input checks for array-shaped coefficient data.

``sklearn.utils.check_array`` rejects complex input, so coefficient
matrices are validated here instead.
"""

import numpy as np

from .errors import ParameterError


def check_coefficients(X, *, ensure_2d=True):
    """Return ``X`` as a finite complex array of shape ``(n_polys, degree)``.

    A 1-D input is one polynomial and becomes a single row. Each row holds
    monic coefficients constant term first.
    """
    arr = np.asarray(X)
    if arr.dtype == object:
        arr = arr.astype(complex)
    if not (np.issubdtype(arr.dtype, np.number) or arr.dtype == bool):
        raise ParameterError(f"coefficients must be numeric, got dtype {arr.dtype}")
    arr = arr.astype(complex, copy=False)
    if arr.ndim == 1 and ensure_2d:
        arr = arr[None, :]
    if arr.ndim != 2:
        raise ParameterError(f"expected a 2-D coefficient array, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ParameterError(f"empty coefficient array with shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ParameterError("coefficients contain NaN or infinity")
    return arr


def check_positive_int(value, name):
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise ParameterError(f"{name} must be a positive integer, got {value!r}")
    return int(value)
