import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from seqroots import SequentialWeierstrass, from_roots
from seqroots.errors import ParameterError
from seqroots.metrics import match_roots
from seqroots.validation import check_coefficients


def test_params_round_trip():
    est = SequentialWeierstrass(steps_per_root=3, init="spiral:0.5,1.5")
    params = est.get_params()
    assert params["steps_per_root"] == 3 and params["init"] == "spiral:0.5,1.5"
    twin = clone(est)
    assert twin.get_params() == params
    est.set_params(max_rounds=7)
    assert est.max_rounds == 7


def test_fit_transform(deg20):
    est = SequentialWeierstrass(max_rounds=60)
    roots = est.fit_transform(np.array([deg20.coeffs]))
    assert roots.shape == (1, 20)
    assert est.converged_.all() and est.rounds_used_[0] == 16
    assert est.total_steps_[0] == 320
    assert est.residuals_.shape == (1, 20)


def test_batch_and_methods():
    rs = [[1, 2j, -1, 0.5 - 0.5j], [0.1, -0.7j, 1.5, -2]]
    X = np.array([from_roots(r).coeffs for r in rs])
    for method in ("sequential", "jacobi", "newton"):
        out = SequentialWeierstrass(method=method, max_rounds=200).fit(X).transform(X)
        for got, want in zip(out, rs):
            assert match_roots(got, want)[1].max() < 1e-9


def test_pipeline():
    # leading-first real coefficients -> monic rows -> roots
    to_monic_rows = FunctionTransformer(lambda X: (X[:, 1:] / X[:, :1])[:, ::-1])
    pipe = make_pipeline(to_monic_rows, SequentialWeierstrass())
    X = np.array([[2.0, -6.0, 34.0, -30.0]])  # 2 (z - 1)(z^2 - 2z + 15)
    roots = pipe.fit_transform(X)[0]
    assert match_roots(roots, [1, 1 + 14 ** 0.5 * 1j, 1 - 14 ** 0.5 * 1j])[1].max() < 1e-12


def test_not_fitted_and_degree_mismatch():
    est = SequentialWeierstrass()
    with pytest.raises(NotFittedError):
        est.transform([[1, 2, 3]])
    est.fit([[1, 2, 3]])
    with pytest.raises(ParameterError):
        est.transform([[1, 2, 3, 4]])


def test_bad_params():
    with pytest.raises(ParameterError):
        SequentialWeierstrass(steps_per_root=0).fit([[1, 2, 3]])
    with pytest.raises(ParameterError):
        SequentialWeierstrass(mode="sloppy").fit([[1, 2, 3]])
    with pytest.raises(ParameterError):
        SequentialWeierstrass(init="hexagon").fit([[1, 2, 3]])
    with pytest.raises(ParameterError):
        SequentialWeierstrass(method="magic").fit([[1, 2, 3]])


def test_check_coefficients():
    assert check_coefficients([1, 2]).shape == (1, 2)
    assert check_coefficients([[1, 2j]]).dtype == complex
    for bad in ([[np.nan, 1]], [[]], np.zeros((2, 2, 2)), [["a", "b"]]):
        with pytest.raises(ParameterError):
            check_coefficients(bad)
