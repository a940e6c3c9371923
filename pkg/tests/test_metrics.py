import math
import random

import pytest
from hypothesis import given, strategies as st

from seqroots.bench import gen_random_poly
from seqroots.errors import MeasureOverflowError, ParameterError
from seqroots.metrics import (global_product_measure, global_sum_measure, match_roots,
                              relative_residual, residual_set, summarize)
from seqroots.poly import Polynomial, from_roots, to_monic
from seqroots.solver import SolverConfig, solve

from conftest import ISOLATED_ROOT, DEG20_ROOTS

Z2M1 = Polynomial([-1, 0])


def test_residual_set():
    assert residual_set(Z2M1, [1, -1]) == [0, 0]
    assert residual_set(Z2M1, [3, 1.5]) == [1.25, 8]


def test_residual_set_printed_roots(deg20):
    res = residual_set(deg20, DEG20_ROOTS)
    # 19 truncation-limited residuals, then the isolated root far above
    assert max(res[:-1]) < 0.02
    assert res[-1] > 1e9


def test_global_sum():
    assert global_sum_measure(Z2M1, [1, -1]) == 0
    rs = [0.5 + 1j, -2, 3j]
    p = from_roots(rs)
    assert global_sum_measure(p, rs) <= 1e-12 * (3 * 3 + 1)
    assert global_sum_measure(Z2M1, [1 + 0.25, -1]) == 0.25


def test_global_product():
    assert global_product_measure(Z2M1, [1, -1]) == 0
    rs = [0.5 + 1j, -2, 3j, 1.1]
    bound = math.prod(1 + abs(r) for r in rs)
    assert global_product_measure(from_roots(rs), rs) <= 1e-12 * bound
    with pytest.raises(MeasureOverflowError):
        global_product_measure(Polynomial([0, 0]), [1e200, 1e200])


def test_global_product_degree99_no_overflow():
    rs = [1.2 * complex(math.cos(k), math.sin(k)) for k in range(99)]
    assert math.isfinite(global_product_measure(from_roots(rs), rs))


def test_relative_residual():
    assert relative_residual(Z2M1, 1) == 0
    p = Polynomial([2 - 1j, 3, 0.5j])
    assert relative_residual(p, 0) == 1.0
    rs = [0.5, -0.25, 2]
    assert relative_residual(from_roots(rs), 0.5) <= 1e-15


def test_relative_residual_to_monic_identity():
    raw = [2 + 1j, -3, 4j, 1.5]
    p = to_monic(raw)
    q = to_monic([4 * c for c in raw])
    for z in [0.3, 1 + 1j, -2j]:
        assert relative_residual(p, z) == pytest.approx(relative_residual(q, z), rel=1e-15)


def test_summarize():
    rep = summarize(Polynomial([-2, 0]), [1, 2 ** 0.5, 3 ** 0.5])
    assert rep.sorted_residuals[0] == rep.min and rep.sorted_residuals[-1] == rep.max
    assert (rep.min, rep.max) == (pytest.approx(0, abs=1e-15), 1.0)
    rep = summarize(Polynomial([0, 0]), [1 + 0j, -1, 3 ** 0.5 * 1j])
    # residuals |z^2| = 1, 1, 3 -> mean 5/3
    assert rep.mean == pytest.approx(5 / 3)
    with pytest.raises(ParameterError):
        summarize(Z2M1, [])


def test_summarize_mean_skips_zeros():
    rep = summarize(Z2M1, [1, -1, 2])
    assert rep.mean == 3.0 and rep.min == 0


@given(st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
                min_size=1, max_size=8), st.randoms())
def test_residual_set_permutation_invariant(zs, rnd):
    p = Polynomial([1 - 1j, 2, 0.5j])
    shuffled = list(zs)
    rnd.shuffle(shuffled)
    assert residual_set(p, zs) == residual_set(p, shuffled)


def test_match_roots():
    pairs, dist = match_roots([1, 2j, -3], [-3.001, 1, 2j])
    assert sorted(pairs) == [(0, 1), (1, 2), (2, 0)]
    assert dist.max() == pytest.approx(0.001)
    with pytest.raises(ParameterError):
        match_roots([1], [1, 2])


def test_converged_measures(deg20):
    tol = 1.1e-13
    res = solve(deg20, None, SolverConfig(max_rounds=40, tol=tol))
    rep = summarize(deg20, res.roots)
    assert res.converged
    assert rep.global_sum_measure <= 1e3 * tol * 20
    assert rep.global_product_measure <= 1e3 * tol * 20
