import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from lerchzeta.approx import ComplexApprox, approx_sum

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
small_err = st.floats(min_value=0, max_value=1e-3)


def _boxed(re, im, err):
    return ComplexApprox(mp.mpc(re, im), err)


@given(finite, finite, small_err, finite, finite, small_err)
@settings(max_examples=200, deadline=None)
def test_add_mul_enclose_perturbed_truth(re1, im1, e1, re2, im2, e2):
    a = _boxed(re1, im1, e1)
    b = _boxed(re2, im2, e2)
    # perturb each value to the edge of its disc; results must stay inside
    ta = a.value + mp.mpc(e1, 0)
    tb = b.value - mp.mpc(0, e2)
    assert (a + b).contains(ta + tb)
    assert (a - b).contains(ta - tb)
    assert (a * b).contains(ta * tb)


def test_div_guard():
    a = ComplexApprox(1, 0.1)
    b = ComplexApprox(mp.mpc(1e-8), 1e-3)
    with pytest.raises(ZeroDivisionError):
        a / b
    c = a / ComplexApprox(2, 1e-6)
    assert c.contains((1 + 0.1) / (2 - 1e-6))


def test_pow_and_abs2():
    z = ComplexApprox(mp.mpc(1, 1), 1e-10)
    assert (z**3).contains(mp.mpc(1, 1) ** 3)
    assert z.abs2().contains(2)
    assert (z**0).value == 1


def test_rejects_bad_bound():
    with pytest.raises(ValueError):
        ComplexApprox(1, -1)
    with pytest.raises(ValueError):
        ComplexApprox(1, mp.inf)


def test_approx_sum_matches_loop():
    terms = [ComplexApprox(mp.mpc(i, -i) / 7, 1e-9) for i in range(50)]
    total = approx_sum(terms)
    loop = sum((t.value for t in terms), mp.mpc(0))
    assert total.contains(loop)
    assert total.err >= 50 * 1e-9
