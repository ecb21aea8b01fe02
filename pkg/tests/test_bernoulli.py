from fractions import Fraction
from math import comb

import mpmath as mp

from lerchzeta.bernoulli import BernoulliTable, bernoulli_number, bernoulli_poly


def test_known_values():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(4) == Fraction(-1, 30)
    assert bernoulli_number(12) == Fraction(-691, 2730)
    assert all(bernoulli_number(k) == 0 for k in (3, 5, 7, 9, 11))


def test_recurrence_exact_to_80():
    t = BernoulliTable(80)
    for m in range(1, 80):
        assert sum(Fraction(comb(m + 1, j)) * t.number(j) for j in range(m + 1)) == 0


def test_poly_roots_and_symmetry():
    # B_3(x) = x^3 - 3x^2/2 + x/2 vanishes at 0, 1/2, 1
    for x in (0, 0.5, 1):
        assert abs(bernoulli_poly(3, x)) < 1e-12
    # B_k(0) = B_k
    for k in (2, 4, 6):
        b = bernoulli_number(k)
        assert abs(bernoulli_poly(k, 0) - mp.mpf(b.numerator) / b.denominator) < 1e-12


def test_periodized_bound_covers_samples():
    t = BernoulliTable(24)
    for k in (2, 3, 4, 8, 12):
        bound = t.periodized_bound(k)
        worst = max(abs(t.periodized(k, mp.mpf(j) / 97)) for j in range(97))
        assert worst <= bound
