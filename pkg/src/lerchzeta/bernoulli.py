"""Exact Bernoulli numbers and polynomials for Euler-Maclaurin work.

Convention: B_1 = -1/2 (the recurrence sum_{j<=m} C(m+1,j) B_j = 0).
The periodized-polynomial sup bound feeds the explicit remainder
estimate of the Euler-Maclaurin evaluator.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import mpmath as mp


class BernoulliTable:
    """Exact B_k plus Bernoulli-polynomial evaluation, grown on demand."""

    def __init__(self, k_max: int = 64):
        self._numbers: list[Fraction] = [Fraction(1)]
        self.extend(k_max)

    def extend(self, k_max: int) -> None:
        while len(self._numbers) <= k_max:
            m = len(self._numbers)
            acc = sum(Fraction(comb(m + 1, j)) * self._numbers[j] for j in range(m))
            self._numbers.append(-acc / (m + 1))

    @property
    def k_max(self) -> int:
        return len(self._numbers) - 1

    def number(self, k: int) -> Fraction:
        if k > self.k_max:
            self.extend(max(k, 2 * self.k_max))
        return self._numbers[k]

    def poly_coeffs(self, k: int) -> list[Fraction]:
        """Coefficients of B_k(x), ascending powers: B_k(x) = sum C(k,j) B_{k-j} x^j."""
        return [Fraction(comb(k, j)) * self.number(k - j) for j in range(k + 1)]

    def poly(self, k: int, x) -> mp.mpf:
        """B_k(x) at working precision (exact rational coefficients)."""
        x = mp.mpf(x)
        acc = mp.mpf(0)
        for c in reversed(self.poly_coeffs(k)):
            acc = acc * x + mp.mpf(c.numerator) / c.denominator
        return acc

    def periodized(self, k: int, x) -> mp.mpf:
        """B_k({x}), the 1-periodic extension used in remainder integrals."""
        x = mp.mpf(x)
        return self.poly(k, x - mp.floor(x))

    def periodized_bound(self, k: int) -> mp.mpf:
        """Upper bound for sup |B_k({x})|.

        k >= 2: |B_k({x})| <= 2 zeta(k) k!/(2 pi)^k <= 3.3 k!/(2 pi)^k.
        k == 1: 1/2.
        """
        if k == 1:
            return mp.mpf("0.5")
        if k < 1:
            raise ValueError("need k >= 1")
        return mp.mpf("3.3") * mp.factorial(k) / (2 * mp.pi) ** k


_TABLE = BernoulliTable()


def bernoulli_number(k: int) -> Fraction:
    return _TABLE.number(k)


def bernoulli_poly(k: int, x) -> mp.mpf:
    return _TABLE.poly(k, x)


def shared_table() -> BernoulliTable:
    return _TABLE


def em_coefficient(k: int) -> Fraction:
    """B_k / k! as an exact rational."""
    return _TABLE.number(k) / factorial(k)
