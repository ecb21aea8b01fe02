"""Complex values carrying a conservative absolute error bound.

ComplexApprox is the universal numeric return type of the evaluators.
Arithmetic propagates bounds outward (never tighter than the true
propagated bound) and adds a small rounding allowance per operation, so
a chain of operations on sound inputs stays sound.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp


def _ulp_slop(value) -> mp.mpf:
    # a few ulps of the result at current precision; covers the final rounding
    return (abs(value) + mp.mpf(2) ** (-mp.mp.prec)) * mp.mpf(2) ** (4 - mp.mp.prec)


def to_mpc(x) -> mp.mpc:
    if isinstance(x, Fraction):
        return mp.mpc(mp.mpf(x.numerator) / x.denominator)
    return mp.mpc(x)


class ComplexApprox:
    """A complex value plus a nonnegative absolute error bound."""

    __slots__ = ("value", "err")

    def __init__(self, value, err=0):
        self.value = to_mpc(value)
        self.err = mp.mpf(err)
        if not (self.err >= 0 and mp.isfinite(self.err)):
            raise ValueError(f"error bound must be finite and >= 0, got {err}")

    @classmethod
    def exact(cls, value) -> "ComplexApprox":
        return cls(value, 0)

    # -- queries ---------------------------------------------------------

    @property
    def real(self) -> mp.mpf:
        return self.value.real

    @property
    def imag(self) -> mp.mpf:
        return self.value.imag

    def abs_upper(self) -> mp.mpf:
        return abs(self.value) + self.err

    def abs_lower(self) -> mp.mpf:
        return max(mp.mpf(0), abs(self.value) - self.err)

    def contains(self, z) -> bool:
        """Whether z is within the error disc (with a tiny slack)."""
        return abs(self.value - to_mpc(z)) <= self.err * (1 + mp.mpf(2) ** -20) + mp.mpf(2) ** (20 - mp.mp.prec)

    def agrees_with(self, other: "ComplexApprox") -> bool:
        """Discs overlap: |a - b| <= err_a + err_b (plus slack)."""
        combined = self.err + other.err
        return abs(self.value - other.value) <= combined * (1 + mp.mpf(2) ** -20) + mp.mpf(2) ** (20 - mp.mp.prec)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ComplexApprox):
            return other
        return ComplexApprox(other, 0)

    def __add__(self, other):
        o = self._coerce(other)
        v = self.value + o.value
        return ComplexApprox(v, self.err + o.err + _ulp_slop(v))

    __radd__ = __add__

    def __neg__(self):
        return ComplexApprox(-self.value, self.err)

    def __sub__(self, other):
        o = self._coerce(other)
        v = self.value - o.value
        return ComplexApprox(v, self.err + o.err + _ulp_slop(v))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        v = self.value * o.value
        err = abs(self.value) * o.err + abs(o.value) * self.err + self.err * o.err
        return ComplexApprox(v, err + _ulp_slop(v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        den = abs(o.value)
        if den <= o.err:
            raise ZeroDivisionError("divisor's error disc contains zero")
        v = self.value / o.value
        err = (self.err + abs(v) * o.err) / (den - o.err)
        return ComplexApprox(v, err + _ulp_slop(v))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        out = ComplexApprox.exact(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def conjugate(self):
        return ComplexApprox(mp.conj(self.value), self.err)

    def abs2(self) -> "ComplexApprox":
        """|z|^2 with propagated bound."""
        a = abs(self.value)
        v = a * a
        return ComplexApprox(v, (2 * a + self.err) * self.err + _ulp_slop(v))

    def widen(self, extra) -> "ComplexApprox":
        return ComplexApprox(self.value, self.err + mp.mpf(extra))

    def __repr__(self):
        return f"ComplexApprox({mp.nstr(self.value, 17)}, err={mp.nstr(self.err, 3)})"


def approx_sum(terms) -> ComplexApprox:
    """Sum of ComplexApprox terms with a single aggregated slop."""
    total = mp.mpc(0)
    err = mp.mpf(0)
    scale = mp.mpf(0)
    count = 0
    for t in terms:
        total += t.value
        err += t.err
        scale = max(scale, abs(t.value))
        count += 1
    err += (count + 2) * (scale + abs(total)) * mp.mpf(2) ** (4 - mp.mp.prec)
    return ComplexApprox(total, err)
