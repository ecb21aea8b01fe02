"""Dirichlet characters as exponent vectors on unit-group generators.

Representation: (Z/qZ)^* = prod <g_i> with deterministic generators
(smallest primitive root per odd prime power; -1 and 5 for the 2-power
part), a full discrete-log table, and characters stored as one exponent
per generator.  Evaluation is then an O(1) table lookup producing an
exact rational rotation t with chi(n) = e(t); all products, conjugates
and conductors are exact integer arithmetic.  Numerics enter only when
a rotation is turned into a complex number, via cospi/sinpi on the
reduced fraction (never by repeated multiplication of a root).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath as mp

from .approx import ComplexApprox, approx_sum
from .numtheory import crt_lift, divisors, factorize, totient


def e_angle(t: Fraction) -> mp.mpc:
    """e(t) = exp(2 pi i t) from the exact angle; t any rational."""
    t = Fraction(t) % 1
    x = mp.mpf(2 * t.numerator) / t.denominator
    return mp.mpc(mp.cospi(x), mp.sinpi(x))


def _primitive_root_mod_p(p: int) -> int:
    if p == 2:
        return 1
    order_facs = [f for f, _ in factorize(p - 1)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in order_facs):
            return g
    raise ArithmeticError(f"no primitive root mod {p}")  # unreachable for prime p


def _component_generators(p: int, a: int) -> list[tuple[int, int]]:
    """Generators (g, order) of (Z/p^a)^* for a prime power p^a."""
    if p == 2:
        if a == 1:
            return []
        if a == 2:
            return [(3, 2)]
        return [(2**a - 1, 2), (5, 2 ** (a - 2))]
    g = _primitive_root_mod_p(p)
    if a >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return [(g % p**a, totient(p**a))]


@dataclass(frozen=True)
class UnitGroup:
    """Structure of (Z/qZ)^* with a full discrete-log table."""

    q: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]
    dlog: dict[int, tuple[int, ...]] = field(repr=False, hash=False, compare=False)

    @property
    def phi(self) -> int:
        p = 1
        for d in self.orders:
            p *= d
        return p

    def exponents(self, n: int) -> tuple[int, ...] | None:
        """Discrete log of n mod q, or None when gcd(n, q) > 1."""
        if self.q == 1:
            return ()
        return self.dlog.get(n % self.q)

    def from_exponents(self, exps: tuple[int, ...]) -> int:
        n = 1
        for g, d, e in zip(self.generators, self.orders, exps):
            n = n * pow(g, e % d, self.q) % self.q
        return n % self.q if self.q > 1 else 1


@lru_cache(maxsize=512)
def unit_group(q: int) -> UnitGroup:
    """Deterministic generator/order data for (Z/qZ)^*."""
    if q < 1:
        raise ValueError(f"modulus must be >= 1, got {q}")
    if q == 1:
        return UnitGroup(1, (), (), {})
    gens: list[int] = []
    orders: list[int] = []
    comps = factorize(q)
    for p, a in comps:
        pa = p**a
        for g, d in _component_generators(p, a):
            lifted = crt_lift([(g, pa)] + [(1, pp**aa) for pp, aa in comps if pp != p])
            gens.append(lifted)
            orders.append(d)
    table: dict[int, tuple[int, ...]] = {1 % q: (0,) * len(gens)}
    for i, (g, d) in enumerate(zip(gens, orders)):
        current = list(table.items())
        x = 1
        for e in range(1, d):
            x = x * g % q
            for n, vec in current:
                nv = list(vec)
                nv[i] = e
                table[n * x % q] = tuple(nv)
    if len(table) != totient(q):
        raise ArithmeticError(f"discrete-log table incomplete for q={q}")
    return UnitGroup(q, tuple(gens), tuple(orders), table)


@dataclass(frozen=True)
class DirichletCharacter:
    """A character mod q fixed by its exponents against the group generators."""

    q: int
    exps: tuple[int, ...]

    def __post_init__(self):
        G = unit_group(self.q)
        if len(self.exps) != len(G.orders):
            raise ValueError(f"expected {len(G.orders)} exponents for q={self.q}")
        object.__setattr__(self, "exps", tuple(e % d for e, d in zip(self.exps, G.orders)))

    @property
    def group(self) -> UnitGroup:
        return unit_group(self.q)

    # -- evaluation ------------------------------------------------------

    def angle(self, n: int) -> Fraction | None:
        """chi(n) = e(angle); None encodes chi(n) = 0 (gcd(n, q) > 1)."""
        if self.q == 1:
            return Fraction(0)
        vec = self.group.exponents(n)
        if vec is None:
            return None
        t = Fraction(0)
        for e, k, d in zip(self.exps, vec, self.group.orders):
            t += Fraction(e * k, d)
        return t % 1

    def __call__(self, n: int) -> mp.mpc:
        t = self.angle(n)
        if t is None:
            return mp.mpc(0)
        return e_angle(t)

    # -- structure -------------------------------------------------------

    @property
    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exps)

    @property
    def order(self) -> int:
        o = 1
        for e, d in zip(self.exps, self.group.orders):
            o = o * (d // gcd(d, e)) // gcd(o, d // gcd(d, e))
        return o

    @property
    def is_real(self) -> bool:
        return all((2 * e) % d == 0 for e, d in zip(self.exps, self.group.orders))

    def parity(self) -> int:
        """chi(-1) as +1 or -1."""
        t = self.angle(-1)
        return 1 if t == 0 else -1

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(self.q, tuple(-e for e in self.exps))

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if other.q == self.q:
            return DirichletCharacter(self.q, tuple(a + b for a, b in zip(self.exps, other.exps)))
        return pointwise_product(self, other)

    @property
    def is_primitive(self) -> bool:
        return conductor(self)[0] == self.q


def principal_character(q: int) -> DirichletCharacter:
    return DirichletCharacter(q, (0,) * len(unit_group(q).orders))


def quadratic_character(q: int) -> DirichletCharacter:
    """The real character of maximal order-2 content mod q (Legendre symbol for odd primes)."""
    G = unit_group(q)
    exps = tuple(d // 2 if d % 2 == 0 else 0 for d in G.orders)
    chi = DirichletCharacter(q, exps)
    if chi.is_principal:
        raise ValueError(f"no quadratic character mod {q}")
    return chi


def enumerate_characters(q: int, primitive_only: bool = False) -> list[DirichletCharacter]:
    """All phi(q) characters mod q, lexicographic in exponent vectors."""
    G = unit_group(q)
    out = [DirichletCharacter(q, exps) for exps in itertools.product(*[range(d) for d in G.orders])]
    if primitive_only:
        out = [chi for chi in out if conductor(chi)[0] == q]
    return out


def character_by_index(q: int, index: int) -> DirichletCharacter:
    chars = enumerate_characters(q)
    if not 0 <= index < len(chars):
        raise ValueError(f"character index {index} out of range for q={q} (phi={len(chars)})")
    return chars[index]


# -- conductor ------------------------------------------------------------


def _local_conductor(p: int, a: int, comp_orders: list[int], comp_exps: list[int]) -> int:
    if p == 2:
        if a == 1:
            return 1
        if a == 2:
            return 4 if comp_exps[0] % 2 else 1
        eps, e5 = comp_exps
        d5 = comp_orders[1]
        if e5 % d5 == 0:
            return 4 if eps % 2 else 1
        # order of the 5-part is 2^v; the character factors mod 2^(v+2) and no lower
        o5 = d5 // gcd(d5, e5)
        return 4 * o5
    d = comp_orders[0]
    e = comp_exps[0] % d
    if e == 0:
        return 1
    o = d // gcd(d, e)
    # conductor p^(1+v_p(o)): one more than the p-part of the order
    v = 0
    while o % p == 0:
        o //= p
        v += 1
    return p ** (1 + v)


def conductor(chi: DirichletCharacter) -> tuple[int, DirichletCharacter]:
    """Conductor q* and the primitive character mod q* inducing chi."""
    q = chi.q
    if q == 1:
        return 1, chi
    G = chi.group
    # walk generators grouped by prime-power component, in factorize order
    qstar = 1
    idx = 0
    for p, a in factorize(q):
        ngen = len(_component_generators(p, a))
        qstar *= _local_conductor(p, a, list(G.orders[idx : idx + ngen]), list(chi.exps[idx : idx + ngen]))
        idx += ngen
    if qstar == q:
        return q, chi
    Gs = unit_group(qstar)
    exps = []
    for g, d in zip(Gs.generators, Gs.orders):
        n = g
        while gcd(n, q) != 1:
            n += qstar
        t = chi.angle(n)
        num = t * d
        if num.denominator != 1:
            raise ArithmeticError("conductor computation produced a non-integral exponent")
        exps.append(int(num) % d)
    chistar = DirichletCharacter(qstar, tuple(exps))
    return qstar, chistar


def induce(chi: DirichletCharacter, modulus: int) -> DirichletCharacter:
    """The character mod `modulus` agreeing with chi on units (chi.q | modulus)."""
    if modulus % chi.q:
        raise ValueError(f"{modulus} is not a multiple of {chi.q}")
    if modulus == chi.q:
        return chi
    G = unit_group(modulus)
    exps = []
    for g, d in zip(G.generators, G.orders):
        t = chi.angle(g)
        num = t * d
        if num.denominator != 1:
            raise ArithmeticError("induction produced a non-integral exponent")
        exps.append(int(num) % d)
    return DirichletCharacter(modulus, tuple(exps))


def pointwise_product(chi: DirichletCharacter, psi: DirichletCharacter) -> DirichletCharacter:
    """The character n -> chi(n) psi(n) mod lcm(q_chi, q_psi)."""
    m = chi.q * psi.q // gcd(chi.q, psi.q)
    G = unit_group(m)
    exps = []
    for g, d in zip(G.generators, G.orders):
        t = chi.angle(g) + psi.angle(g)  # g is a unit mod m, hence mod both moduli
        num = (t % 1) * d
        if num.denominator != 1:
            raise ArithmeticError("product produced a non-integral exponent")
        exps.append(int(num) % d)
    return DirichletCharacter(m, tuple(exps))


# -- sums ------------------------------------------------------------------


def gauss_sum(chi: DirichletCharacter) -> ComplexApprox:
    """tau(chi) = sum_{a mod q} chi(a) e(a/q), exact angles per term."""
    q = chi.q
    if q == 1:
        return ComplexApprox.exact(1)
    terms = []
    for a in range(1, q + 1):
        t = chi.angle(a)
        if t is None:
            continue
        terms.append(ComplexApprox(e_angle(t + Fraction(a, q)), mp.mpf(2) ** (3 - mp.mp.prec)))
    return approx_sum(terms)


def nu_weight(chistar: DirichletCharacter, psi: DirichletCharacter, s, t: int) -> ComplexApprox:
    """Divisor convolution sum_{d|t} d^(1-s) psi(d) mu(t/d) chistar(t/d)."""
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"t must be a positive integer, got {t!r}")
    from .numtheory import mobius

    s = mp.mpmathify(s)
    terms = []
    for d in divisors(t):
        m = mobius(t // d)
        if m == 0:
            continue
        w = chistar(t // d) * psi(d)
        if w == 0:
            continue
        val = m * w * mp.mpf(d) ** (1 - s) if mp.im(s) == 0 else m * w * mp.mpc(d) ** (1 - s)
        terms.append(ComplexApprox(val, abs(val) * mp.mpf(2) ** (6 - mp.mp.prec)))
    if not terms:
        return ComplexApprox.exact(0)
    return approx_sum(terms)
