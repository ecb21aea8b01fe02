"""Dirichlet L-values, twisted Hurwitz/periodic zetas, and the exact
character-sum transform connecting them.

Everything reduces to Hurwitz-zeta evaluations over exact rationals, so
values at s = 1/2 (and anywhere off the pole) come from the same
Euler-Maclaurin continuation used across the package; no approximate
functional equation is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath as mp

from .approx import ComplexApprox, approx_sum
from .characters import DirichletCharacter, conductor, e_angle, gauss_sum, nu_weight, pointwise_product
from .lerch import (
    LerchArgument,
    LerchPole,
    _frac_mpf,
    _rounding_slop,
    hurwitz_cached,
    hurwitz_em,
    lerch_eval,
)
from .precision import PrecisionConfig, make_config


@dataclass(frozen=True)
class TwistedHurwitzArg:
    """L(chi, b, ell, s) = ell^s sum_{n = b mod ell} chi(n) n^(-s)."""

    chi: DirichletCharacter
    b: int
    ell: int
    s: mp.mpc

    def __post_init__(self):
        from .lerch import as_mpc_s

        if not 1 <= self.b <= self.ell:
            raise ValueError(f"need 1 <= b <= ell, got b={self.b}, ell={self.ell}")
        object.__setattr__(self, "s", as_mpc_s(self.s))


@dataclass(frozen=True)
class TwistedPeriodicArg:
    """L(alpha, psi, s) = sum_{n>=1} e(n alpha) psi(n) n^(-s)."""

    alpha: Fraction
    psi: DirichletCharacter
    s: mp.mpc

    def __post_init__(self):
        from .lerch import as_mpc_s

        object.__setattr__(self, "alpha", Fraction(self.alpha) % 1)
        object.__setattr__(self, "s", as_mpc_s(self.s))


def dirichlet_l(chi: DirichletCharacter, s, cfg: PrecisionConfig | None = None) -> ComplexApprox:
    """L(chi, s) = q^(-s) sum_{a mod q} chi(a) zeta(0, a/q, s).

    At s = 1 the Hurwitz poles cancel for non-principal chi and the
    finite parts are summed; principal chi raises the pole flag.
    """
    cfg = cfg or make_config()
    from .lerch import as_mpc_s

    s = as_mpc_s(s)
    q = chi.q
    with cfg.work():
        if s == 1:
            if chi.is_principal:
                raise LerchPole("L(chi, s) has a pole at s = 1 for principal chi")
            total = mp.mpc(0)
            err = mp.mpf(0)
            for a in range(1, q + 1):
                w = chi.angle(a)
                if w is None:
                    continue
                h = hurwitz_em(Fraction(a, q), 1, cfg=cfg, regularized=True)
                total += e_angle(w) * h.value
                err += h.err
            total /= q
            return ComplexApprox(total, err / q + _rounding_slop(3 * q, abs(total)))
        total = mp.mpc(0)
        err = mp.mpf(0)
        for a in range(1, q + 1):
            w = chi.angle(a)
            if w is None:
                continue
            h = hurwitz_cached(Fraction(a, q), s, cfg)
            total += e_angle(w) * h.value
            err += h.err
        pf = mp.mpf(q) ** (-mp.re(s)) if mp.im(s) == 0 else mp.mpf(q) ** (-s)
        total *= pf
        return ComplexApprox(total, abs(pf) * err + _rounding_slop(3 * q, abs(total) + 1))


_LVALUE_CACHE: dict = {}


def dirichlet_l_cached(chi: DirichletCharacter, s, cfg: PrecisionConfig) -> ComplexApprox:
    from .lerch import _s_key

    key = (chi.q, chi.exps, _s_key(s), cfg.dps)
    hit = _LVALUE_CACHE.get(key)
    if hit is None:
        hit = dirichlet_l(chi, s, cfg)
        _LVALUE_CACHE[key] = hit
    return hit


def twisted_hurwitz_l(arg: TwistedHurwitzArg, cfg: PrecisionConfig | None = None, route: str = "residues") -> ComplexApprox:
    """Twisted Hurwitz value by either of two independent reductions.

    route="residues": split n = b mod ell by residues mod q*ell,
      L = q^(-s) sum_{r = b mod ell, 1 <= r <= q ell} chi(r) zeta(0, r/(q ell), s);
    valid for every chi.  route="charsum": the Gauss-sum transform
      L = tau(conj chi)^(-1) sum_{a mod q} conj(chi)(a) e(ab/q) zeta(a ell/q, b/ell, s);
    requires primitive chi.  Sweeps default to "residues".
    """
    cfg = cfg or make_config()
    chi, b, ell, s = arg.chi, arg.b, arg.ell, arg.s
    q = chi.q
    with cfg.work():
        if route == "residues":
            terms = []
            for r in range(b, q * ell + 1, ell):
                w = chi.angle(r)
                if w is None:
                    continue
                h = hurwitz_cached(Fraction(r, q * ell), s, cfg)
                terms.append(ComplexApprox(e_angle(w), mp.mpf(2) ** (3 - mp.mp.prec)) * h)
            if not terms:
                return ComplexApprox.exact(0)
            pf = ComplexApprox(mp.mpf(q) ** (-s) if mp.im(s) != 0 else mp.mpf(q) ** (-mp.re(s)), 0)
            return approx_sum(terms) * pf
        if route == "charsum":
            if conductor(chi)[0] != q:
                raise ValueError("the character-sum route requires a primitive character")
            tau = gauss_sum(chi.conjugate())
            terms = []
            for a in range(1, q + 1):
                w = chi.conjugate().angle(a)
                if w is None:
                    continue
                z = lerch_eval(LerchArgument(Fraction(a * ell, q), Fraction(b, ell), s), cfg)
                terms.append(ComplexApprox(e_angle(w + Fraction(a * b, q)), mp.mpf(2) ** (3 - mp.mp.prec)) * z)
            return approx_sum(terms) / tau
        raise ValueError(f"unknown route {route!r}")


def twisted_hurwitz_series(arg: TwistedHurwitzArg, cfg: PrecisionConfig | None = None, n_terms: int = 20000) -> ComplexApprox:
    """Defining series ell^s sum_{n = b mod ell} chi(n) n^(-s); Re s > 1 only.

    Kept as an independent low-tech check of the reductions above.
    """
    cfg = cfg or make_config()
    chi, b, ell, s = arg.chi, arg.b, arg.ell, arg.s
    with cfg.work():
        sigma = mp.re(s)
        if not sigma > 1:
            raise ValueError("the defining series needs Re s > 1")
        total = mp.mpc(0)
        n = b
        count = 0
        while count < n_terms:
            w = chi.angle(n)
            if w is not None:
                total += e_angle(w) * mp.mpf(n) ** (-s)
            n += ell
            count += 1
        tail = mp.mpf(n) ** (1 - sigma) / ((sigma - 1) * ell) * 2
        pf = mp.mpf(ell) ** s
        return ComplexApprox(pf * total, abs(pf) * (tail + _rounding_slop(n_terms, 1)))


def twisted_periodic_l(arg: TwistedPeriodicArg, cfg: PrecisionConfig | None = None) -> ComplexApprox:
    """L(alpha, psi, s) = ell^(-s) sum_{b=1}^{ell} psi(b) e(b alpha) zeta(ell alpha, b/ell, s).

    1-periodic in alpha by construction (alpha is canonicalized).  At
    s = 1 the value is finite iff the summed pole coefficients cancel;
    a genuine pole raises LerchPole.
    """
    cfg = cfg or make_config()
    alpha, psi, s = arg.alpha, arg.psi, arg.s
    ell = psi.q
    with cfg.work():
        inner = (ell * alpha) % 1
        if s == 1 and inner == 0:
            pole_coeff = approx_sum(
                ComplexApprox(e_angle(psi.angle(b) + b * alpha), mp.mpf(2) ** (3 - mp.mp.prec))
                for b in range(1, ell + 1)
                if psi.angle(b) is not None
            )
            if pole_coeff.abs_lower() > 0:
                raise LerchPole("twisted periodic zeta has a pole at s = 1 here")
            terms = []
            for b in range(1, ell + 1):
                w = psi.angle(b)
                if w is None:
                    continue
                h = hurwitz_em(Fraction(b, ell), 1, cfg=cfg, regularized=True)
                terms.append(ComplexApprox(e_angle(w + b * alpha), mp.mpf(2) ** (3 - mp.mp.prec)) * h)
            return approx_sum(terms) * ComplexApprox(mp.mpf(ell) ** mp.mpf(-1), 0)
        terms = []
        for b in range(1, ell + 1):
            w = psi.angle(b)
            if w is None:
                continue
            z = lerch_eval(LerchArgument(inner, Fraction(b, ell), s), cfg)
            terms.append(ComplexApprox(e_angle(w + b * alpha), mp.mpf(2) ** (3 - mp.mp.prec)) * z)
        pf = ComplexApprox(mp.mpf(ell) ** (-s) if mp.im(s) != 0 else mp.mpf(ell) ** (-mp.re(s)), 0)
        return approx_sum(terms) * pf


# ---------------------------------------------------------------------------
# the exact transform between twisted periodic zetas and L-functions
# ---------------------------------------------------------------------------


class IdentityCheck(NamedTuple):
    residual: mp.mpf
    bound: mp.mpf
    lhs: ComplexApprox
    rhs: ComplexApprox


def birch_stevens_lhs(chi: DirichletCharacter, psi: DirichletCharacter, s, cfg: PrecisionConfig | None = None) -> ComplexApprox:
    """sum_{a mod q} sum_{1<=b<=ell} chi(a) psi(b) e(ab/q) zeta(a ell/q, b/ell, s)."""
    cfg = cfg or make_config()
    from .lerch import as_mpc_s

    q, ell = chi.q, psi.q
    s = as_mpc_s(s)
    with cfg.work():
        terms = []
        for a in range(1, q + 1):
            wa = chi.angle(a)
            if wa is None:
                continue
            alpha = Fraction(a * ell, q) % 1
            for b in range(1, ell + 1):
                wb = psi.angle(b)
                if wb is None:
                    continue
                z = lerch_eval(LerchArgument(alpha, Fraction(b, ell), s), cfg)
                phase = ComplexApprox(e_angle(wa + wb + Fraction(a * b, q)), mp.mpf(2) ** (3 - mp.mp.prec))
                terms.append(phase * z)
        return approx_sum(terms)


def birch_stevens_rhs(chi: DirichletCharacter, psi: DirichletCharacter, s, cfg: PrecisionConfig | None = None) -> ComplexApprox:
    """ell^s tau(chi*) nu_s(chi*, psi, q/q*) L(conj(chi*) psi, s)."""
    cfg = cfg or make_config()
    from .lerch import as_mpc_s

    s = as_mpc_s(s)
    with cfg.work():
        qstar, chistar = conductor(chi)
        tau = gauss_sum(chistar)
        nu = nu_weight(chistar, psi, s, chi.q // qstar)
        lval = dirichlet_l(pointwise_product(chistar.conjugate(), psi), s, cfg)
        ell_pow = ComplexApprox(mp.mpf(psi.q) ** s if mp.im(s) != 0 else mp.mpf(psi.q) ** mp.re(s), 0)
        return ell_pow * tau * nu * lval


def birch_stevens_residual(chi: DirichletCharacter, psi: DirichletCharacter, s, cfg: PrecisionConfig | None = None) -> IdentityCheck:
    """|LHS - RHS| of the transform, with the combined error bound."""
    cfg = cfg or make_config()
    with cfg.work():
        lhs = birch_stevens_lhs(chi, psi, s, cfg)
        rhs = birch_stevens_rhs(chi, psi, s, cfg)
        return IdentityCheck(abs(lhs.value - rhs.value), lhs.err + rhs.err, lhs, rhs)


def character_twisted_periodic_sum(chi: DirichletCharacter, psi: DirichletCharacter, s, cfg: PrecisionConfig | None = None) -> ComplexApprox:
    """sum_{a mod q} chi(a) L(a/q, psi, s), the compact form of the transform.

    Equals tau(chi*) nu_s(chi*, psi, q/q*) L(conj(chi*) psi, s); used by
    the wide-moment drivers to turn one character transform into one
    L-value without the double sum.
    """
    cfg = cfg or make_config()
    q = chi.q
    with cfg.work():
        terms = []
        for a in range(1, q + 1):
            w = chi.angle(a)
            if w is None:
                continue
            val = twisted_periodic_l(TwistedPeriodicArg(Fraction(a, q), psi, s), cfg)
            terms.append(ComplexApprox(e_angle(w), mp.mpf(2) ** (3 - mp.mp.prec)) * val)
        return approx_sum(terms)
