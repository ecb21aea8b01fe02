"""Evaluation routes for zeta(alpha, c, s) = sum_{n>=0} e(n alpha) (n+c)^(-s).

Four independent routes, each with an explicit truncation/remainder
estimate folded into the returned error bound:

  lerch_series   -- the defining series (absolute regime, or the
                    conditionally convergent regime via an Abel bound on
                    the oscillatory tail); refuses when the bound cannot
                    reach the target within the term cap.
  hurwitz_em     -- alpha = 0 only: Euler-Maclaurin continuation of the
                    Hurwitz zeta, valid for every s != 1, with a fully
                    explicit remainder bound.
  lerch_hurwitz_comb -- rational alpha: the exact finite combination
                    zeta(a/p, c, s) = p^(-s) sum_r e(ra/p) zeta(0,(r+c)/p,s),
                    inheriting hurwitz_em's domain (all s != 1; at s = 1
                    the pole parts cancel exactly for alpha not in Z).
  lerch_taylor   -- expansion of the series tail in powers of c against
                    cached shifted values zeta(alpha, 1, s+j); geometric
                    with ratio <= 3c/(2M) after an M-term explicit head.
  lerch_integral -- quadrature of the period integral
                    Gamma(s)^(-1) int_0^inf t^(s-1) e^(-ct)/(1-e(alpha)e^(-t)) dt.

lerch_eval dispatches to the cheapest applicable route and can
cross-check overlapping routes against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath as mp

from .approx import ComplexApprox
from .bernoulli import shared_table
from .characters import e_angle
from .precision import PrecisionConfig, make_config


class LerchPole(ArithmeticError):
    """The requested value sits on the s = 1 pole (alpha integral)."""


class RouteUnavailable(RuntimeError):
    """No evaluation route can certify the target accuracy here."""


class RouteDisagreement(ArithmeticError):
    """Two routes disagreed beyond their combined error bounds."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**12)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def as_mpc_s(s) -> mp.mpc:
    """Coerce an s-argument (Fraction, real, complex, mp type) to mpc."""
    if isinstance(s, Fraction):
        return mp.mpc(mp.mpf(s.numerator) / s.denominator)
    return mp.mpc(s)


@dataclass(frozen=True)
class LerchArgument:
    """Evaluation point (alpha, c, s) with exact rational alpha, c."""

    alpha: Fraction
    c: Fraction
    s: mp.mpc

    def __init__(self, alpha, c, s):
        a = _as_fraction(alpha) % 1
        cc = _as_fraction(c)
        if not 0 < cc <= 1:
            raise ValueError(f"c must lie in (0, 1], got {cc}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "c", cc)
        object.__setattr__(self, "s", as_mpc_s(s))

    @property
    def alpha_is_integral(self) -> bool:
        return self.alpha == 0

    def conjugate(self) -> "LerchArgument":
        return LerchArgument((-self.alpha) % 1, self.c, mp.conj(self.s))


def _frac_mpf(x: Fraction) -> mp.mpf:
    return mp.mpf(x.numerator) / x.denominator


def _is_real(s) -> bool:
    return mp.im(s) == 0


def _power_inv(x: mp.mpf, s) -> mp.mpf | mp.mpc:
    """x^(-s) for x > 0; fast paths for the common real exponents."""
    if _is_real(s):
        sr = mp.re(s)
        if sr == 0.5:
            return 1 / mp.sqrt(x)
        if sr == mp.floor(sr) and abs(sr) <= 16:
            return x ** (-int(sr))
        return x ** (-sr)
    return x ** (-s)


def _rounding_slop(nops: int, scale) -> mp.mpf:
    return (nops + 16) * (scale + mp.mpf(2) ** (-mp.mp.prec)) * mp.mpf(2) ** (4 - mp.mp.prec)


# ---------------------------------------------------------------------------
# defining series
# ---------------------------------------------------------------------------


def lerch_series(arg: LerchArgument, cfg: PrecisionConfig | None = None, sigma_margin: float = 0.05) -> ComplexApprox:
    """Direct summation with an explicit tail bound.

    Absolute regime (Re s > 1 + margin): integral-comparison tail.
    Oscillatory regime (alpha not in Z, Re s > margin): summation over
    whole periods of e(n alpha) and an Abel/partial-summation tail bound
    B(alpha) [ (N+1+c)^(-sigma) + |s|/sigma (N+c)^(-sigma) ] with
    B(alpha) = 1/|sin(pi alpha)|.
    """
    cfg = cfg or make_config()
    with cfg.work():
        s = arg.s
        sigma = mp.re(s)
        c = _frac_mpf(arg.c)
        eps = cfg.eps / 2

        n_abs = None
        if sigma > 1 + sigma_margin:
            # (N+c)^(1-sigma)/(sigma-1) <= eps
            n_abs = int(mp.ceil((eps * (sigma - 1)) ** (1 / (1 - sigma)) - c)) + 1
        n_osc = None
        if arg.alpha != 0 and sigma > sigma_margin:
            B = 1 / abs(mp.sinpi(_frac_mpf(arg.alpha)))
            target = eps / (B * (1 + abs(s) / sigma))
            n_osc = int(mp.ceil(target ** (-1 / sigma))) + 1
            per = arg.alpha.denominator
            n_osc += (-n_osc) % per  # stop at a whole period boundary

        candidates = [n for n in (n_abs, n_osc) if n is not None and n <= cfg.series_cap]
        if not candidates:
            if arg.alpha == 0 and sigma <= 1 + sigma_margin:
                raise RouteUnavailable(f"series diverges or converges too slowly at Re s = {float(sigma)} with alpha = 0")
            raise RouteUnavailable("series tail bound cannot reach the target within the term cap")
        N = min(candidates)
        use_abs = n_abs is not None and n_abs <= N

        if arg.alpha == 0:
            total = mp.fsum(_power_inv(n + c, s) for n in range(N + 1))
            total = mp.mpc(total)
        else:
            per = arg.alpha.denominator
            roots = [e_angle(Fraction(j * arg.alpha.numerator, per)) for j in range(per)]
            total = mp.mpc(0)
            for n in range(N + 1):
                total += roots[n % per] * _power_inv(n + c, s)

        if use_abs:
            tail = (N + c) ** (1 - sigma) / (sigma - 1)
        else:
            B = 1 / abs(mp.sinpi(_frac_mpf(arg.alpha)))
            tail = B * ((N + 1 + c) ** (-sigma) + abs(s) / sigma * (N + c) ** (-sigma))
        err = tail + _rounding_slop(N + 2, max(c ** (-sigma), abs(total)))
        return ComplexApprox(total, err)


# ---------------------------------------------------------------------------
# Euler-Maclaurin continuation of the Hurwitz zeta (alpha = 0)
# ---------------------------------------------------------------------------


def _em_remainder_bound(sigma, s_abs_prods, K: int, base) -> mp.mpf:
    # |R_K| <= 3.3 (2 pi)^(-K) prod_{j<K} |s+j| (L+c)^(1-sigma-K) / (sigma+K-1)
    if sigma + K <= 1:
        return mp.inf
    return mp.mpf("3.3") * (2 * mp.pi) ** (-K) * s_abs_prods[K] * base ** (1 - sigma - K) / (sigma + K - 1)


def hurwitz_em(
    c,
    s,
    L: int | None = None,
    K: int | None = None,
    cfg: PrecisionConfig | None = None,
    regularized: bool = False,
) -> ComplexApprox:
    """zeta(0, c, s) for c > 0 by Euler-Maclaurin, with explicit remainder.

        zeta(0,c,s) = sum_{n<=L} (n+c)^(-s) + (L+c)^(1-s)/(s-1) - (L+c)^(-s)/2
                      + sum_{k=2,even}^{K} B_k/k! prod_{j=0}^{k-2}(s+j) (L+c)^(1-s-k) + R_K

    With regularized=True and s = 1 the pole term 1/(s-1) is dropped and
    the finite part (equal to -digamma(c)) is returned instead.

    Passing L=None or K=None selects them adaptively for the configured
    target error; explicit values are honored as given.
    """
    cfg = cfg or make_config()
    with cfg.work():
        cf = _frac_mpf(c) if isinstance(c, Fraction) else mp.mpf(c)
        if not cf > 0:
            raise ValueError(f"need c > 0, got {c}")
        s = as_mpc_s(s)
        at_pole = s == 1
        if at_pole and not regularized:
            raise LerchPole("Hurwitz zeta has its simple pole at s = 1")
        if regularized and not at_pole:
            raise ValueError("regularized evaluation is defined at s = 1 only")
        sigma = mp.re(s)
        eps = cfg.eps / 2

        def pick_K(Lc, k_cap):
            # scan even K upward, updating the remainder bound by its
            # K -> K+2 ratio; stop at the first K under target (minimal K)
            # or when the bound turns around (Bernoulli growth has won).
            k0 = 2
            while sigma + k0 <= 1:
                k0 += 2
            if k0 > k_cap:
                return None, mp.inf
            prod = mp.mpf(1)
            for j in range(k0 - 1):
                prod *= abs(s + j)
            R = mp.mpf("3.3") * (2 * mp.pi) ** (-k0) * prod * Lc ** (1 - sigma - k0) / (sigma + k0 - 1)
            denom = (2 * mp.pi * Lc) ** 2
            best_k, best_b = k0, R
            k = k0
            while R > eps and k + 2 <= k_cap:
                R = R * abs(s + k) * abs(s + k + 1) / denom * (sigma + k - 1) / (sigma + k + 1)
                k += 2
                if R < best_b:
                    best_k, best_b = k, R
                elif R > 4 * best_b:
                    break
            return best_k, best_b

        if L is None or K is None:
            Lv = max(8, int(mp.ceil(abs(s))) + 4)
            while True:
                Kv, bound = pick_K(Lv + cf, cfg.em_max_k)
                if bound <= eps or Lv > 4_000_000:
                    break
                Lv *= 2
            if bound > eps:
                raise RouteUnavailable("Euler-Maclaurin remainder cannot reach the target within caps")
        else:
            Lv, Kv = L, K
            prods = [mp.mpf(1)]
            for j in range(Kv):
                prods.append(prods[-1] * abs(s + j))
            bound = _em_remainder_bound(sigma, prods, Kv, Lv + cf)
            if not mp.isfinite(bound):
                raise RouteUnavailable(f"remainder bound requires Re s + K > 1 (got {float(sigma)} + {Kv})")

        real_s = _is_real(s) and not at_pole
        base = Lv + cf
        if at_pole:
            head = mp.fsum(1 / (n + cf) for n in range(Lv + 1))
            v = mp.mpc(head - mp.log(base) - 0.5 / base)
        elif real_s:
            sr = mp.re(s)
            head = mp.fsum(_power_inv(n + cf, sr) for n in range(Lv + 1))
            v = mp.mpc(head + base ** (1 - sr) / (sr - 1) - mp.mpf(0.5) * base ** (-sr))
        else:
            head = mp.fsum(_power_inv(n + cf, s) for n in range(Lv + 1))
            v = head + base ** (1 - s) / (s - 1) - mp.mpf(0.5) * base ** (-s)

        table = shared_table()
        prod = mp.mpc(1) if not real_s else mp.mpf(1)  # prod_{j=0}^{k-2} (s+j)
        sval = mp.re(s) if real_s or at_pole else s
        for k in range(2, Kv + 1, 2):
            # extend the falling product up to j = k-2
            lo = 0 if k == 2 else k - 3
            for j in range(lo, k - 1):
                prod *= sval + j
            bk = table.number(k)
            coeff = mp.mpf(bk.numerator) / bk.denominator / mp.factorial(k)
            if at_pole:
                v += coeff * prod * base ** (-k)
            else:
                v += coeff * prod * base ** (1 - sval - k)

        scale = max(cf ** (-sigma) if sigma > 0 else base ** (-sigma), abs(v))
        err = bound + _rounding_slop(Lv + Kv, scale)
        return ComplexApprox(v, err)


# ---------------------------------------------------------------------------
# caches
# ---------------------------------------------------------------------------

_HURWITZ_CACHE: dict = {}
_SHIFT_CACHE: dict = {}


def clear_caches() -> None:
    _HURWITZ_CACHE.clear()
    _SHIFT_CACHE.clear()


def _s_key(s) -> tuple:
    s = as_mpc_s(s)
    return (s.real._mpf_, s.imag._mpf_)


def hurwitz_cached(c: Fraction, s, cfg: PrecisionConfig) -> ComplexApprox:
    key = (c.numerator, c.denominator, _s_key(s), cfg.dps)
    hit = _HURWITZ_CACHE.get(key)
    if hit is None:
        hit = hurwitz_em(c, s, cfg=cfg)
        _HURWITZ_CACHE[key] = hit
    return hit


def _hurwitz_reg_cached(c: Fraction, cfg: PrecisionConfig) -> ComplexApprox:
    key = (c.numerator, c.denominator, "reg", cfg.dps)
    hit = _HURWITZ_CACHE.get(key)
    if hit is None:
        hit = hurwitz_em(c, 1, cfg=cfg, regularized=True)
        _HURWITZ_CACHE[key] = hit
    return hit


def periodic_zeta_shifted(alpha: Fraction, s, j_max: int, cfg: PrecisionConfig) -> list[ComplexApprox]:
    """Cached values zeta(alpha, 1, s + j) for j = 0..j_max.

    Small shifts go through the exact Hurwitz combination; once the
    shifted exponent makes the defining series cheap, direct summation
    with an integral tail bound takes over.
    """
    alpha = alpha % 1
    key = (alpha.numerator, alpha.denominator, _s_key(s), cfg.dps)
    store = _SHIFT_CACHE.setdefault(key, {})
    missing = [j for j in range(j_max + 1) if j not in store]
    if not missing:
        return [store[j] for j in range(j_max + 1)]
    with cfg.work():
        s = as_mpc_s(s)
        sigma = mp.re(s)
        eps = cfg.eps / 4
        p = alpha.denominator
        series_cap = max(2000, 40 * p)
        for j in missing:
            sj = s + j
            n_direct = None
            if sigma + j > 1.5:
                n_direct = int(mp.ceil((eps * (sigma + j - 1)) ** (-1 / (sigma + j - 1)))) + 2
            if n_direct is not None and (n_direct <= series_cap or alpha == 0):
                if alpha == 0:
                    store[j] = hurwitz_cached(Fraction(1), sj, cfg)
                else:
                    store[j] = lerch_series(LerchArgument(alpha, 1, sj), cfg)
            else:
                store[j] = lerch_hurwitz_comb(LerchArgument(alpha, 1, sj), cfg)
    return [store[j] for j in range(j_max + 1)]


# ---------------------------------------------------------------------------
# exact rational-alpha combination
# ---------------------------------------------------------------------------


def lerch_hurwitz_comb(arg: LerchArgument, cfg: PrecisionConfig | None = None) -> ComplexApprox:
    """zeta(a/p, c, s) = p^(-s) sum_{r<p} e(ra/p) zeta(0, (r+c)/p, s).

    Exact finite reduction to Hurwitz values; valid for every s where
    the right side is (all s != 1, plus s = 1 itself when alpha is not
    integral, where the pole parts cancel and the finite parts are used).
    """
    cfg = cfg or make_config()
    if arg.alpha == 0:
        return hurwitz_em(arg.c, arg.s, cfg=cfg)
    with cfg.work():
        s = arg.s
        p = arg.alpha.denominator
        a = arg.alpha.numerator
        at_pole = s == 1
        pf = mp.mpf(p) ** (-s) if not _is_real(s) else mp.mpf(p) ** (-mp.re(s))
        total = mp.mpc(0)
        err = mp.mpf(0)
        for r in range(p):
            cj = (r + arg.c) / p
            h = _hurwitz_reg_cached(cj, cfg) if at_pole else hurwitz_cached(cj, s, cfg)
            total += e_angle(Fraction(r * a, p)) * h.value
            err += h.err
        total *= pf
        scale = abs(total)
        if mp.re(s) > 0:
            scale += abs(pf) * _frac_mpf(arg.c) ** (-mp.re(s))
        err = abs(pf) * err + _rounding_slop(3 * p, scale)
        return ComplexApprox(total, err)


# ---------------------------------------------------------------------------
# Taylor route (expansion of the tail in powers of c)
# ---------------------------------------------------------------------------


def lerch_taylor(arg: LerchArgument, cfg: PrecisionConfig | None = None, head: int = 4, j_cap: int = 500) -> ComplexApprox:
    """Expansion against cached shifted values zeta(alpha, 1, s+j).

    With an explicit M-term head (M = `head`),

      zeta(alpha,c,s) = sum_{n<M} e(n alpha)(n+c)^(-s)
                        + e(alpha) sum_{j>=0} (-c)^j C(s+j-1, j) (P_j - H_j),

    where P_j = zeta(alpha,1,s+j) and H_j = sum_{k<M-1} e(k alpha)(k+1)^(-s-j).
    Terms decay like (c/M)^j; the reported bound adds the proven
    geometric tail estimate once j exceeds max(4, 2|s|).
    """
    cfg = cfg or make_config()
    with cfg.work():
        s = arg.s
        sigma = mp.re(s)
        if sigma <= 0:
            raise RouteUnavailable("Taylor route needs Re s > 0")
        if arg.alpha == 0 and s == 1:
            raise LerchPole("pole at s = 1")
        c = arg.c
        if c == 1:
            return periodic_zeta_shifted(arg.alpha, s, 0, cfg)[0]
        M = max(2, head)
        cf = _frac_mpf(c)
        eps = cfg.eps / 4

        per = arg.alpha.denominator
        roots = [e_angle(Fraction(j * arg.alpha.numerator, per)) for j in range(per)]

        head_val = mp.mpc(0)
        for n in range(M):
            head_val += roots[n % per] * _power_inv(n + cf, s)

        j_lo = int(max(4, mp.ceil(2 * abs(s))))
        tail_ratio = mp.mpf(3) * cf / (2 * M)

        total = mp.mpc(0)
        err = mp.mpf(0)
        binom = mp.mpc(1)  # C(s+j-1, j)
        cpow = mp.mpf(1)  # c^j
        j = 0
        grow = 0
        prev_bound = None
        while True:
            chunk = 48
            P = periodic_zeta_shifted(arg.alpha, s, min(j + chunk, j_cap), cfg)
            while j <= min(len(P) - 1, j_cap):
                # H_j = sum_{k=0}^{M-2} e(k alpha) (k+1)^(-s-j)
                Hj = mp.mpc(0)
                for k in range(M - 1):
                    Hj += roots[k % per] * _power_inv(mp.mpf(k + 1), s + j)
                Zj = P[j].value - Hj
                sign = -1 if j % 2 else 1
                term = sign * cpow * binom * Zj
                total += term
                err += cpow * abs(binom) * P[j].err
                # explicit bound on the next terms once the decay regime is reached
                if j >= j_lo:
                    zbar = mp.mpf(M) ** (-sigma - j - 1) * (1 + mp.mpf(M) / (sigma + j))
                    bbar = abs(binom) * (abs(s) + j) / (j + 1)
                    nxt = cpow * cf * bbar * zbar
                    if prev_bound is not None and nxt > prev_bound * 1.05:
                        grow += 1
                        if grow > 8:
                            raise RouteUnavailable("Taylor term bounds fail to decay")
                    prev_bound = nxt
                    if nxt / (1 - tail_ratio) <= eps:
                        err += nxt / (1 - tail_ratio)
                        total = head_val + roots[1 % per] * total
                        err += _rounding_slop(8 * (j + M), abs(total) + cf ** (-sigma))
                        return ComplexApprox(total, err)
                binom *= (s + j) / (j + 1)
                cpow *= cf
                j += 1
            if j > j_cap:
                raise RouteUnavailable("Taylor route exhausted its expansion cap")


# ---------------------------------------------------------------------------
# period-integral route
# ---------------------------------------------------------------------------


def lerch_integral(arg: LerchArgument, cfg: PrecisionConfig | None = None) -> ComplexApprox:
    """Quadrature of Gamma(s)^(-1) int_0^inf t^(s-1) e^(-ct) / (1 - e(alpha) e^(-t)) dt.

    Requires Re s > 0 and alpha not integral (the integrand acquires a
    non-integrable pole at t = 0 otherwise).  The [0,1] piece is mapped
    through t = u^2 to soften the endpoint; the far tail beyond an
    explicit cutoff T is bounded analytically.  The returned bound is a
    quadrature error estimate, not a certified enclosure; honesty is
    checked empirically against higher-precision reruns.
    """
    cfg = cfg or make_config()
    if arg.alpha == 0:
        raise RouteUnavailable("integral route needs alpha not in Z")
    with cfg.work():
        s = arg.s
        sigma = mp.re(s)
        if not sigma > 0:
            raise RouteUnavailable("integral route needs Re s > 0")
        c = _frac_mpf(arg.c)
        w = e_angle(arg.alpha)
        eps = cfg.eps / 8

        # cutoff with (2/c) T^(sigma-1) e^(-cT) / (1 - e^-T) <= eps
        T = mp.mpf(1)
        for _ in range(4):
            T = max(mp.mpf(2), (mp.log(2 / (c * eps)) + max(sigma - 1, 0) * mp.log(T)) / c)
        tail = (2 / c) * T ** (sigma - 1) * mp.exp(-c * T) / (1 - mp.exp(-T))

        def g(t):
            return mp.exp(-c * t) / (1 - w * mp.exp(-t))

        part1, e1 = mp.quad(lambda u: 2 * u ** (2 * s - 1) * g(u * u), [0, 1], error=True, maxdegree=10)
        pts = [mp.mpf(1)]
        while pts[-1] < T:
            pts.append(min(pts[-1] * 4, T))
        part2, e2 = mp.quad(lambda t: t ** (s - 1) * g(t), pts, error=True, maxdegree=10)
        integral = ComplexApprox(part1 + part2, 10 * (mp.mpf(e1) + mp.mpf(e2)) + tail)
        gamma = mp.gamma(s)
        gam = ComplexApprox(gamma, abs(gamma) * mp.mpf(2) ** (8 - mp.mp.prec))
        return integral / gam


# ---------------------------------------------------------------------------
# functional equation
# ---------------------------------------------------------------------------


class FunctionalEquationCheck(NamedTuple):
    residual: mp.mpf
    bound: mp.mpf
    lhs: ComplexApprox
    rhs: ComplexApprox


def functional_equation_check(arg: LerchArgument, cfg: PrecisionConfig | None = None) -> FunctionalEquationCheck:
    """Residual of the reflection identity at (alpha, c, s).

    Checks  zeta(alpha, c, 1-s)  against

      Gamma(s)/(2 pi)^s [ e(s/4 - alpha c) zeta(1-c, alpha, s)
                          + e(-s/4 + (1-alpha) c) zeta(c, 1-alpha, s) ],

    where the first slot of each right-hand value is reduced mod 1.
    Valid for 0 < alpha < 1 and 0 < c < 1; s is the argument's s-field,
    so the identity is probed at 1 - s on the left.
    """
    cfg = cfg or make_config()
    if not (0 < arg.alpha < 1 and 0 < arg.c < 1):
        raise ValueError("functional equation check needs 0 < alpha < 1 and 0 < c < 1")
    with cfg.work():
        s = arg.s
        lhs = lerch_eval(LerchArgument(arg.alpha, arg.c, 1 - s), cfg)
        z1 = lerch_eval(LerchArgument(1 - arg.c, Fraction(arg.alpha), s), cfg)
        z2 = lerch_eval(LerchArgument(arg.c, 1 - arg.alpha, s), cfg)
        phase = mp.exp(2j * mp.pi * s / 4)
        ph1 = ComplexApprox(phase * e_angle(-arg.alpha * arg.c), abs(phase) * mp.mpf(2) ** (8 - mp.mp.prec))
        ph2 = ComplexApprox(e_angle((1 - arg.alpha) * arg.c) / phase, abs(1 / phase) * mp.mpf(2) ** (8 - mp.mp.prec))
        gamma = mp.gamma(s)
        pref = ComplexApprox(gamma * (2 * mp.pi) ** (-s), abs(gamma * (2 * mp.pi) ** (-s)) * mp.mpf(2) ** (9 - mp.mp.prec))
        rhs = pref * (ph1 * z1 + ph2 * z2)
        resid = abs(lhs.value - rhs.value)
        return FunctionalEquationCheck(resid, lhs.err + rhs.err, lhs, rhs)


# ---------------------------------------------------------------------------
# central-point expansion coefficients in c
# ---------------------------------------------------------------------------


def central_coefficient_profile(alpha, n_max: int, cfg: PrecisionConfig | None = None) -> list[ComplexApprox]:
    """Coefficients C_n of zeta(alpha, c, 1/2) about c = 0:

      zeta(alpha,c,1/2) = (1+i)/2 alpha^(-1/2) + (1-i)/2 (1-alpha)^(-1/2)
                          + c^(-1/2) + sum_{n>=0} C_n(alpha) c^n,

    computed by pairing the tail expansion with cached shifted values:
    C_n = e(alpha) (-1)^n C(n-1/2, n) zeta(alpha,1,1/2+n) for n >= 1, and
    C_0 = e(alpha) zeta(alpha,1,1/2) minus the two fixed singular terms.
    """
    cfg = cfg or make_config()
    alpha = _as_fraction(alpha) % 1
    if alpha == 0:
        raise ValueError("coefficient profile needs alpha strictly inside (0, 1)")
    with cfg.work():
        half = mp.mpf(1) / 2
        P = periodic_zeta_shifted(alpha, half, n_max, cfg)
        ea = e_angle(alpha)
        af = _frac_mpf(alpha)
        out = []
        sing = (1 + 1j) / 2 * af ** -half + (1 - 1j) / 2 * (1 - af) ** -half
        c0 = ComplexApprox(ea * P[0].value - sing, P[0].err + _rounding_slop(8, abs(sing)))
        out.append(c0)
        binom = mp.mpf(1)
        for n in range(1, n_max + 1):
            binom *= (half + n - 1) / n  # C(n-1/2, n), real and positive
            sign = -1 if n % 2 else 1
            v = sign * binom * ea * P[n].value
            out.append(ComplexApprox(v, binom * P[n].err + _rounding_slop(4, abs(v))))
        return out


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

_MIN_ALPHA_DIST_FOR_QUAD = Fraction(1, 1000)


def _alpha_distance_to_z(alpha: Fraction) -> Fraction:
    a = alpha % 1
    return min(a, 1 - a)


def applicable_routes(arg: LerchArgument, cfg: PrecisionConfig | None = None) -> list[str]:
    """Route names usable at this argument, cheapest first."""
    cfg = cfg or make_config()
    s = arg.s
    sigma = mp.re(s)
    routes: list[str] = []
    if arg.alpha == 0:
        if s != 1:
            routes.append("em")
            if sigma > 0 and s != 1:
                routes.append("taylor")
        return routes
    p = arg.alpha.denominator
    if p <= 4096:
        routes.append("comb")
    if sigma > 0:
        routes.append("taylor")
        if _alpha_distance_to_z(arg.alpha) >= _MIN_ALPHA_DIST_FOR_QUAD:
            routes.append("integral")
    # the defining series is honest but rarely cheap; offer it when its cap suffices
    try:
        with cfg.work():
            eps = cfg.eps / 2
            ok = False
            if sigma > 1.05:
                n_abs = (eps * (sigma - 1)) ** (1 / (1 - sigma))
                ok = n_abs <= cfg.series_cap
            if not ok and sigma > 0.05:
                B = 1 / abs(mp.sinpi(_frac_mpf(arg.alpha)))
                n_osc = (eps / (B * (1 + abs(s) / sigma))) ** (-1 / sigma)
                ok = n_osc <= cfg.series_cap
            if ok:
                routes.append("series")
    except Exception:
        pass
    return routes


_ROUTE_FUNCS = {}


def lerch_eval(
    arg: LerchArgument,
    cfg: PrecisionConfig | None = None,
    route: str | None = None,
    cross_check: bool = False,
) -> ComplexApprox:
    """Dispatch to the cheapest applicable route.

    Raises LerchPole at (alpha in Z, s = 1) and RouteUnavailable when no
    route covers the argument.  With cross_check=True the two cheapest
    applicable routes are both run; disagreement beyond combined bounds
    raises RouteDisagreement, otherwise the tighter result is returned.
    """
    cfg = cfg or make_config()
    if arg.alpha == 0 and arg.s == 1:
        raise LerchPole("zeta(0, c, s) has its pole at s = 1")
    if route is not None:
        return _ROUTE_FUNCS[route](arg, cfg)
    names = applicable_routes(arg, cfg)
    if not names:
        raise RouteUnavailable(f"no route available at alpha={arg.alpha}, c={arg.c}, s={arg.s}")
    if not cross_check:
        return _ROUTE_FUNCS[names[0]](arg, cfg)
    first = _ROUTE_FUNCS[names[0]](arg, cfg)
    if len(names) == 1:
        return first
    second = _ROUTE_FUNCS[names[1]](arg, cfg)
    if not first.agrees_with(second):
        raise RouteDisagreement(
            f"routes {names[0]} and {names[1]} disagree at {arg}: "
            f"|{first.value} - {second.value}| > {first.err + second.err}"
        )
    return first if first.err <= second.err else second


_ROUTE_FUNCS.update(
    {
        "series": lerch_series,
        "em": lambda arg, cfg: hurwitz_em(arg.c, arg.s, cfg=cfg),
        "comb": lerch_hurwitz_comb,
        "taylor": lerch_taylor,
        "integral": lerch_integral,
    }
)


def zeta_value(s, cfg: PrecisionConfig | None = None) -> ComplexApprox:
    """Riemann zeta via the Euler-Maclaurin engine (s != 1)."""
    cfg = cfg or make_config()
    return hurwitz_cached(Fraction(1), as_mpc_s(s), cfg)
