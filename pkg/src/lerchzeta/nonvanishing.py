"""Certified non-vanishing counts over wide families, and the
first/second-moment lower-bound pipeline.

A central value is *certified nonzero* when its modulus clears both a
multiple of its own error bound and an absolute floor; anything smaller
is *indeterminate*, never "certified zero" (numerics cannot prove a
true zero).  A tuple counts iff every factor is certified.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import mpmath as mp

from .approx import ComplexApprox
from .characters import DirichletCharacter, conductor, enumerate_characters, pointwise_product, unit_group
from .lvalues import dirichlet_l_cached
from .moments import WideMomentSpec
from .numtheory import primitive_totient
from .precision import PrecisionConfig, make_config


@dataclass
class NonvanishingReport:
    spec: WideMomentSpec
    certified: int
    indeterminate: int
    family_size: int
    first_moment: ComplexApprox
    second_moment: ComplexApprox
    cs_lower_bound: mp.mpf
    cs_interval: tuple[mp.mpf, mp.mpf]
    threshold_mult: float = 10.0
    per_character_certified: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.certified + self.indeterminate > self.family_size:
            raise ValueError("certified + indeterminate exceeds the family size")


def cauchy_schwarz_bound(first_moment: ComplexApprox, second_moment: ComplexApprox):
    """Lower bound |sum prod L|^2 / sum prod |L|^2 for the nonzero count.

    Returns (central quotient, (lo, hi) interval).  Degenerate second
    moments (interval touching zero) raise ZeroDivisionError.
    """
    lo2 = second_moment.abs_lower()
    hi2 = second_moment.abs_upper()
    if lo2 <= 0:
        raise ZeroDivisionError("second-moment interval contains zero")
    f_lo = first_moment.abs_lower()
    f_hi = first_moment.abs_upper()
    central = abs(first_moment.value) ** 2 / abs(second_moment.value)
    return central, (f_lo**2 / hi2, f_hi**2 / lo2)


def count_nonvanishing(spec: WideMomentSpec, cfg: PrecisionConfig | None = None, threshold_mult: float = 10.0, cap: int = 10**6) -> NonvanishingReport:
    """Scan Wide*(q, m; chi) and certify tuples with nonzero L-products.

    Central values are computed once per product character and shared
    across the tuple scan; the same scan accumulates the first and
    second moments feeding the Cauchy-Schwarz lower bound.
    """
    cfg = cfg or make_config()
    q, m = spec.q, spec.m
    with cfg.work():
        floor = mp.mpf(10) ** (10 - cfg.dps)
        chars = enumerate_characters(q)
        orders = unit_group(q).orders
        prim = {chi.exps: conductor(chi)[0] == q for chi in chars}
        values: list[dict] = []
        flags: list[dict] = []
        for psi in spec.twists:
            vtab, ftab = {}, {}
            for chi in chars:
                lv = dirichlet_l_cached(pointwise_product(psi, chi), spec.s, cfg)
                vtab[chi.exps] = lv
                ftab[chi.exps] = abs(lv.value) > max(threshold_mult * lv.err, floor)
            values.append(vtab)
            flags.append(ftab)

        n_free = spec.family_size
        if n_free > cap:
            raise ValueError(f"family size {n_free} exceeds cap {cap}")
        target = spec.chi.exps
        certified = 0
        indeterminate = 0
        family = 0
        first = ComplexApprox.exact(0)
        second = ComplexApprox.exact(0)
        f_val, f_err = mp.mpc(0), mp.mpf(0)
        s_val, s_err = mp.mpf(0), mp.mpf(0)
        for combo in itertools.product(chars, repeat=m - 1):
            last = tuple((t - sum(ch.exps[k] for ch in combo)) % d for k, (t, d) in enumerate(zip(target, orders)))
            exps_list = [ch.exps for ch in combo] + [last]
            if not all(prim[e] for e in exps_list):
                continue
            family += 1
            prod = ComplexApprox.exact(1)
            ok = True
            for i, e in enumerate(exps_list):
                prod = prod * values[i][e]
                ok = ok and flags[i][e]
            if ok:
                certified += 1
            else:
                indeterminate += 1
            f_val += prod.value
            f_err += prod.err
            p2 = prod.abs2()
            s_val += p2.value.real
            s_err += p2.err
        first = ComplexApprox(f_val, f_err)
        second = ComplexApprox(s_val, s_err)
        if family == 0:
            return NonvanishingReport(spec, 0, 0, 0, first, second, mp.mpf(0), (mp.mpf(0), mp.mpf(0)), threshold_mult)
        cs, interval = cauchy_schwarz_bound(first, second)
        per_char = {}
        if m >= 2 and all(psi.q == 1 for psi in spec.twists):
            per_char = {e: flags[0][e] for e in flags[0] if prim[e]}
        return NonvanishingReport(spec, certified, indeterminate, family, first, second, cs, interval, threshold_mult, per_char)


def bettin_second_moment_prediction(q: int, m: int, cfg: PrecisionConfig | None = None) -> mp.mpf:
    """Asymptotic second-moment shape for the trivial-twist primitive family:

      (1/(q-2)^(m-1)) sum* prod |L(chi_i, 1/2)|^2
          ~ zeta(m/2)^2 / zeta(m) (log(q / 8 pi) + gamma)^m.
    """
    cfg = cfg or make_config()
    from .lerch import zeta_value

    with cfg.work():
        zh = zeta_value(mp.mpf(m) / 2, cfg).value.real
        zm = zeta_value(mp.mpf(m), cfg).value.real
        return zh**2 / zm * (mp.log(mp.mpf(q) / (8 * mp.pi)) + mp.euler) ** m


def nonvanishing_ratio(report: NonvanishingReport) -> float:
    """(certified count) (log10 q)^m / q^(m-1), the desk-scale shape check."""
    q, m = report.spec.q, report.spec.m
    return float(report.certified * mp.log10(q) ** m / mp.mpf(q) ** (m - 1))
