"""Wide-moment families, the exact finite Fourier identity, and the
moment sums the asymptotic theorems predict.

Conventions fixed here (and certified by exact brute-force agreement in
the tests):

* the wide moment of a spec is the *normalized* family sum
    (1/phi(q)^(m-1)) sum_{chi_1...chi_m = chi} prod_i L(psi_i chi_i, s),
  where L(psi_i chi_i, .) is the Dirichlet series of the pointwise
  product character mod lcm(q, ell_i);
* its exact dual ("one short sum instead of phi(q)^(m-1) tuples") is
    q^(-ms) sum_{b in (Z/q)^*} chi(b) prod_i L(psi_i, b, q, s)
  with L(psi, b, q, s) the twisted Hurwitz value on the progression
  b mod q;
* the coprime-restricted short sum unfolds over divisors d | q as
    sum_{d|q} mu(q/d) psi(q/d) (d/q)^(ms) T(d),
    T(d) = d^(-ms) sum_{b=1}^{d-1} prod_i L(psi_i, b, d, s),
  with psi = prod_i psi_i evaluated at q/d.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath as mp

from .approx import ComplexApprox, approx_sum
from .characters import (
    DirichletCharacter,
    conductor,
    e_angle,
    enumerate_characters,
    gauss_sum,
    nu_weight,
    pointwise_product,
    principal_character,
    unit_group,
)
from .lerch import _frac_mpf, _rounding_slop, _s_key, as_mpc_s, hurwitz_em, zeta_value
from .lvalues import TwistedHurwitzArg, dirichlet_l_cached, twisted_hurwitz_l, twisted_periodic_l, TwistedPeriodicArg
from .numtheory import divisors, is_prime, mobius, totient
from .precision import PrecisionConfig, make_config


@dataclass(frozen=True)
class WideMomentSpec:
    """One wide-moment family: modulus, width, target, twists."""

    q: int
    m: int
    chi: DirichletCharacter | None = None
    twists: tuple[DirichletCharacter, ...] = ()
    primitive_only: bool = False
    s: mp.mpc = field(default_factory=lambda: mp.mpc(0.5))

    def __post_init__(self):
        from .lerch import as_mpc_s

        if self.m < 2:
            raise ValueError(f"width must be >= 2, got {self.m}")
        object.__setattr__(self, "s", as_mpc_s(self.s))
        if self.chi is None:
            object.__setattr__(self, "chi", principal_character(self.q))
        if self.chi.q != self.q:
            raise ValueError("target character modulus must equal q")
        if not self.twists:
            object.__setattr__(self, "twists", tuple(principal_character(1) for _ in range(self.m)))
        if len(self.twists) != self.m:
            raise ValueError(f"need {self.m} twists, got {len(self.twists)}")

    @property
    def family_size(self) -> int:
        return totient(self.q) ** (self.m - 1)


# ---------------------------------------------------------------------------
# twisted-Hurwitz value tables (the sweep workhorse)
# ---------------------------------------------------------------------------


def twisted_hurwitz_table(psi: DirichletCharacter, ell: int, s, cfg: PrecisionConfig) -> list[ComplexApprox | None]:
    """L(psi, b, ell, s) for b = 0..ell (index b; entries 0 unused).

    Residue-splitting route with locally computed Hurwitz values; the
    table is the shared input of every moment over b mod ell.
    """
    s = as_mpc_s(s)
    q = psi.q
    with cfg.work():
        pf = mp.mpf(q) ** (-mp.re(s)) if mp.im(s) == 0 else mp.mpf(q) ** (-s)
        out: list[ComplexApprox | None] = [None] * (ell + 1)
        for b in range(1, ell + 1):
            total = mp.mpc(0)
            err = mp.mpf(0)
            for r in range(b, q * ell + 1, ell):
                w = psi.angle(r)
                if w is None:
                    continue
                h = hurwitz_em(Fraction(r, q * ell), s, cfg=cfg)
                total += e_angle(w) * h.value
                err += h.err
            total *= pf
            out[b] = ComplexApprox(total, abs(pf) * err + _rounding_slop(3 * q, abs(total) + 1))
        return out


def hurwitz_moment(ell: int, twists: list[DirichletCharacter], s=None, cfg: PrecisionConfig | None = None, weight: DirichletCharacter | None = None) -> ComplexApprox:
    """sum_{b=1}^{ell-1} weight(b) prod_i L(psi_i, b, ell, s).

    weight=None means the constant weight 1.  Identical twists are
    evaluated once per b and raised to their multiplicity.
    """
    cfg = cfg or make_config()
    s = as_mpc_s(s if s is not None else mp.mpf(1) / 2)
    with cfg.work():
        groups: dict = {}
        for psi in twists:
            groups[(psi.q, psi.exps)] = groups.get((psi.q, psi.exps), [psi, 0])
            groups[(psi.q, psi.exps)][1] += 1
        tables = {key: twisted_hurwitz_table(psi, ell, s, cfg) for key, (psi, _) in groups.items()}
        terms = []
        for b in range(1, ell):
            if weight is not None:
                w = weight.angle(b)
                if w is None:
                    continue
                factor = ComplexApprox(e_angle(w), mp.mpf(2) ** (3 - mp.mp.prec))
            else:
                factor = ComplexApprox.exact(1)
            for key, (_, mult) in groups.items():
                factor = factor * tables[key][b] ** mult
            terms.append(factor)
        if not terms:
            return ComplexApprox.exact(0)
        return approx_sum(terms)


# ---------------------------------------------------------------------------
# wide moments: brute family sum and its exact short dual
# ---------------------------------------------------------------------------


def _product_l_values(spec: WideMomentSpec, cfg: PrecisionConfig) -> list[dict]:
    """Per position i, the map chi -> L(psi_i chi, s) over all chi mod q."""
    chars = enumerate_characters(spec.q)
    out = []
    for psi in spec.twists:
        table = {}
        for chi in chars:
            prod = pointwise_product(psi, chi)
            table[chi.exps] = dirichlet_l_cached(prod, spec.s, cfg)
        out.append(table)
    return out


def wide_moment_brute(spec: WideMomentSpec, cfg: PrecisionConfig | None = None, cap: int = 10**6) -> ComplexApprox:
    """Normalized family sum by direct tuple enumeration (the oracle side).

    Enumerates chi_1..chi_(m-1) freely, fixes chi_m by the product
    constraint, and multiplies cached L-values of the pointwise product
    characters.  primitive_only fences every factor by its conductor.
    Normalization: phi(q)^(m-1), or phi*(q)^(m-1) for primitive families.
    """
    cfg = cfg or make_config()
    if spec.family_size > cap:
        raise ValueError(f"family size {spec.family_size} exceeds cap {cap}")
    with cfg.work():
        chars = enumerate_characters(spec.q)
        orders = unit_group(spec.q).orders
        tables = _product_l_values(spec, cfg)
        prim = {chi.exps: conductor(chi)[0] == spec.q for chi in chars}
        target = spec.chi.exps
        total = ComplexApprox.exact(0)
        count = 0
        terms = []
        for combo in itertools.product(chars, repeat=spec.m - 1):
            last = tuple(
                (t - sum(ch.exps[k] for ch in combo)) % d for k, (t, d) in enumerate(zip(target, orders))
            )
            if spec.primitive_only:
                if not all(prim[ch.exps] for ch in combo) or not prim[last]:
                    continue
            term = tables[-1][last]
            for i, ch in enumerate(combo):
                term = term * tables[i][ch.exps]
            terms.append(term)
            count += 1
        if terms:
            total = approx_sum(terms)
        from .numtheory import primitive_totient

        norm = primitive_totient(spec.q) if spec.primitive_only else totient(spec.q)
        return total * ComplexApprox.exact(mp.mpf(norm) ** (-(spec.m - 1)))


def wide_moment_fourier(spec: WideMomentSpec, cfg: PrecisionConfig | None = None) -> ComplexApprox:
    """Normalized wide moment via the exact short dual sum.

      q^(-ms) sum_{b in (Z/q)^*} chi(b) prod_i L(psi_i, b, q, s)

    O(q) twisted-Hurwitz evaluations instead of phi(q)^(m-1) tuples.
    Only all-character families (primitive_only goes through
    primitive_restriction instead).
    """
    cfg = cfg or make_config()
    if spec.primitive_only:
        raise ValueError("the short dual covers all-character families; use primitive_restriction")
    with cfg.work():
        raw = _wide_moment_fourier_raw(spec.q, spec.chi, list(spec.twists), spec.s, cfg, spec.m)
        return raw * ComplexApprox.exact(mp.mpf(totient(spec.q)) ** (-(spec.m - 1)))


def _wide_moment_fourier_raw(q, chi, twists, s, cfg, m) -> ComplexApprox:
    """phi(q)^(m-1) q^(-ms) sum_b chi(b) prod_i L(psi_i, b, q, s)  (the raw family sum)."""
    s = as_mpc_s(s)
    groups: dict = {}
    for psi in twists:
        key = (psi.q, psi.exps)
        groups.setdefault(key, [psi, 0])[1] += 1
    tables = {key: twisted_hurwitz_table(psi, q, s, cfg) for key, (psi, _) in groups.items()}
    terms = []
    for b in range(1, q + 1):
        w = chi.angle(b)
        if w is None:
            continue
        t = ComplexApprox(e_angle(w), mp.mpf(2) ** (3 - mp.mp.prec))
        for key, (_, mult) in groups.items():
            t = t * tables[key][b] ** mult
        terms.append(t)
    total = approx_sum(terms) if terms else ComplexApprox.exact(0)
    qs = mp.mpf(q) ** (-m * s) if mp.im(s) != 0 else mp.mpf(q) ** (-m * mp.re(s))
    phi_pow = mp.mpf(totient(q)) ** (m - 1)
    return total * ComplexApprox(qs * phi_pow, abs(qs) * phi_pow * mp.mpf(2) ** (6 - mp.mp.prec))


# ---------------------------------------------------------------------------
# Moebius unfolding of the coprime-restricted short sum
# ---------------------------------------------------------------------------


def moment_t_value(d: int, twists: list[DirichletCharacter], s, cfg: PrecisionConfig) -> ComplexApprox:
    """T(d) = d^(-ms) sum_{b=1}^{d-1} prod_i L(psi_i, b, d, s)."""
    s = as_mpc_s(s)
    m = len(twists)
    with cfg.work():
        if d == 1:
            return ComplexApprox.exact(0)
        raw = hurwitz_moment(d, twists, s, cfg)
        pf = mp.mpf(d) ** (-m * mp.re(s)) if mp.im(s) == 0 else mp.mpf(d) ** (-m * s)
        return raw * ComplexApprox(pf, abs(pf) * mp.mpf(2) ** (6 - mp.mp.prec))


def mobius_decomposition(q: int, twists: list[DirichletCharacter], s=None, cfg: PrecisionConfig | None = None):
    """The exact unfolding of the normalized wide moment over d | q.

    Returns (total, rows) where rows hold (d, mu(q/d), twist-product
    weight at q/d, T(d)).  total must agree with wide_moment_brute /
    wide_moment_fourier for the same spec; that agreement is the
    normalization certificate.
    """
    cfg = cfg or make_config()
    s = as_mpc_s(s if s is not None else mp.mpf(1) / 2)
    m = len(twists)
    with cfg.work():
        rows = []
        total = ComplexApprox.exact(0)
        for d in divisors(q):
            mu = mobius(q // d)
            if mu == 0:
                rows.append({"d": d, "mu": 0, "weight": ComplexApprox.exact(0), "t": None})
                continue
            wfrac = Fraction(0)
            zero = False
            for psi in twists:
                a = psi.angle(q // d)
                if a is None:
                    zero = True
                    break
                wfrac += a
            if zero:
                rows.append({"d": d, "mu": mu, "weight": ComplexApprox.exact(0), "t": None})
                continue
            tval = moment_t_value(d, twists, s, cfg)
            scale = (mp.mpf(d) / q) ** (m * mp.re(s)) if mp.im(s) == 0 else (mp.mpf(d) / q) ** (m * s)
            w = ComplexApprox(mu * e_angle(wfrac) * scale, abs(scale) * mp.mpf(2) ** (6 - mp.mp.prec))
            rows.append({"d": d, "mu": mu, "weight": w, "t": tval})
            total = total + w * tval
        return total, rows


# ---------------------------------------------------------------------------
# inclusion-exclusion for primitive-only families (prime modulus)
# ---------------------------------------------------------------------------


def primitive_restriction(spec: WideMomentSpec, cfg: PrecisionConfig | None = None) -> ComplexApprox:
    """Primitive-only wide moment assembled from all-character moments.

    For prime q, primitivity = non-principality, so the primitive family
    sum is sum_I (-1)^|I| prod_{i in I} L(psi_i chi_0, s) x (all-character
    raw sum over the complementary positions).  Normalized by
    phi*(q)^(m-1).
    """
    cfg = cfg or make_config()
    q = spec.q
    if not is_prime(q):
        raise ValueError("inclusion-exclusion over principal positions needs prime q")
    with cfg.work():
        chi0 = principal_character(q)
        princ_l = [dirichlet_l_cached(pointwise_product(psi, chi0), spec.s, cfg) for psi in spec.twists]
        total = ComplexApprox.exact(0)
        positions = range(spec.m)
        for r in range(spec.m + 1):
            for subset in itertools.combinations(positions, r):
                inside = ComplexApprox.exact((-1) ** r)
                for i in subset:
                    inside = inside * princ_l[i]
                rest = [spec.twists[i] for i in positions if i not in subset]
                w = len(rest)
                if w == 0:
                    raw = ComplexApprox.exact(1 if spec.chi.is_principal else 0)
                elif w == 1:
                    raw = dirichlet_l_cached(pointwise_product(rest[0], spec.chi), spec.s, cfg)
                else:
                    raw = _wide_moment_fourier_raw(q, spec.chi, rest, spec.s, cfg, w)
                total = total + inside * raw
        norm = mp.mpf(q - 2) ** (-(spec.m - 1))
        return total * ComplexApprox.exact(norm)


# ---------------------------------------------------------------------------
# moments of the periodic zeta twisted by Gauss sums
# ---------------------------------------------------------------------------


def _hurwitz_row(q: int, s, cfg: PrecisionConfig, num_shift: int = 0, den_mult: int = 1) -> list[ComplexApprox]:
    """zeta(0, (r*den_mult + num_shift)/(q*den_mult), s) for r = 0..q-1."""
    return [
        hurwitz_em(Fraction(r * den_mult + num_shift, q * den_mult), s, cfg=cfg)
        for r in range(q)
    ]


def _root_table(q: int) -> list[mp.mpc]:
    return [e_angle(Fraction(j, q)) for j in range(q)]


def periodic_zeta_dft(q: int, s, cfg: PrecisionConfig) -> list[ComplexApprox | None]:
    """zeta(a/q, 1, s) for a = 1..q-1 via one shared Hurwitz row.

    zeta(a/q, 1, s) = q^(-s) sum_{r=1}^{q} e((r-1)a/q) zeta(0, r/q, s).
    """
    s = as_mpc_s(s)
    with cfg.work():
        row = [hurwitz_em(Fraction(r, q), s, cfg=cfg) for r in range(1, q + 1)]
        roots = _root_table(q)
        pf = mp.mpf(q) ** (-mp.re(s)) if mp.im(s) == 0 else mp.mpf(q) ** (-s)
        row_err = sum(h.err for h in row)
        out: list[ComplexApprox | None] = [None] * q
        for a in range(1, q):
            acc = mp.mpc(0)
            for r in range(q):
                acc += roots[(r * a) % q] * row[r].value
            acc *= pf
            out[a] = ComplexApprox(acc, abs(pf) * row_err + _rounding_slop(2 * q, abs(acc) + 1))
        return out


def twisted_periodic_dft(q: int, psi: DirichletCharacter, s, cfg: PrecisionConfig) -> list[ComplexApprox | None]:
    """L(a/q, psi, s) for a = 1..q-1, psi mod ell with gcd(ell, q) = 1.

    L(a/q, psi, s) = ell^(-s) sum_b psi(b) e(ba/q) zeta((ell a mod q)/q, b/ell, s)
    and each inner Lerch value is one shared-row DFT:
    zeta(a'/q, b/ell, s) = q^(-s) sum_r e(r a'/q) zeta(0, (r ell + b)/(q ell), s).
    """
    ell = psi.q
    if gcd(ell, q) != 1:
        raise ValueError("twist modulus must be coprime to q")
    s = as_mpc_s(s)
    with cfg.work():
        roots = _root_table(q)
        pf_q = mp.mpf(q) ** (-mp.re(s)) if mp.im(s) == 0 else mp.mpf(q) ** (-s)
        pf_ell = mp.mpf(ell) ** (-mp.re(s)) if mp.im(s) == 0 else mp.mpf(ell) ** (-s)
        rows = {}
        row_errs = {}
        for b in range(1, ell + 1):
            if psi.angle(b) is None:
                continue
            rows[b] = _hurwitz_row(q, s, cfg, num_shift=b, den_mult=ell)
            row_errs[b] = sum(h.err for h in rows[b])
        out: list[ComplexApprox | None] = [None] * q
        for a in range(1, q):
            ap = (ell * a) % q
            acc = mp.mpc(0)
            err = mp.mpf(0)
            for b, row in rows.items():
                inner = mp.mpc(0)
                for r in range(q):
                    inner += roots[(r * ap) % q] * row[r].value
                inner *= pf_q
                acc += e_angle(psi.angle(b) + Fraction(b * a, q)) * inner
                err += abs(pf_q) * row_errs[b]
            acc *= pf_ell
            out[a] = ComplexApprox(acc, abs(pf_ell) * err + _rounding_slop(3 * q, abs(acc) + 1))
        return out


def gauss_twisted_moment(q: int, n: int, psi_list: list[DirichletCharacter], s=None, cfg: PrecisionConfig | None = None) -> ComplexApprox:
    """sum_{a=1}^{q-1} (e(a/q) zeta(a/q,1,s))^n prod_i L(a/q, psi_i, s).

    q prime, n >= 3, twists primitive with modulus > 1 (the all-trivial
    case m = 0 is allowed: the product is empty).
    """
    cfg = cfg or make_config()
    if not is_prime(q):
        raise ValueError("this moment is defined over prime q")
    s = as_mpc_s(s if s is not None else mp.mpf(1) / 2)
    with cfg.work():
        base = periodic_zeta_dft(q, s, cfg)
        twist_tables = [twisted_periodic_dft(q, psi, s, cfg) for psi in psi_list]
        terms = []
        for a in range(1, q):
            t = ComplexApprox(e_angle(Fraction(a, q)), mp.mpf(2) ** (3 - mp.mp.prec)) * base[a]
            t = t**n
            for table in twist_tables:
                t = t * table[a]
            terms.append(t)
        return approx_sum(terms)


def gauss_twisted_char_side(q: int, n: int, psi_list: list[DirichletCharacter], s=None, cfg: PrecisionConfig | None = None, cap: int = 10**6) -> ComplexApprox:
    """The exact character-side dual of gauss_twisted_moment (small prime q).

    phi(q) sum over Wide(q, n+m; 1) of prod_j Fhat_j(chi_j) with
    Fhat_j(chi) = (1/phi(q)) tau(conj(chi)*) nu_s(conj(chi)*, psi_j, q/q*) L(chi* psi_j, s);
    the principal-character positions carry the nu-corrected transforms,
    which is exactly what inclusion-exclusion over primitive tuples
    rearranges.
    """
    cfg = cfg or make_config()
    if not is_prime(q):
        raise ValueError("needs prime q")
    s = as_mpc_s(s if s is not None else mp.mpf(1) / 2)
    width = n + len(psi_list)
    phi = totient(q)
    if phi ** (width - 1) > cap:
        raise ValueError("family too large for brute enumeration")
    with cfg.work():
        chars = enumerate_characters(q)
        orders = unit_group(q).orders
        twists = [principal_character(1)] * n + list(psi_list)
        fhat: list[dict] = []
        for psi in twists:
            table = {}
            for chi in chars:
                qstar, chistar = conductor(chi)
                tau = gauss_sum(chistar.conjugate())
                nu = nu_weight(chistar.conjugate(), psi, s, q // qstar)
                lval = dirichlet_l_cached(pointwise_product(chistar, psi), s, cfg)
                table[chi.exps] = tau * nu * lval * ComplexApprox.exact(mp.mpf(phi) ** -1)
            fhat.append(table)
        terms = []
        for combo in itertools.product(chars, repeat=width - 1):
            last = tuple((-sum(ch.exps[k] for ch in combo)) % d for k, d in enumerate(orders))
            t = fhat[-1][last]
            for i, ch in enumerate(combo):
                t = t * fhat[i][ch.exps]
            terms.append(t)
        return approx_sum(terms) * ComplexApprox.exact(phi)


# ---------------------------------------------------------------------------
# the double average over both directions
# ---------------------------------------------------------------------------


def double_average_moment(q: int, ell: int, m: int, cfg: PrecisionConfig | None = None, s=None, cap: int = 400_000) -> ComplexApprox:
    """sum_{a=1}^{q-1} sum_{b=1}^{ell-1} |zeta(a/q, b/ell, s)|^(2m).

    Shared-table evaluation: one Hurwitz row per shift j feeds the
    periodic values P_j(a) = zeta(a/q, 1, s+j) by DFT, then every
    (a, b) point is an M-term explicit head plus a geometric tail in
    powers of b/ell.  Real s only (the sweep regime).
    """
    cfg = cfg or make_config()
    s = mp.mpf(s if s is not None else mp.mpf(1) / 2)
    if (q - 1) * (ell - 1) > cap:
        raise ValueError(f"{(q - 1) * (ell - 1)} points exceed the cap {cap}")
    if q < 2 or ell < 2:
        raise ValueError("need q, ell >= 2")
    with cfg.work():
        M = 4
        # expansion depth: (c/M)-geometric with c <= 1, plus binomial growth
        J = int(mp.ceil((-mp.log(cfg.eps) + 10) / mp.log(M))) + 4
        roots = _root_table(q)
        # Hurwitz rows for shifts j = 0..J: zeta(0, r/q, s+j), r=1..q
        rows = [[hurwitz_em(Fraction(r, q), s + j, cfg=cfg) for r in range(1, q + 1)] for j in range(J + 1)]
        row_err = [sum(h.err for h in row) for row in rows]
        binom = [mp.mpf(1)]
        for j in range(J):
            binom.append(binom[-1] * (s + j) / (j + 1))
        # head factors (n + b/ell)^(-s) for n < M, 1 <= b < ell
        heads = [None] + [[(n + mp.mpf(b) / ell) ** (-s) for n in range(M)] for b in range(1, ell)]
        # H_j constants (k+1)^(-s-j), k < M-1
        hj_const = [[mp.mpf(k + 1) ** (-s - j) for k in range(M - 1)] for j in range(J + 1)]

        total = mp.mpf(0)
        total_err = mp.mpf(0)
        qpw = [mp.mpf(q) ** (-s - j) for j in range(J + 1)]
        err_budget = mp.mpf(0)
        for j in range(J + 1):
            err_budget += binom[j] * qpw[j] * row_err[j]
        tailb = binom[J] * (abs(s) + J) / (J + 1) * mp.mpf(M) ** (-s - J - 1) * (1 + mp.mpf(M) / (s + J)) * 2

        # z(q-a, b) = conj(z(a, b)) for real s, so scan a <= q/2 and weight by 2
        for a in range(1, q // 2 + 1):
            mult = 1 if 2 * a == q else 2
            # QZ_j(a) = P_j(a) - H_j(a)
            qz = []
            for j in range(J + 1):
                acc = mp.mpc(0)
                row = rows[j]
                for r in range(q):
                    acc += roots[(r * a) % q] * row[r].value
                acc *= qpw[j]
                for k in range(M - 1):
                    acc -= roots[(k * a) % q] * hj_const[j][k]
                qz.append(acc)
            ea = roots[a % q]
            for b in range(1, ell):
                cb = mp.mpf(b) / ell
                head = mp.mpc(0)
                hb = heads[b]
                for nn in range(M):
                    head += roots[(nn * a) % q] * hb[nn]
                acc = mp.mpc(0)
                cp = mp.mpf(1)
                for j in range(J + 1):
                    acc += cp * binom[j] * qz[j] if j % 2 == 0 else -cp * binom[j] * qz[j]
                    cp *= cb
                z = head + ea * acc
                point_err = err_budget + tailb + _rounding_slop(4 * J, abs(z) + 1)
                az = abs(z)
                total += mult * az ** (2 * m)
                total_err += mult * 2 * m * (az + point_err) ** (2 * m - 1) * point_err
        return ComplexApprox(total, total_err)


def double_average_charside_check(q: int, ell: int, a: int, cfg: PrecisionConfig | None = None, s=None):
    """Exact twist-direction dual at fixed a (prime ell):

      sum_{b=1}^{ell-1} |zeta(a/q, b/ell, s)|^2
        = ell^(2 Re s) (1/phi(ell)) sum_{psi mod ell} |L(a/(q ell), psi, s)|^2.

    Returns (lhs, rhs) as ComplexApprox for the test to compare.
    """
    cfg = cfg or make_config()
    if not is_prime(ell):
        raise ValueError("the unit range b = 1..ell-1 needs prime ell")
    s = as_mpc_s(s if s is not None else mp.mpf(1) / 2)
    with cfg.work():
        from .lerch import LerchArgument, lerch_eval

        lhs = approx_sum(
            lerch_eval(LerchArgument(Fraction(a, q), Fraction(b, ell), s), cfg).abs2() for b in range(1, ell)
        )
        rhs_terms = []
        for psi in enumerate_characters(ell):
            val = twisted_periodic_l(TwistedPeriodicArg(Fraction(a, q * ell), psi, s), cfg)
            rhs_terms.append(val.abs2())
        scale = mp.mpf(ell) ** (2 * mp.re(s)) / totient(ell)
        rhs = approx_sum(rhs_terms) * ComplexApprox.exact(scale)
        return lhs, rhs


# ---------------------------------------------------------------------------
# predicted main terms and error envelopes
# ---------------------------------------------------------------------------


def predicted_main(theorem: str, params: dict, cfg: PrecisionConfig | None = None) -> tuple[ComplexApprox, mp.mpf]:
    """Predicted main term and the unit error envelope (constant C = 1).

    theorem ids match the verification registry: 'thm3.5' (power moments
    of the Hurwitz zeta), 'thm3.4' (character-weighted twisted moments),
    'thm3.6' (Gauss-twisted periodic moments), 'thm3.7' (double average),
    'thm1.1'/'thm3.1' (coprime-restricted expansion: the limit of T).
    """
    cfg = cfg or make_config()
    with cfg.work():
        if theorem == "thm3.5":
            ell, m = params["ell"], params["m"]
            main = zeta_value(mp.mpf(m) / 2, cfg) * ComplexApprox.exact(mp.mpf(ell) ** (mp.mpf(m) / 2))
            env = mp.mpf(ell) ** (mp.mpf(m) / 2 - mp.mpf(1) / 2) + ell * mp.log(ell)
            return main, env
        if theorem == "thm3.4":
            ell, twists, weight = params["ell"], params["twists"], params["weight"]
            m = len(twists)
            prod = weight
            for psi in twists:
                prod = pointwise_product(prod, psi)
            lval = dirichlet_l_cached(prod, mp.mpf(m) / 2, cfg)
            main = lval * ComplexApprox.exact(mp.mpf(ell) ** (mp.mpf(m) / 2))
            qstar = max(max((psi.q for psi in twists), default=1), 1)
            env = mp.mpf(qstar) ** (mp.mpf(m) / 4) * ell + mp.mpf(qstar) ** mp.mpf(0.25) * mp.mpf(ell) ** (mp.mpf(m) / 2 - mp.mpf(1) / 2)
            return main, env
        if theorem == "thm3.6":
            q, n, psi_list = params["q"], params["n"], params["twists"]
            main = zeta_value(mp.mpf(n) / 2, cfg) * ComplexApprox.exact(((1 + 1j) / 2) ** n * mp.mpf(q) ** (mp.mpf(n) / 2))
            for psi in psi_list:
                main = main * dirichlet_l_cached(psi, mp.mpf(1) / 2, cfg)
            env = mp.mpf(q) ** (mp.mpf(n) / 2 - mp.mpf(1) / 2)
            return main, env
        if theorem == "thm3.7":
            q, ell, m = params["q"], params["ell"], params["m"]
            zm = zeta_value(mp.mpf(m), cfg)
            main = zm * ComplexApprox.exact(mp.mpf(q) ** m * (ell - 1) / mp.mpf(2) ** (m - 1)) + zm * ComplexApprox.exact(
                (q - 1) * mp.mpf(ell) ** m
            )
            env = mp.mpf(q) ** (m - mp.mpf(1) / 2) * ell + q * mp.mpf(ell) ** (m - mp.mpf(1) / 2)
            return main, env
        if theorem in ("thm1.1", "thm3.1"):
            twists = params["twists"]
            m = len(twists)
            prod = twists[0]
            for psi in twists[1:]:
                prod = pointwise_product(prod, psi)
            main = dirichlet_l_cached(prod, mp.mpf(m) / 2, cfg)
            env = mp.mpf(params["d"]) ** (-mp.mpf(1) / 2) if "d" in params else mp.mpf(1)
            return main, env
        raise KeyError(f"unknown theorem id {theorem!r}")


# ---------------------------------------------------------------------------
# expansion-coefficient extraction
# ---------------------------------------------------------------------------


@dataclass
class ExpansionReport:
    """Fitted expansion of T(d) about its limit within one residue class.

    T(d) = limit + c_log d^(1-m/2) log d + sum_{k=1}^{K-1} c_k d^(-k/2) + O(d^(-K/2))
    """

    residue_class: int
    class_modulus: int
    m: int
    K: int
    limit: complex
    log_coefficient: complex
    tail_coefficients: tuple[complex, ...]
    condition_number: float
    fit_residual: float
    n_points: int


def fit_expansion_coefficients(points: list[tuple[int, complex]], limit: complex, m: int, K: int, residue_class: int = 0, class_modulus: int = 1) -> ExpansionReport:
    """Least squares for the log and inverse-power coefficients of T(d).

    Needs at least 2K moduli; the basis is {d^(1-m/2) log d} plus
    {d^(-k/2), k = 1..K-1}, and the condition number of the design
    matrix is reported so ill-posed fits are visible.
    """
    import numpy as np
    import math

    if len(points) < 2 * K:
        raise ValueError(f"need at least {2 * K} moduli for K={K}, got {len(points)}")
    X = np.array([[d ** (1 - m / 2) * math.log(d)] + [d ** (-k / 2) for k in range(1, K)] for d, _ in points])
    y = np.array([complex(t) - complex(limit) for _, t in points])
    coef, _, _, sv = np.linalg.lstsq(X, y, rcond=None)
    cond = float(sv[0] / sv[-1]) if sv[-1] > 0 else float("inf")
    resid = float(np.linalg.norm(X @ coef - y))
    return ExpansionReport(
        residue_class=residue_class,
        class_modulus=class_modulus,
        m=m,
        K=K,
        limit=complex(limit),
        log_coefficient=complex(coef[0]),
        tail_coefficients=tuple(complex(c) for c in coef[1:]),
        condition_number=cond,
        fit_residual=resid,
        n_points=len(points),
    )
