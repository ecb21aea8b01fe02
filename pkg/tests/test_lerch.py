import random
from fractions import Fraction

import mpmath as mp
import pytest

from lerchzeta.lerch import (
    LerchArgument,
    LerchPole,
    RouteUnavailable,
    applicable_routes,
    central_coefficient_profile,
    functional_equation_check,
    hurwitz_em,
    lerch_eval,
    lerch_hurwitz_comb,
    lerch_integral,
    lerch_series,
    lerch_taylor,
    zeta_value,
)
from lerchzeta.precision import make_config

from oracles import eta, leibniz_pi_over_4, zeta_from_eta

CFG = make_config(40)
mp.mp.dps = 60


def test_oracle_selfchecks():
    # the accelerated alternating summation must hit closed forms first
    v, e = eta(2, 60)
    assert abs(v - mp.pi**2 / 12) < e < 1e-30
    v, e = leibniz_pi_over_4(60)
    assert abs(v - mp.pi / 4) < e


def test_argument_canonicalization():
    arg = LerchArgument(Fraction(7, 3), Fraction(1, 2), 2)
    assert arg.alpha == Fraction(1, 3)
    with pytest.raises(ValueError):
        LerchArgument(0, 0, 2)
    with pytest.raises(ValueError):
        LerchArgument(0, Fraction(3, 2), 2)
    with pytest.raises(TypeError):
        LerchArgument(object(), 1, 2)


# -- defining series -------------------------------------------------------


def test_series_basel():
    cfg = make_config(20, target_eps=2e-5)
    v = lerch_series(LerchArgument(0, 1, 2), cfg)
    assert abs(v.value - mp.pi**2 / 6) <= v.err <= mp.mpf("2e-5")


def test_series_alternating():
    cfg = make_config(20, target_eps=1e-9)
    v = lerch_series(LerchArgument(Fraction(1, 2), 1, 2), cfg)
    assert abs(v.value - mp.pi**2 / 12) <= v.err


def test_series_bisection_identity():
    # zeta(0, 1/2, 3) = (2^3 - 1) zeta(3), checked against direct summation
    cfg = make_config(20, target_eps=1e-8)
    v = lerch_series(LerchArgument(0, Fraction(1, 2), 3), cfg)
    z3, e3 = zeta_from_eta(3, 80)
    assert abs(v.value - 7 * z3) <= v.err + 7 * e3
    assert abs(v.value - mp.mpf("8.4144")) < 1e-3


def test_series_refusals():
    with pytest.raises(RouteUnavailable):
        lerch_series(LerchArgument(0, 1, Fraction(1, 2)), CFG)  # divergent regime
    with pytest.raises(RouteUnavailable):
        lerch_series(LerchArgument(0, 1, 2), CFG)  # tail cannot reach 1e-35


# -- Euler-Maclaurin -------------------------------------------------------


def test_hurwitz_em_basel_consistency():
    em = hurwitz_em(1, 2, cfg=CFG)
    series = lerch_series(LerchArgument(0, 1, 2), make_config(20, target_eps=2e-5))
    assert abs(em.value - series.value) <= em.err + series.err
    assert abs(em.value - mp.pi**2 / 6) <= em.err


def test_hurwitz_em_critical_point():
    v = hurwitz_em(1, Fraction(1, 2), cfg=CFG)
    z, e = zeta_from_eta(Fraction(1, 2), 90)
    assert abs(v.value - z) <= v.err + e
    assert abs(v.value - mp.mpf("-1.4603545088")) < 1e-9


def test_hurwitz_em_half_shift():
    # zeta(0, 1/2, s) = (2^s - 1) zeta(s) at s = 1/2
    v = hurwitz_em(Fraction(1, 2), Fraction(1, 2), cfg=CFG)
    z, e = zeta_from_eta(Fraction(1, 2), 90)
    target = (mp.sqrt(2) - 1) * z
    assert abs(v.value - target) <= v.err + 2 * e
    assert abs(v.value - mp.mpf("-0.6048986434")) < 1e-9


def test_hurwitz_em_explicit_l_k():
    v = hurwitz_em(Fraction(1, 3), 2, L=40, K=20, cfg=CFG)
    assert abs(v.value - mp.zeta(2, mp.mpf(1) / 3)) <= v.err


def test_hurwitz_em_pole_and_regularized():
    with pytest.raises(LerchPole):
        hurwitz_em(1, 1, cfg=CFG)
    reg = hurwitz_em(Fraction(1, 4), 1, cfg=CFG, regularized=True)
    assert abs(reg.value + mp.digamma(mp.mpf(1) / 4)) <= reg.err + mp.mpf("1e-50")
    with pytest.raises(ValueError):
        hurwitz_em(1, 2, cfg=CFG, regularized=True)


def test_bisection_identity_randomized():
    rng = random.Random(3)
    for _ in range(6):
        c = Fraction(rng.randrange(1, 20), 20)
        s = mp.mpc(rng.uniform(0.2, 3), rng.uniform(-1, 1))
        lhs = hurwitz_em(c / 2, s, cfg=CFG).value + hurwitz_em((c + 1) / 2, s, cfg=CFG).value
        rhs = 2**s * hurwitz_em(c, s, cfg=CFG).value
        assert abs(lhs - rhs) < mp.mpf("1e-40")


# -- Taylor route ----------------------------------------------------------


def test_taylor_small_c_recovers_zeta_half():
    # zeta(0, c, 1/2) - c^(-1/2) -> zeta(1/2) as c -> 0
    c = Fraction(1, 10**6)
    v = lerch_taylor(LerchArgument(0, c, Fraction(1, 2)), CFG)
    em = hurwitz_em(c, Fraction(1, 2), cfg=CFG)
    assert abs(v.value - em.value) <= v.err + em.err
    z, e = zeta_from_eta(Fraction(1, 2), 90)
    cf = mp.mpf(1) / 10**6
    assert abs((v.value - cf**-0.5) - z) < 2e-3  # O(c^(1/2)) drift expected


def test_taylor_matches_series_overlap():
    cfg9 = make_config(20, target_eps=1e-9)
    arg = LerchArgument(Fraction(1, 2), Fraction(1, 3), 2)
    t = lerch_taylor(arg, CFG)
    s = lerch_series(arg, cfg9)
    assert abs(t.value - s.value) <= t.err + s.err


def test_taylor_matches_integral():
    arg = LerchArgument(Fraction(1, 4), Fraction(1, 2), Fraction(1, 2))
    t = lerch_taylor(arg, CFG)
    q = lerch_integral(arg, CFG)
    assert abs(t.value - q.value) <= t.err + q.err


def test_taylor_pole_flag():
    with pytest.raises(LerchPole):
        lerch_taylor(LerchArgument(0, Fraction(1, 2), 1), CFG)


# -- quadrature route ------------------------------------------------------


def test_integral_eta_half():
    v = lerch_integral(LerchArgument(Fraction(1, 2), 1, Fraction(1, 2)), CFG)
    z, e = zeta_from_eta(Fraction(1, 2), 90)
    target = (1 - mp.sqrt(2)) * z  # eta(1/2)
    assert abs(v.value - target) <= v.err + 2 * e
    assert abs(v.value - mp.mpf("0.6048986434")) < 1e-9


def test_integral_eta_two():
    v = lerch_integral(LerchArgument(Fraction(1, 2), 1, 2), CFG)
    assert abs(v.value - mp.pi**2 / 12) <= v.err


def test_integral_vs_taylor_generic():
    arg = LerchArgument(Fraction(1, 3), Fraction(2, 3), Fraction(3, 2))
    q = lerch_integral(arg, CFG)
    t = lerch_taylor(arg, CFG)
    assert abs(q.value - t.value) <= q.err + t.err


def test_integral_refuses_integral_alpha():
    with pytest.raises(RouteUnavailable):
        lerch_integral(LerchArgument(0, 1, 2), CFG)


# -- rational comb ---------------------------------------------------------


def test_comb_matches_reference():
    from oracles import lerch_reference

    for (a, c, s) in [
        (Fraction(1, 3), Fraction(2, 3), mp.mpf(2)),
        (Fraction(2, 7), Fraction(1, 5), mp.mpc(0.7, 0.4)),
        (Fraction(1, 5), Fraction(4, 5), mp.mpc(-0.5, 0.3)),
    ]:
        v = lerch_hurwitz_comb(LerchArgument(a, c, s), CFG)
        ref = lerch_reference(a, c, s, dps=60)
        assert abs(v.value - ref) <= v.err + mp.mpf("1e-55")


def test_comb_regularized_at_one():
    from oracles import lerch_reference

    v = lerch_eval(LerchArgument(Fraction(1, 3), Fraction(1, 2), 1), CFG)
    ref = lerch_reference(Fraction(1, 3), Fraction(1, 2), 1, dps=60)
    assert abs(v.value - ref) <= v.err + mp.mpf("1e-55")


# -- shift identity --------------------------------------------------------


def test_shift_identity_reindexed_series():
    # zeta(alpha, c, s) = c^(-s) + e(alpha) sum_{n>=0} e(n alpha) (n + 1 + c)^(-s)
    alpha, c, s = Fraction(1, 3), Fraction(2, 5), mp.mpf(6)
    lhs = lerch_eval(LerchArgument(alpha, c, s), CFG)
    w = mp.expjpi(mp.mpf(2) / 3)
    cf = mp.mpf(2) / 5
    re_indexed = mp.fsum((w**n * (n + 1 + cf) ** -s for n in range(200)), absolute=False)
    rhs = cf**-s + w * re_indexed
    assert abs(lhs.value - rhs) < 1e-13  # tail of the 200-term series dominates


# -- functional equation ---------------------------------------------------


@pytest.mark.parametrize(
    "alpha,c,s",
    [
        (Fraction(1, 2), Fraction(1, 2), mp.mpf(3) / 2),
        (Fraction(1, 3), Fraction(1, 4), mp.mpf(2)),
        (Fraction(1, 5), Fraction(4, 5), mp.mpf(5) / 4),
    ],
)
def test_functional_equation_spec_points(alpha, c, s):
    chk = functional_equation_check(LerchArgument(alpha, c, s), CFG)
    assert chk.residual <= chk.bound
    assert chk.residual < mp.mpf("1e-30")


def test_functional_equation_domain():
    with pytest.raises(ValueError):
        functional_equation_check(LerchArgument(0, Fraction(1, 2), 2), CFG)


# -- dispatcher ------------------------------------------------------------


def test_eval_dispatch_and_pole():
    v = lerch_eval(LerchArgument(0, 1, 2), CFG)
    assert abs(v.value - mp.pi**2 / 6) <= v.err
    v = lerch_eval(LerchArgument(Fraction(1, 2), 1, Fraction(1, 2)), CFG)
    assert abs(v.value - mp.mpf("0.6048986434216303702")) < 1e-18
    with pytest.raises(LerchPole):
        lerch_eval(LerchArgument(0, 1, 1), CFG)
    with pytest.raises(LerchPole):
        lerch_eval(LerchArgument(2, 1, 1), CFG)  # alpha = 2 canonicalizes to 0


def test_eval_cross_check_mode():
    v = lerch_eval(LerchArgument(Fraction(2, 5), Fraction(1, 3), Fraction(1, 2)), CFG, cross_check=True)
    from oracles import lerch_reference

    ref = lerch_reference(Fraction(2, 5), Fraction(1, 3), Fraction(1, 2), dps=60)
    assert abs(v.value - ref) <= v.err + mp.mpf("1e-55")


def test_applicable_routes_sets():
    assert applicable_routes(LerchArgument(0, 1, 2), CFG)[0] == "em"
    names = applicable_routes(LerchArgument(Fraction(1, 3), Fraction(1, 2), 2), CFG)
    assert "comb" in names and "taylor" in names and "integral" in names
    # negative real part: only the comb continuation applies
    names = applicable_routes(LerchArgument(Fraction(1, 3), Fraction(1, 2), -2), CFG)
    assert names == ["comb"]


# -- central coefficients --------------------------------------------------


def test_coefficient_profile_bound_and_continuity():
    coeffs = central_coefficient_profile(Fraction(1, 3), 200, CFG)
    worst = max(mp.sqrt(n) * abs(coeffs[n].value) for n in range(1, 201))
    assert worst <= 10
    c_lo = central_coefficient_profile(Fraction(49, 100), 0, CFG)[0]
    c_hi = central_coefficient_profile(Fraction(51, 100), 0, CFG)[0]
    assert abs(c_lo.value - c_hi.value) < mp.mpf("0.1")
    with pytest.raises(ValueError):
        central_coefficient_profile(0, 5, CFG)


def test_zeta_value_helper():
    z = zeta_value(3, CFG)
    z3, e3 = zeta_from_eta(3, 90)
    assert abs(z.value - z3) <= z.err + e3
