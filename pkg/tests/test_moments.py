from fractions import Fraction

import mpmath as mp
import pytest

from lerchzeta.characters import (
    enumerate_characters,
    principal_character,
    quadratic_character,
)
from lerchzeta.lerch import hurwitz_em, zeta_value
from lerchzeta.moments import (
    WideMomentSpec,
    double_average_charside_check,
    double_average_moment,
    fit_expansion_coefficients,
    gauss_twisted_char_side,
    gauss_twisted_moment,
    hurwitz_moment,
    mobius_decomposition,
    moment_t_value,
    predicted_main,
    primitive_restriction,
    wide_moment_brute,
    wide_moment_fourier,
)
from lerchzeta.numtheory import totient
from lerchzeta.precision import make_config

CFG = make_config(40)
SWEEP = make_config(20, target_eps=1e-12)
mp.mp.dps = 50
PSI3 = quadratic_character(3)


def test_spec_validation():
    with pytest.raises(ValueError):
        WideMomentSpec(5, 1)
    with pytest.raises(ValueError):
        WideMomentSpec(5, 2, chi=principal_character(3))
    with pytest.raises(ValueError):
        WideMomentSpec(5, 3, twists=(PSI3,))
    assert WideMomentSpec(5, 2).family_size == 4
    assert WideMomentSpec(7, 3).family_size == totient(7) ** 2


def test_fourier_identity_small():
    for q, m in ((3, 2), (5, 2), (4, 3)):
        for chi in enumerate_characters(q):
            spec = WideMomentSpec(q, m, chi=chi)
            b = wide_moment_brute(spec, CFG)
            f = wide_moment_fourier(spec, CFG)
            assert abs(b.value - f.value) <= b.err + f.err


def test_fourier_identity_with_twists():
    spec = WideMomentSpec(5, 2, twists=(PSI3, PSI3))
    b = wide_moment_brute(spec, CFG)
    f = wide_moment_fourier(spec, CFG)
    assert abs(b.value - f.value) <= b.err + f.err


def test_singleton_groups():
    for q in (1, 2):
        spec = WideMomentSpec(q, 3, twists=(PSI3,) * 3)
        b = wide_moment_brute(spec, CFG)
        f = wide_moment_fourier(spec, CFG)
        assert abs(b.value - f.value) <= b.err + f.err
        assert spec.family_size == 1


def test_wide_moment_term_structure_q3():
    # Wide(3,2;1) = {(chi0,chi0), (chi1,chi1)}: sum = (L(chi0)^2 + L(chi1)^2)/phi(3)
    from lerchzeta.lvalues import dirichlet_l_cached

    spec = WideMomentSpec(3, 2)
    b = wide_moment_brute(spec, CFG)
    chars = enumerate_characters(3)
    expected = sum(dirichlet_l_cached(c, mp.mpf(1) / 2, CFG).value ** 2 for c in chars) / 2
    assert abs(b.value - expected) < mp.mpf("1e-35")


def test_brute_cap():
    with pytest.raises(ValueError):
        wide_moment_brute(WideMomentSpec(101, 4), CFG, cap=10**4)


def test_hurwitz_moment_small():
    hm = hurwitz_moment(3, [principal_character(1)] * 3, Fraction(1, 2), CFG)
    expected = sum(hurwitz_em(Fraction(b, 3), Fraction(1, 2), cfg=CFG).value ** 3 for b in (1, 2))
    assert abs(hm.value - expected) <= hm.err + mp.mpf("1e-40")
    # ell = 2: single b = 1 term
    hm2 = hurwitz_moment(2, [principal_character(1)] * 4, Fraction(1, 2), CFG)
    single = hurwitz_em(Fraction(1, 2), Fraction(1, 2), cfg=CFG).value ** 4
    assert abs(hm2.value - single) <= hm2.err + mp.mpf("1e-40")


def test_hurwitz_moment_scaling_101():
    hm = hurwitz_moment(101, [principal_character(1)] * 3, Fraction(1, 2), SWEEP)
    z = zeta_value(Fraction(3, 2), SWEEP)
    ratio = hm.value / mp.mpf(101) ** mp.mpf(1.5)
    env = (mp.mpf(101) ** 1 + 101 * mp.log(101)) / mp.mpf(101) ** mp.mpf(1.5)
    assert abs(ratio - z.value) <= 20 * env


def test_mobius_decomposition_exact():
    for q in (4, 6, 9, 12):
        spec = WideMomentSpec(q, 3, twists=(PSI3,) * 3)
        b = wide_moment_brute(spec, CFG)
        total, rows = mobius_decomposition(q, [PSI3] * 3, Fraction(1, 2), CFG)
        assert abs(b.value - total.value) <= b.err + total.err
        assert rows[0]["d"] == 1 and rows[0]["t"] is None or rows[0]["t"] is not None


def test_mobius_prime_collapses_to_single_t():
    # q prime: only d = q contributes (d = 1 has an empty T)
    q = 7
    total, rows = mobius_decomposition(q, [PSI3] * 3, Fraction(1, 2), CFG)
    tq = moment_t_value(q, [PSI3] * 3, Fraction(1, 2), CFG)
    assert abs(total.value - tq.value) <= total.err + tq.err
    d_with_t = [r["d"] for r in rows if r["t"] is not None and abs(r["weight"].value) > 0]
    assert d_with_t == [7] or d_with_t == [1, 7]


def test_primitive_restriction_matches_brute():
    spec = WideMomentSpec(5, 3, primitive_only=True)
    b = wide_moment_brute(spec, CFG)
    p = primitive_restriction(WideMomentSpec(5, 3), CFG)
    assert abs(b.value - p.value) <= b.err + p.err
    chi7 = enumerate_characters(7)[3]
    spec = WideMomentSpec(7, 3, chi=chi7, twists=(PSI3,) * 3, primitive_only=True)
    b = wide_moment_brute(spec, CFG)
    p = primitive_restriction(WideMomentSpec(7, 3, chi=chi7, twists=(PSI3,) * 3), CFG)
    assert abs(b.value - p.value) <= b.err + p.err
    with pytest.raises(ValueError):
        primitive_restriction(WideMomentSpec(6, 3), CFG)


def test_gauss_twisted_dual_routes():
    for twists in ([], [PSI3]):
        a = gauss_twisted_moment(5, 3, twists, cfg=CFG)
        c = gauss_twisted_char_side(5, 3, twists, cfg=CFG)
        assert abs(a.value - c.value) <= a.err + c.err


def test_gauss_twisted_even_width_is_real():
    g = gauss_twisted_moment(7, 4, [], cfg=CFG)
    assert abs(g.value.imag) <= g.err


def test_gauss_twisted_validation():
    with pytest.raises(ValueError):
        gauss_twisted_moment(6, 3, [], cfg=CFG)


def test_double_average_single_term():
    da = double_average_moment(2, 2, 2, SWEEP)
    z = hurwitz_em(Fraction(1, 2), Fraction(1, 2), cfg=CFG)  # zeta(1/2,1/2,1/2) real? no: alpha=1/2
    from lerchzeta.lerch import lerch_eval, LerchArgument

    single = lerch_eval(LerchArgument(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)), CFG)
    expected = abs(single.value) ** 4
    assert abs(da.value - expected) <= da.err + 4 * abs(single.value) ** 3 * single.err


def test_double_average_charside():
    for a in (1, 2):
        lhs, rhs = double_average_charside_check(3, 3, a, CFG)
        assert abs(lhs.value - rhs.value) <= lhs.err + rhs.err


def test_double_average_caps():
    with pytest.raises(ValueError):
        double_average_moment(3001, 3001, 2, SWEEP)
    with pytest.raises(ValueError):
        double_average_moment(1, 5, 2, SWEEP)


def test_predicted_main_values():
    main, env = predicted_main("thm3.5", {"ell": 1000, "m": 4}, CFG)
    assert abs(main.value - mp.pi**2 / 6 * mp.mpf(10) ** 6) < mp.mpf("1e-25")
    main, env = predicted_main("thm3.7", {"q": 7, "ell": 7, "m": 2}, CFG)
    z2 = mp.pi**2 / 6
    assert abs(main.value - (z2 / 2 * 49 * 6 + z2 * 6 * 49)) < mp.mpf("1e-25")
    # empty twist product reduces to ((1+i)/2)^n zeta(n/2) q^(n/2)
    main, env = predicted_main("thm3.6", {"q": 101, "n": 3, "twists": []}, CFG)
    z32 = zeta_value(Fraction(3, 2), CFG).value
    expected = ((1 + 1j) / 2) ** 3 * z32 * mp.mpf(101) ** mp.mpf(1.5)
    assert abs(main.value - expected) < mp.mpf("1e-25")
    with pytest.raises(KeyError):
        predicted_main("thm9.9", {}, CFG)


def test_moment_t_value_converges():
    t = moment_t_value(103, [PSI3] * 3, Fraction(1, 2), SWEEP)
    from lerchzeta.lvalues import dirichlet_l_cached

    lim = dirichlet_l_cached(PSI3, Fraction(3, 2), SWEEP)
    assert abs(t.value - lim.value) * mp.sqrt(103) <= 20


def test_fit_expansion_reproducible_on_subsets():
    import random

    rng = random.Random(5)
    primes = [7, 13, 31, 61, 103, 151, 211, 307, 433, 601]
    pts = []
    for q in primes:
        t = moment_t_value(q, [PSI3] * 3, Fraction(1, 2), SWEEP)
        pts.append((q, complex(t.value)))
    from lerchzeta.lvalues import dirichlet_l_cached

    lim = complex(dirichlet_l_cached(PSI3, Fraction(3, 2), SWEEP).value)
    full = fit_expansion_coefficients(pts, lim, 3, 2)
    sub = fit_expansion_coefficients(pts[1:], lim, 3, 2)
    assert abs(full.log_coefficient - sub.log_coefficient) < 0.2
    assert full.condition_number < 1e6
    with pytest.raises(ValueError):
        fit_expansion_coefficients(pts[:3], lim, 3, 2)
