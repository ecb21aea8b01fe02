from fractions import Fraction

import mpmath as mp
import pytest

from lerchzeta.characters import (
    enumerate_characters,
    induce,
    principal_character,
    quadratic_character,
)
from lerchzeta.lerch import LerchPole, hurwitz_em
from lerchzeta.lvalues import (
    TwistedHurwitzArg,
    TwistedPeriodicArg,
    birch_stevens_lhs,
    birch_stevens_residual,
    birch_stevens_rhs,
    dirichlet_l,
    twisted_hurwitz_l,
    twisted_hurwitz_series,
    twisted_periodic_l,
)
from lerchzeta.precision import make_config

from oracles import dirichlet_series_blocks, leibniz_pi_over_4, zeta_from_eta

CFG = make_config(40)
mp.mp.dps = 60


def test_dirichlet_l_leibniz():
    chi4 = quadratic_character(4)
    v = dirichlet_l(chi4, 1, CFG)
    ref, err = leibniz_pi_over_4(80)
    assert abs(v.value - ref) <= v.err + err


def test_dirichlet_l_trivial_is_zeta():
    v = dirichlet_l(principal_character(1), 2, CFG)
    assert abs(v.value - mp.pi**2 / 6) <= v.err


def test_dirichlet_l_quadratic_mod3():
    chi3 = quadratic_character(3)
    v = dirichlet_l(chi3, 2, CFG)
    ref, tail = dirichlet_series_blocks([1, -1, 0], 2, blocks=3000)
    assert abs(v.value - ref) <= v.err + tail
    assert abs(v.value - mp.mpf("0.7813024129")) < 1e-9


def test_dirichlet_l_pole():
    with pytest.raises(LerchPole):
        dirichlet_l(principal_character(6), 1, CFG)
    # non-principal at s = 1 is finite
    v = dirichlet_l(quadratic_character(3), 1, CFG)
    assert abs(v.value - mp.pi / (3 * mp.sqrt(3))) <= v.err + mp.mpf("1e-50")


def test_twisted_hurwitz_trivial_character():
    # q = 1: L(1, b/ell, s) = zeta(0, b/ell, s)
    arg = TwistedHurwitzArg(principal_character(1), 2, 5, 2)
    v = twisted_hurwitz_l(arg, CFG)
    h = hurwitz_em(Fraction(2, 5), 2, cfg=CFG)
    assert abs(v.value - h.value) <= v.err + h.err


def test_twisted_hurwitz_against_series():
    # chi quadratic mod 5, b=1, ell=3, s=2: 9 sum_{n=1 mod 3} chi(n) n^-2
    arg = TwistedHurwitzArg(quadratic_character(5), 1, 3, 2)
    v = twisted_hurwitz_l(arg, CFG)
    ref = twisted_hurwitz_series(arg, make_config(25))
    assert abs(v.value - ref.value) <= v.err + ref.err


def test_twisted_hurwitz_dual_routes():
    arg = TwistedHurwitzArg(quadratic_character(3), 2, 4, Fraction(1, 2))
    v1 = twisted_hurwitz_l(arg, CFG, route="residues")
    v2 = twisted_hurwitz_l(arg, CFG, route="charsum")
    assert abs(v1.value - v2.value) <= v1.err + v2.err
    with pytest.raises(ValueError):
        twisted_hurwitz_l(TwistedHurwitzArg(principal_character(6), 1, 3, 2), CFG, route="charsum")


def test_twisted_hurwitz_series_consistency_sweep():
    s = mp.mpf(2)
    for q in (1, 3, 5, 7):
        for chi in enumerate_characters(q):
            for ell in (2, 5, 7):
                for b in (1, ell):
                    arg = TwistedHurwitzArg(chi, b, ell, s)
                    v = twisted_hurwitz_l(arg, CFG)
                    ref = twisted_hurwitz_series(arg, make_config(22), n_terms=4000)
                    assert abs(v.value - ref.value) <= v.err + ref.err


def test_twisted_periodic_at_zero_twist():
    psi = quadratic_character(3)
    v = twisted_periodic_l(TwistedPeriodicArg(Fraction(0), psi, 2), CFG)
    l2 = dirichlet_l(psi, 2, CFG)
    assert abs(v.value - l2.value) <= v.err + l2.err


def test_twisted_periodic_trivial_modulus():
    # L(1/2, 1, s) = sum (-1)^n n^-s = -eta(s)
    v = twisted_periodic_l(TwistedPeriodicArg(Fraction(1, 2), principal_character(1), 2), CFG)
    assert abs(v.value + mp.pi**2 / 12) <= v.err


def test_twisted_periodic_periodicity():
    psi = quadratic_character(5)
    a1 = twisted_periodic_l(TwistedPeriodicArg(Fraction(1, 3), psi, Fraction(1, 2)), CFG)
    a2 = twisted_periodic_l(TwistedPeriodicArg(Fraction(4, 3), psi, Fraction(1, 2)), CFG)
    assert a1.value == a2.value  # exact: alpha is canonicalized


def test_twisted_periodic_continuity_scan():
    # |L(alpha, psi, 1/2) - L(psi, 1/2)| <= C alpha^0.45 with fitted C <= 10
    psi = quadratic_character(3)
    base = dirichlet_l(psi, Fraction(1, 2), CFG)
    worst = mp.mpf(0)
    for k in (1, 2, 3, 4):
        alpha = Fraction(1, 10**k)
        v = twisted_periodic_l(TwistedPeriodicArg(alpha, psi, Fraction(1, 2)), CFG)
        gap = abs(v.value - base.value)
        af = mp.mpf(1) / 10**k
        worst = max(worst, gap / af ** mp.mpf("0.45"))
    assert worst <= 10


def test_twisted_periodic_pole_detection():
    # alpha = 1/ell puts a genuine pole at s = 1 (nonzero mean coefficient)
    psi = quadratic_character(3)
    with pytest.raises(LerchPole):
        twisted_periodic_l(TwistedPeriodicArg(Fraction(1, 3), psi, 1), CFG)
    # alpha = 0 with non-principal psi is finite at s = 1
    v = twisted_periodic_l(TwistedPeriodicArg(Fraction(0), psi, 1), CFG)
    ref = dirichlet_l(psi, 1, CFG)
    assert abs(v.value - ref.value) <= v.err + ref.err


def test_birch_stevens_examples():
    s = mp.mpf(2)
    # q = 5 primitive, ell = 1: LHS = tau(chi) L(conj chi, 2)
    chi = enumerate_characters(5, primitive_only=True)[0]
    triv = principal_character(1)
    lhs = birch_stevens_lhs(chi, triv, s, CFG)
    rhs = birch_stevens_rhs(chi, triv, s, CFG)
    from lerchzeta.characters import gauss_sum

    tau = gauss_sum(chi)
    lref = dirichlet_l(chi.conjugate(), s, CFG)
    assert abs(rhs.value - tau.value * lref.value) <= rhs.err + tau.err * 2 + lref.err * 3
    assert abs(lhs.value - rhs.value) <= lhs.err + rhs.err
    # q = 4 quadratic, ell = 3 quadratic: RHS = 9 tau(chi) L(conj(chi) psi, 2)
    chi4, psi3 = quadratic_character(4), quadratic_character(3)
    lhs = birch_stevens_lhs(chi4, psi3, s, CFG)
    from lerchzeta.characters import pointwise_product

    tau4 = gauss_sum(chi4)
    lprod = dirichlet_l(pointwise_product(chi4.conjugate(), psi3), s, CFG)
    assert abs(lhs.value - 9 * tau4.value * lprod.value) < mp.mpf("1e-30")


def test_birch_stevens_residual_cases():
    r = birch_stevens_residual(enumerate_characters(5, primitive_only=True)[0], principal_character(1), 2, CFG)
    assert r.residual <= r.bound and r.residual < mp.mpf("1e-30")
    # imprimitive principal mod 6 against quadratic mod 5, s = 3/2: exercises nu at t = 6
    r = birch_stevens_residual(principal_character(6), quadratic_character(5), Fraction(3, 2), CFG)
    assert r.residual <= r.bound
    # induced mod 9 from mod 3, s = 1/2: continuation regime
    chi9 = induce(quadratic_character(3), 9)
    r = birch_stevens_residual(chi9, principal_character(1), Fraction(1, 2), CFG)
    assert r.residual <= r.bound


def test_central_value_conjugation():
    half = Fraction(1, 2)
    for q in (5, 7, 12):
        for chi in enumerate_characters(q):
            a = dirichlet_l(chi.conjugate(), half, CFG)
            b = dirichlet_l(chi, half, CFG)
            assert abs(a.value - mp.conj(b.value)) <= a.err + b.err
