import random
from fractions import Fraction
from math import gcd

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from lerchzeta.characters import (
    DirichletCharacter,
    conductor,
    e_angle,
    enumerate_characters,
    gauss_sum,
    induce,
    nu_weight,
    pointwise_product,
    principal_character,
    quadratic_character,
    unit_group,
)
from lerchzeta.numtheory import divisors, mobius, primitive_totient, totient

from oracles import brute_conductor


def test_unit_group_structure():
    assert unit_group(1).phi == 1 and unit_group(1).generators == ()
    assert sorted(unit_group(8).orders) == [2, 2]  # C2 x C2
    assert unit_group(7).orders == (6,)
    # oracle: 3 is a primitive root mod 7
    seen = {pow(3, k, 7) for k in range(6)}
    assert seen == {1, 2, 3, 4, 5, 6}


@given(st.integers(min_value=1, max_value=200))
@settings(max_examples=60, deadline=None)
def test_dlog_roundtrip(q):
    G = unit_group(q)
    assert len(G.dlog) == totient(q) or q == 1
    for n, vec in list(G.dlog.items())[:50]:
        assert G.from_exponents(vec) == n


def test_enumeration_counts():
    assert len(enumerate_characters(5)) == 4
    assert len(enumerate_characters(5, primitive_only=True)) == 3
    assert len(enumerate_characters(1)) == 1
    assert enumerate_characters(1)[0].is_primitive
    for ell in (5, 7, 11, 13):
        assert len(enumerate_characters(ell, primitive_only=True)) == ell - 2
    for q in (8, 12, 16, 45):
        assert len(enumerate_characters(q)) == totient(q)
        assert len(enumerate_characters(q, primitive_only=True)) == primitive_totient(q)


@given(st.integers(min_value=1, max_value=50), st.integers(), st.integers())
@settings(max_examples=150, deadline=None)
def test_multiplicativity(q, a, b):
    chars = enumerate_characters(q)
    chi = chars[(a + b) % len(chars)]
    if gcd(a, q) == 1 and gcd(b, q) == 1:
        assert chi.angle(a * b) == (chi.angle(a) + chi.angle(b)) % 1
    if gcd(a, q) > 1:
        assert chi.angle(a) is None
    assert chi.angle(1) == 0


def test_conductor_examples():
    q0, chi0 = conductor(principal_character(12))
    assert q0 == 1
    chi6 = induce(quadratic_character(3), 6)
    qstar, chistar = conductor(chi6)
    assert qstar == 3
    assert chistar.angle(2) == Fraction(1, 2)  # chi(2) = -1
    for chi in enumerate_characters(5, primitive_only=True):
        assert conductor(chi)[0] == 5
        assert conductor(conductor(chi)[1])[0] == 5  # idempotent


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 12, 16, 24, 36, 40, 60, 72, 100])
def test_conductor_against_brute_scan(q):
    for chi in enumerate_characters(q):
        qstar, chistar = conductor(chi)
        assert qstar == brute_conductor(chi)
        # induced character agrees on all units of q
        for a in range(1, q + 1):
            if gcd(a, q) == 1:
                assert chi.angle(a) == chistar.angle(a)


def test_orthogonality_up_to_30():
    for q in range(1, 31):
        for chi in enumerate_characters(q):
            if chi.is_principal:
                continue
            total = sum(chi(a) for a in range(1, q + 1))
            assert abs(total) < 1e-12


def test_fourier_duality_random_function():
    rng = random.Random(7)
    for q in (5, 8, 12, 20):
        chars = enumerate_characters(q)
        units = [a for a in range(1, q + 1) if gcd(a, q) == 1]
        f = {a: mp.mpc(rng.uniform(-1, 1), rng.uniform(-1, 1)) for a in units}
        fhat = {chi.exps: sum(mp.conj(chi(a)) * f[a] for a in units) / len(units) for chi in chars}
        for a in units:
            back = sum(fhat[chi.exps] * chi(a) for chi in chars)
            assert abs(back - f[a]) < 1e-12


def test_gauss_sums():
    mp.mp.dps = 40
    g3 = gauss_sum(quadratic_character(3))
    assert abs(g3.value - 1j * mp.sqrt(3)) <= g3.err + mp.mpf("1e-30")
    g4 = gauss_sum(principal_character(4))
    assert abs(g4.value) <= g4.err + mp.mpf("1e-30")  # e(1/4) + e(3/4) = 0
    for chi in enumerate_characters(7, primitive_only=True):
        g = gauss_sum(chi)
        assert abs(abs(g.value) - mp.sqrt(7)) < 1e-25


def test_gauss_modulus_primitive_up_to_50():
    mp.mp.dps = 40
    for q in range(2, 51):
        for chi in enumerate_characters(q, primitive_only=True):
            g = gauss_sum(chi)
            assert abs(abs(g.value) ** 2 - q) < 1e-20 + 2 * mp.sqrt(q) * g.err


def test_nu_weight_cases():
    mp.mp.dps = 40
    s = mp.mpf(2)
    chi5 = quadratic_character(5)
    psi3 = quadratic_character(3)
    assert nu_weight(chi5, psi3, s, 1).value == 1
    # t = p prime coprime to both moduli: p^(1-s) psi(p) - chi(p)
    p = 7
    v = nu_weight(chi5, psi3, s, p)
    expect = mp.mpf(p) ** (1 - s) * psi3(p) - chi5(p)
    assert abs(v.value - expect) <= v.err + mp.mpf("1e-25")
    # t = p^2: mu kills d = 1
    v = nu_weight(chi5, psi3, s, p * p)
    expect = mp.mpf(p * p) ** (1 - s) * psi3(p * p) - mp.mpf(p) ** (1 - s) * psi3(p) * chi5(p)
    assert abs(v.value - expect) <= v.err + mp.mpf("1e-25")
    with pytest.raises(ValueError):
        nu_weight(chi5, psi3, s, 0)


def test_pointwise_product_and_parity():
    chi4 = quadratic_character(4)
    psi3 = quadratic_character(3)
    prod = pointwise_product(chi4, psi3)
    assert prod.q == 12
    for n in range(1, 13):
        if gcd(n, 12) == 1:
            assert abs(prod(n) - chi4(n) * psi3(n)) < 1e-14
    assert chi4.parity() == -1
    assert psi3.parity() == -1
    assert prod.parity() == 1


def test_angles_give_exact_roots_of_unity():
    mp.mp.dps = 40
    chi = enumerate_characters(7)[1]
    for n in range(1, 7):
        t = chi.angle(n)
        assert 0 <= t < 1
        v = e_angle(t)
        assert abs(abs(v) - 1) < 1e-25
