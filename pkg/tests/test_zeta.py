import random
from fractions import Fraction

import pytest

from bcwitt.arith import Polynomial
from bcwitt.torified import TorifiedClass
from bcwitt.witt import GhostVector, RationalWitt, ghost, series_ratio
from bcwitt.zeta import (
    f1_zeta,
    hw_quotient_check,
    hw_zeta,
    polylog_rational,
    q_to_1_limit,
    z0,
    z1,
)


def random_class(rng, degree=5, bound=6):
    return TorifiedClass.of([rng.randint(0, bound) for _ in range(rng.randint(1, degree + 1))])


def test_f1_zeta_examples():
    point = f1_zeta(TorifiedClass.point(), 5)
    assert point.ghost.values == (1, 1, 1, 1, 1)
    assert point.witt.coeffs == (1, 1, 1, 1, 1)

    gm = f1_zeta(TorifiedClass.of([0, 1]), 4)
    assert gm.ghost.values == (1, 2, 3, 4)
    assert gm.witt.coeffs[:2] == (1, Fraction(3, 2))

    p1 = f1_zeta(TorifiedClass.of([2, 1]), 5)
    assert p1.ghost.values == (3, 4, 5, 6, 7)


def test_polylog_rational_small():
    assert polylog_rational(1) == (Polynomial([0, 1]), Polynomial([1, -1]))
    assert polylog_rational(2) == (Polynomial([0, 1]), Polynomial([1, -1]) ** 2)
    assert polylog_rational(3) == (Polynomial([0, 1, 1]), Polynomial([1, -1]) ** 3)


def test_polylog_series_is_power_sums():
    for k in range(1, 9):
        num, den = polylog_rational(k)
        n = 30
        series = series_ratio(num.coeffs, den.coeffs, n)
        assert series == [0] + [m ** (k - 1) for m in range(1, n + 1)]


def test_hw_zeta_examples():
    t_q3 = hw_zeta(TorifiedClass.of([0, 1]), 3, trunc=6)
    assert t_q3.rational == RationalWitt.of([1, -1], [1, -3])
    assert t_q3.ghost.values == tuple(3**m - 1 for m in range(1, 7))

    p1_q2 = hw_zeta(TorifiedClass.of([2, 1]), 2, trunc=6)
    assert p1_q2.rational == RationalWitt.of([1], Polynomial([1, -1]) * Polynomial([1, -2]))
    assert p1_q2.ghost.values == tuple(1 + 2**m for m in range(1, 7))

    pt = hw_zeta(TorifiedClass.point(), 7, trunc=4)
    assert pt.rational == RationalWitt.of([1], [1, -1])


def test_hw_ghosts_match_rational_series():
    rng = random.Random(73)
    for q in (2, 3, 5):
        for _ in range(8):
            c = random_class(rng)
            hw = hw_zeta(c, q, trunc=15)
            assert ghost(hw.rational.expand(15)) == hw.ghost


def test_hw_symbolic():
    hw = hw_zeta(TorifiedClass.of([2, 1]), "q", trunc=3)
    qpoly = Polynomial([0, 1])
    assert hw.ghost.values[0] == 2 + (qpoly - 1)
    assert hw.ghost.values[1] == 2 + (qpoly.substitute_power(2) - 1)
    assert hw.rational is None


def test_z0_z1():
    r, g = z0(1, 3, trunc=4)
    assert r == RationalWitt.of([1], Polynomial([1, -1]) ** 2)
    assert g.values == (2, 2, 2, 2)
    r0, g0 = z0(0, 5, trunc=3)
    assert r0 == RationalWitt.of([1], [1, -1])
    assert g0.values == (1, 1, 1)
    sym = z1(2, "q", trunc=3)
    assert sym.values[1] == Polynomial([1, 1]) ** 2  # (1+q)^2
    assert z1(1, 3, trunc=4).values == (1, 4, 13, 40)


def test_quotient_check():
    assert hw_quotient_check(1, 3, trunc=3).values == (1, 4, 13)
    assert hw_quotient_check(0, 2, trunc=4).values == (1, 1, 1, 1)
    assert hw_quotient_check(2, 2, trunc=3).values[1] == 9
    for q in (2, 3, 5):
        for k in range(5):
            assert hw_quotient_check(k, q, trunc=12) == z1(k, q, trunc=12)
    for k in range(5):
        sym = hw_quotient_check(k, "q", trunc=6)
        assert sym == z1(k, "q", trunc=6)


def test_q_to_1_limit():
    lim = q_to_1_limit(z1(1, "q", trunc=5))
    assert lim.values == (1, 2, 3, 4, 5)
    const = GhostVector.of([3, 4])
    assert q_to_1_limit(const) == const


def test_q_to_1_of_assembled_sum_matches_f1():
    rng = random.Random(79)
    trunc = 10
    for _ in range(15):
        c = random_class(rng)
        # Witt sum over k of z1(k, q)^{a_k}: ghosts add with multiplicity.
        values = [Polynomial() for _ in range(trunc)]
        for k, a in enumerate(c.a):
            if a == 0:
                continue
            g = z1(k, "q", trunc)
            values = [v + a * w for v, w in zip(values, g.values)]
        assembled = GhostVector.of(values)
        assert q_to_1_limit(assembled) == f1_zeta(c, trunc).ghost


def test_exponentiability_on_ghosts():
    rng = random.Random(83)
    trunc = 20
    for _ in range(20):
        a, b = random_class(rng), random_class(rng)
        za, zb = f1_zeta(a, trunc).ghost, f1_zeta(b, trunc).ghost
        assert f1_zeta(a + b, trunc).ghost == za + zb
        assert f1_zeta(a * b, trunc).ghost == za * zb


def test_f1_witt_form_matches_ghosts():
    rng = random.Random(89)
    for _ in range(10):
        c = random_class(rng)
        z = f1_zeta(c, 12)
        assert ghost(z.witt) == z.ghost


def test_hw_exponentiability():
    rng = random.Random(97)
    for q in (2, 3):
        for _ in range(8):
            a, b = random_class(rng, 4), random_class(rng, 4)
            za = hw_zeta(a, q, 10, with_rational=False)
            zb = hw_zeta(b, q, 10, with_rational=False)
            assert hw_zeta(a + b, q, 10, with_rational=False).ghost == za.ghost + zb.ghost
            assert hw_zeta(a * b, q, 10, with_rational=False).ghost == za.ghost * zb.ghost
    # Rational forms agree too (small classes): sum is the series product.
    for q in (2, 3):
        for _ in range(5):
            a, b = random_class(rng, 2, bound=2), random_class(rng, 2, bound=2)
            lhs = hw_zeta(a + b, q, 8).rational
            rhs = hw_zeta(a, q, 8).rational.witt_add(hw_zeta(b, q, 8).rational)
            assert lhs == rhs


def test_bad_q():
    with pytest.raises(ValueError):
        hw_zeta(TorifiedClass.point(), 1)
    with pytest.raises(ValueError):
        hw_zeta(TorifiedClass.point(), "x")
