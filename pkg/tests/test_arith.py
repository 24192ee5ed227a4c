import math
import random
from itertools import combinations

import pytest

from bcwitt.arith import (
    Polynomial,
    cyclotomic,
    cyclotomic_factor,
    divisors,
    factorize,
    moebius,
    poly_gcd,
    stirling2,
    totient,
)
from bcwitt.errors import NotQuasiUnipotent


def count_partitions(k, r):
    """Brute-force count of set partitions of {0..k-1} into exactly r blocks."""
    def rec(elems):
        if not elems:
            yield []
            return
        first, rest = elems[0], elems[1:]
        for size in range(len(rest) + 1):
            for others in combinations(rest, size):
                block = (first,) + others
                remaining = [e for e in rest if e not in others]
                for tail in rec(remaining):
                    yield [block] + tail
    return sum(1 for p in rec(list(range(k))) if len(p) == r)


def test_moebius_values():
    assert moebius(1) == 1
    assert moebius(6) == 1  # two distinct primes, (-1)^2
    assert moebius(12) == 0  # divisible by 4
    assert moebius(30) == -1
    with pytest.raises(ValueError):
        moebius(0)


def test_totient_values():
    assert totient(1) == 1
    assert totient(4) == len([a for a in range(1, 4) if math.gcd(a, 4) == 1]) == 2
    assert totient(12) == len([a for a in range(1, 12) if math.gcd(a, 12) == 1]) == 4


def test_stirling2_against_enumeration():
    assert stirling2(2, 2) == 1
    assert stirling2(2, 1) == 1
    assert stirling2(4, 2) == count_partitions(4, 2) == 7
    assert stirling2(0, 0) == 1
    assert stirling2(3, 5) == 0


def test_stirling2_recurrence():
    for k in range(1, 21):
        for r in range(1, 21):
            assert stirling2(k, r) == r * stirling2(k - 1, r) + stirling2(k - 1, r - 1)


def test_cyclotomic_small():
    assert cyclotomic(1) == Polynomial([-1, 1])
    # Oracle: divide t^4 - 1 by (t - 1)(t + 1).
    t4m1 = Polynomial([-1, 0, 0, 0, 1])
    assert cyclotomic(4) == t4m1.exact_div(Polynomial([-1, 1]) * Polynomial([1, 1]))
    assert cyclotomic(4) == Polynomial([1, 0, 1])
    # Oracle: divide t^6 - 1 by Phi_1 Phi_2 Phi_3.
    t6m1 = Polynomial([-1, 0, 0, 0, 0, 0, 1])
    assert cyclotomic(6) == t6m1.exact_div(cyclotomic(1) * cyclotomic(2) * cyclotomic(3))
    assert cyclotomic(6) == Polynomial([1, -1, 1])


def test_cyclotomic_degree_is_totient():
    for m in range(1, 65):
        assert cyclotomic(m).degree == totient(m)


def test_cyclotomic_product_is_tn_minus_1():
    for n in range(1, 257):
        prod = Polynomial([1])
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == Polynomial([-1] + [0] * (n - 1) + [1])


def test_cyclotomic_at_one():
    for m in range(1, 65):
        value = cyclotomic(m)(1)
        fac = factorize(m)
        if m == 1:
            assert value == 0
        elif len(fac) == 1:
            assert value == next(iter(fac))
        else:
            assert value == 1


def test_cyclotomic_factor_examples():
    assert cyclotomic_factor(Polynomial([1, 0, 1])) == [4]
    assert cyclotomic_factor(Polynomial([-1, 1]) ** 2) == [1, 1]
    with pytest.raises(NotQuasiUnipotent):
        cyclotomic_factor(Polynomial([-2, 0, 1]))


def test_cyclotomic_factor_sign():
    assert cyclotomic_factor(-(Polynomial([-1, 1]))) == [1]


def test_cyclotomic_factor_roundtrip_random():
    rng = random.Random(20240817)
    for _ in range(40):
        ms = []
        total = 0
        while True:
            m = rng.randint(1, 30)
            if total + totient(m) > 40:
                break
            ms.append(m)
            total += totient(m)
            if rng.random() < 0.3:
                break
        prod = Polynomial([1])
        for m in ms:
            prod = prod * cyclotomic(m)
        assert cyclotomic_factor(prod) == sorted(ms)


def test_polynomial_arithmetic():
    p = Polynomial([1, 2, 3])
    q = Polynomial([0, 1])
    assert p * q == Polynomial([0, 1, 2, 3])
    assert (p - p).is_zero()
    assert p(2) == 1 + 4 + 12
    assert divmod(p * q + Polynomial([5]), p) == (q, Polynomial([5]))
    assert p.substitute_power(2) == Polynomial([1, 0, 2, 0, 3])
    assert Polynomial([2, 0, 1]).reversed() == Polynomial([1, 0, 2])


def test_poly_gcd():
    a = Polynomial([-1, 1]) * Polynomial([1, 0, 1])
    b = Polynomial([-1, 1]) * Polynomial([1, 1])
    assert poly_gcd(a, b) == Polynomial([-1, 1])
    assert poly_gcd(a, Polynomial()).exact_div(Polynomial([-1, 1]) * Polynomial([1, 0, 1])).degree == 0
    assert poly_gcd(b, a * b) == poly_gcd(b, b)
