"""Exact number-theoretic and polynomial primitives.

Conventions used throughout the package:

* Rationals are ``fractions.Fraction`` values (always reduced, positive
  denominator), so canonical equality is free.
* A polynomial is a dense ascending coefficient list, constant term first,
  wrapped in :class:`Polynomial`.  Coefficients are ints or Fractions; a
  Fraction that reduces to an integer is stored as an int, so polynomials
  that happen to be integral compare equal to integer polynomials and
  serialize as plain integer lists.
* The zero polynomial has an empty coefficient tuple and degree -1.

Cyclotomic factorization is by repeated trial division, smallest index
first, which is exact and fast at the degrees this package meets.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .errors import NotQuasiUnipotent

Coeff = Union[int, Fraction]


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Polynomial:
    """Dense univariate polynomial over Z or Q, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __getitem__(self, k: int) -> Coeff:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Polynomial | Coeff") -> "Polynomial":
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial | Coeff") -> "Polynomial":
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "Polynomial":
        return Polynomial([other]) - self

    def __mul__(self, other: "Polynomial | Coeff") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        lead = other.coeffs[-1]
        for k in range(len(rem) - 1, d - 1, -1):
            c = Fraction(rem[k]) / lead
            if c == 0:
                continue
            q[k - d] = _norm_coeff(c)
            for j, b in enumerate(other.coeffs):
                rem[k - d + j] -= c * b
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Divide, requiring zero remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{self!r} is not divisible by {other!r}")
        return q

    def __call__(self, x: Coeff) -> Coeff:
        acc: Coeff = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm_coeff(acc)

    def substitute_power(self, n: int) -> "Polynomial":
        """Return p(t^n)."""
        if n < 1:
            raise ValueError("power substitution needs n >= 1")
        out = [0] * (len(self.coeffs) * n)
        for k, c in enumerate(self.coeffs):
            out[k * n] = c
        return Polynomial(out)

    def reversed(self, degree: int | None = None) -> "Polynomial":
        """Coefficient reversal t^d * p(1/t), padding up to ``degree`` if given."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below actual degree")
        return Polynomial([self[d - k] for k in range(d + 1)])

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(term)
            elif c == -1:
                parts.append(f"-{term}")
            else:
                parts.append(f"{c}*{term}")
        return "Polynomial(" + " + ".join(parts).replace("+ -", "- ") + ")"


def _primitive_int(p: Polynomial) -> Polynomial:
    """Scale to an integer polynomial with content 1 and positive lead."""
    denlcm = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            denlcm = denlcm * c.denominator // math.gcd(denlcm, c.denominator)
    ints = [int(c * denlcm) for c in p.coeffs]
    content = 0
    for c in ints:
        content = math.gcd(content, c)
    if content == 0:
        return Polynomial()
    if ints[-1] < 0:
        content = -content
    return Polynomial([c // content for c in ints])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over Q, by a primitive pseudo-remainder sequence over Z.

    Reducing to content-1 integer polynomials after every pseudo-division
    keeps coefficient growth tame where plain fraction Euclid blows up.
    """
    if a.is_zero():
        a, b = b, a
    if b.is_zero():
        if a.is_zero():
            return a
        lead = a.coeffs[-1]
        return Polynomial([Fraction(c, 1) / lead for c in a.coeffs])
    big, small = _primitive_int(a), _primitive_int(b)
    if big.degree < small.degree:
        big, small = small, big
    while not small.is_zero():
        # lead(small)^(gap+1) * big is exactly divisible step by step.
        gap = big.degree - small.degree
        scaled = big * (small.coeffs[-1] ** (gap + 1))
        big, small = small, _primitive_int(scaled % small)
    lead = big.coeffs[-1]
    return Polynomial([Fraction(c, 1) / lead for c in big.coeffs])


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; enough for desk-scale indices."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """Ascending list of positive divisors."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def moebius(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)^(number of primes)."""
    if n < 1:
        raise ValueError("moebius needs n >= 1")
    mu = 1
    for _, e in factorize(n).items():
        if e > 1:
            return 0
        mu = -mu
    return mu


def totient(n: int) -> int:
    """Euler totient; also the degree of cyclotomic(n)."""
    if n < 1:
        raise ValueError("totient needs n >= 1")
    phi = n
    for p in factorize(n):
        phi -= phi // p
    return phi


def stirling2(k: int, r: int) -> int:
    """Stirling number of the second kind S(k, r).

    Computed from the alternating binomial sum
    r! * S(k,r) = sum_{j=0..r} (-1)^(r-j) C(r,j) j^k, with 0^0 = 1.
    """
    if k < 0 or r < 0:
        raise ValueError("stirling2 needs nonnegative arguments")
    if r > k:
        return 0
    total = 0
    for j in range(r + 1):
        total += (-1) ** (r - j) * math.comb(r, j) * j**k
    assert total % math.factorial(r) == 0
    return total // math.factorial(r)


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> Polynomial:
    """The m-th cyclotomic polynomial, monic with integer coefficients."""
    if m < 1:
        raise ValueError("cyclotomic needs m >= 1")
    # t^m - 1 divided by the product of all lower cyclotomic factors.
    num = Polynomial([-1] + [0] * (m - 1) + [1])
    for d in divisors(m):
        if d < m:
            num = num.exact_div(cyclotomic(d))
    assert num.degree == totient(m) and num.is_integral()
    return num


def cyclotomic_factor(p: Polynomial) -> list[int]:
    """Factor +-p into cyclotomics, returning the sorted index multiset.

    Tries each Phi_d with deg Phi_d <= remaining degree, smallest d first,
    dividing out repeatedly.  Raises NotQuasiUnipotent when a nontrivial
    factor survives, i.e. some root of p is not a root of unity.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.coeffs[-1] == -1:
        p = -p
    if p.coeffs[-1] != 1:
        raise ValueError("cyclotomic_factor expects a polynomial monic up to sign")
    out: list[int] = []
    # totient(d) >= sqrt(d/2), so indices beyond 2*deg^2 cannot divide.
    bound = 2 * p.degree * p.degree + 1
    for d in range(1, bound + 1):
        if p.degree == 0:
            break
        if totient(d) > p.degree:
            continue
        while True:
            q, r = divmod(p, cyclotomic(d))
            if not r.is_zero():
                break
            out.append(d)
            p = q
    if p.degree > 0 or p.coeffs[0] != 1:
        raise NotQuasiUnipotent(f"non-cyclotomic factor of degree {p.degree} remains")
    return out
