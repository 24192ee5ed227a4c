"""The group ring Z[Q/Z] and its Bost-Connes maps.

Elements of Q/Z are reduced Fractions in [0, 1); an element of the group
ring is a finite map from such fractions to nonzero integer coefficients.
The ring product convolves exponents: e(r) * e(s) = e(r + s mod 1).

The semigroup maps implemented here are

* ``sigma(n, .)``   the ring endomorphism e(r) -> e(n r),
* ``rho(n, .)``     the additive map e(r) -> sum of the n preimages of r
  under multiplication by n, namely e((r + j)/n) for j = 0..n-1,
* ``pi_n_times_n``  the integral representative n*pi_n = sum_{n r = 0} e(r).

They satisfy sigma_n o rho_n = n*id and rho_n o sigma_n = product with
n*pi_n.  Coefficients stay integers throughout: the only place the
rational idempotent pi_n would appear is through its integral multiple.

``split``/``unsplit`` realize, for a finite set F of primes, the tensor
decomposition of the group ring along Q/Z = (Q/Z)_F x (Q/Z)^F (denominator
F-smooth times denominator coprime to F), by CRT on denominators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

QZFraction = Fraction


def qz(num: int, den: int = 1) -> Fraction:
    """A point of Q/Z: the reduced fraction num/den mod 1, in [0, 1)."""
    f = Fraction(num, den)
    return f - math.floor(f)


def _canon_terms(terms: Mapping[Fraction, int]) -> tuple[tuple[Fraction, int], ...]:
    items = [(r, c) for r, c in terms.items() if c != 0]
    items.sort(key=lambda rc: (rc[0].denominator, rc[0].numerator))
    return tuple(items)


@dataclass(frozen=True)
class QZElement:
    """Finite Z-linear combination of points of Q/Z, canonically ordered."""

    terms: tuple[tuple[Fraction, int], ...]

    @staticmethod
    def from_terms(terms: Mapping[Fraction, int] | Iterable[tuple[Fraction, int]]) -> "QZElement":
        acc: dict[Fraction, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for r, c in items:
            r = qz(r.numerator, r.denominator)
            acc[r] = acc.get(r, 0) + c
        return QZElement(_canon_terms(acc))

    @staticmethod
    def zero() -> "QZElement":
        return QZElement(())

    @staticmethod
    def e(r: Fraction | int, coeff: int = 1) -> "QZElement":
        """The basis element coeff * e(r)."""
        f = r if isinstance(r, Fraction) else Fraction(r)
        return QZElement.from_terms({f: coeff})

    def coeff(self, r: Fraction) -> int:
        key = qz(r.numerator, r.denominator)
        for s, c in self.terms:
            if s == key:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "QZElement") -> "QZElement":
        acc = dict(self.terms)
        for r, c in other.terms:
            acc[r] = acc.get(r, 0) + c
        return QZElement(_canon_terms(acc))

    def __neg__(self) -> "QZElement":
        return QZElement(tuple((r, -c) for r, c in self.terms))

    def __sub__(self, other: "QZElement") -> "QZElement":
        return self + (-other)

    def __mul__(self, other: "QZElement | int") -> "QZElement":
        if isinstance(other, int):
            return QZElement(_canon_terms({r: c * other for r, c in self.terms}))
        acc: dict[Fraction, int] = {}
        for r, a in self.terms:
            for s, b in other.terms:
                key = qz((r + s).numerator, (r + s).denominator)
                acc[key] = acc.get(key, 0) + a * b
        return QZElement(_canon_terms(acc))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self.terms:
            return "QZElement(0)"
        return "QZElement(" + " + ".join(f"{c}*e({r})" for r, c in self.terms) + ")"

    def to_json(self) -> dict:
        return {"terms": [{"r": str(r), "c": c} for r, c in self.terms]}

    @staticmethod
    def from_json(data: dict) -> "QZElement":
        return QZElement.from_terms([(Fraction(t["r"]), int(t["c"])) for t in data["terms"]])


def sigma(n: int, a: QZElement) -> QZElement:
    """Ring endomorphism e(r) -> e(n r mod 1)."""
    if n < 1:
        raise ValueError("sigma needs n >= 1")
    return QZElement.from_terms([(qz(n * r.numerator, r.denominator), c) for r, c in a.terms])


def rho(n: int, a: QZElement) -> QZElement:
    """Additive map e(r) -> sum over the n solutions of n r' = r."""
    if n < 1:
        raise ValueError("rho needs n >= 1")
    out: dict[Fraction, int] = {}
    for r, c in a.terms:
        for j in range(n):
            key = qz(r.numerator + j * r.denominator, n * r.denominator)
            out[key] = out.get(key, 0) + c
    return QZElement(_canon_terms(out))


def pi_n_times_n(n: int) -> QZElement:
    """The integral idempotent representative n*pi_n = sum_{n r = 0} e(r)."""
    if n < 1:
        raise ValueError("pi_n_times_n needs n >= 1")
    return QZElement.from_terms({Fraction(j, n): 1 for j in range(n)})


def _smooth_coprime_parts(den: int, primes: frozenset[int]) -> tuple[int, int]:
    smooth = 1
    rest = den
    for p in primes:
        while rest % p == 0:
            smooth *= p
            rest //= p
    return smooth, rest


@dataclass(frozen=True)
class SplitQZElement:
    """Element of Z[(Q/Z)_F] (x) Z[(Q/Z)^F]: keys are (F-smooth, F-coprime) pairs."""

    primes: frozenset[int]
    terms: tuple[tuple[tuple[Fraction, Fraction], int], ...]

    def to_json(self) -> dict:
        return {
            "F": sorted(self.primes),
            "terms": [
                {"r_smooth": str(rf), "r_coprime": str(rc), "c": c}
                for (rf, rc), c in self.terms
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "SplitQZElement":
        primes = frozenset(int(p) for p in data["F"])
        acc: dict[tuple[Fraction, Fraction], int] = {}
        for t in data["terms"]:
            key = (Fraction(t["r_smooth"]), Fraction(t["r_coprime"]))
            acc[key] = acc.get(key, 0) + int(t["c"])
        return SplitQZElement(primes, _canon_split(acc))


def _canon_split(acc: Mapping[tuple[Fraction, Fraction], int]):
    items = [(k, c) for k, c in acc.items() if c != 0]
    items.sort(key=lambda kc: (
        kc[0][0].denominator, kc[0][0].numerator, kc[0][1].denominator, kc[0][1].numerator))
    return tuple(items)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def split(primes: Iterable[int], a: QZElement) -> SplitQZElement:
    """Decompose each e(r) as e(r_F) (x) e(r^F) by CRT on the denominator."""
    fset = frozenset(primes)
    if not fset:
        raise ValueError("split needs a nonempty set of primes")
    if not all(_is_prime(p) for p in fset):
        raise ValueError("split needs a set of primes")
    acc: dict[tuple[Fraction, Fraction], int] = {}
    for r, c in a.terms:
        b_smooth, b_cop = _smooth_coprime_parts(r.denominator, fset)
        # r = x/b_smooth + y/b_cop (mod 1) with the CRT solution below.
        if b_smooth == 1:
            key = (Fraction(0), r)
        elif b_cop == 1:
            key = (r, Fraction(0))
        else:
            x = (r.numerator * pow(b_cop, -1, b_smooth)) % b_smooth
            y = (r.numerator * pow(b_smooth, -1, b_cop)) % b_cop
            key = (Fraction(x, b_smooth), Fraction(y, b_cop))
        acc[key] = acc.get(key, 0) + c
    return SplitQZElement(fset, _canon_split(acc))


def unsplit(s: SplitQZElement) -> QZElement:
    """Inverse of split: multiply the two tensor legs back together."""
    acc: dict[Fraction, int] = {}
    for (rf, rc), c in s.terms:
        r = qz((rf + rc).numerator, (rf + rc).denominator)
        acc[r] = acc.get(r, 0) + c
    return QZElement(_canon_terms(acc))
