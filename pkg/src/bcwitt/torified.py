"""Grothendieck classes of torified varieties.

A torified class is a polynomial in the torus class T = L - 1 with
nonnegative integer coefficients; the same class can be written in the
L-basis (Laurent polynomial in the Lefschetz class L), and conversion is
the exact binomial substitution T = L - 1 / L = T + 1.  L-basis exponents
may be half-integers after a virtual-motive twist, so exponents are stored
doubled; plain classes have all-even internal keys.

The number of points over the degree-m extension of the one-element field
of sum a_k T^k is sum a_k m^k, with m = 1 counting the tori and the
constant coefficient a_0 the Euler characteristic.

Leveled classes pair a class with the level N of the cyclic quotient
through which a profinite action factors.  At this class level the
Bost-Connes sigma keeps the pair, and rho multiplies the class by n
(the class of the n-point cycle) and the level by n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import HalfTwistPresent, NotEffectivelyTorified


@dataclass(frozen=True)
class TorifiedClass:
    """sum a_k T^k with a_k nonnegative integers, ascending tuple."""

    a: tuple[int, ...]

    @staticmethod
    def of(coeffs: Sequence[int]) -> "TorifiedClass":
        cs = [int(c) for c in coeffs]
        if any(c < 0 for c in cs):
            raise ValueError("torified coefficients must be nonnegative")
        while cs and cs[-1] == 0:
            cs.pop()
        return TorifiedClass(tuple(cs))

    @staticmethod
    def zero() -> "TorifiedClass":
        return TorifiedClass(())

    @staticmethod
    def point() -> "TorifiedClass":
        return TorifiedClass((1,))

    @staticmethod
    def torus(dim: int = 1) -> "TorifiedClass":
        return TorifiedClass.of([0] * dim + [1])

    @property
    def degree(self) -> int:
        return len(self.a) - 1

    def coeff(self, k: int) -> int:
        return self.a[k] if 0 <= k < len(self.a) else 0

    def __add__(self, other: "TorifiedClass") -> "TorifiedClass":
        n = max(len(self.a), len(other.a))
        return TorifiedClass.of([self.coeff(k) + other.coeff(k) for k in range(n)])

    def __mul__(self, other: "TorifiedClass | int") -> "TorifiedClass":
        if isinstance(other, int):
            return TorifiedClass.of([c * other for c in self.a])
        out = [0] * (len(self.a) + len(other.a))
        for i, x in enumerate(self.a):
            for j, y in enumerate(other.a):
                out[i + j] += x * y
        return TorifiedClass.of(out)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"T": list(self.a)}

    @staticmethod
    def from_json(data: dict) -> "TorifiedClass":
        return TorifiedClass.of(data["T"])


@dataclass(frozen=True)
class LClass:
    """Laurent polynomial in L with half-integer exponents allowed.

    Keys of ``c2`` are doubled exponents (so L^(1/2) is key 1), values are
    nonzero integers.
    """

    c2: tuple[tuple[int, int], ...]

    @staticmethod
    def from_doubled(items: Mapping[int, int] | Iterable[tuple[int, int]]) -> "LClass":
        acc: dict[int, int] = {}
        pairs = items.items() if isinstance(items, Mapping) else items
        for k2, c in pairs:
            acc[k2] = acc.get(k2, 0) + c
        return LClass(tuple(sorted((k, c) for k, c in acc.items() if c != 0)))

    @staticmethod
    def from_integer_coeffs(coeffs: Sequence[int]) -> "LClass":
        """Ascending integer-exponent coefficients c_0 + c_1 L + ..."""
        return LClass.from_doubled({2 * k: int(c) for k, c in enumerate(coeffs)})

    def coeff2(self, k2: int) -> int:
        for k, c in self.c2:
            if k == k2:
                return c
        return 0

    def has_half_twist(self) -> bool:
        return any(k % 2 for k, _ in self.c2)

    def shift(self, half_steps: int) -> "LClass":
        """Multiply by L^(half_steps/2)."""
        return LClass(tuple((k + half_steps, c) for k, c in self.c2))

    def __add__(self, other: "LClass") -> "LClass":
        return LClass.from_doubled(list(self.c2) + list(other.c2))

    def to_json(self) -> dict:
        def key(k2: int) -> str:
            return str(k2 // 2) if k2 % 2 == 0 else str(Fraction(k2, 2))
        return {"L": {key(k): c for k, c in self.c2}}

    @staticmethod
    def from_json(data: dict) -> "LClass":
        acc = {}
        for key, c in data["L"].items():
            f = Fraction(key) * 2
            if f.denominator != 1:
                raise ValueError(f"exponent {key} is not a half-integer")
            acc[int(f)] = int(c)
        return LClass.from_doubled(acc)


def t_to_l(c: TorifiedClass) -> LClass:
    """Substitute T = L - 1 exactly."""
    acc: dict[int, int] = {}
    for k, a in enumerate(c.a):
        if a == 0:
            continue
        for j in range(k + 1):
            acc[2 * j] = acc.get(2 * j, 0) + a * math.comb(k, j) * (-1) ** (k - j)
    return LClass.from_doubled(acc)


def l_to_t(c: LClass) -> TorifiedClass:
    """Substitute L = T + 1; fails if the result leaves the effective cone."""
    if c.has_half_twist():
        raise HalfTwistPresent("cannot torify a class with half-integer twists")
    if any(k < 0 for k, _ in c.c2):
        raise NotEffectivelyTorified("negative powers of the Lefschetz class do not torify")
    top = max((k // 2 for k, _ in c.c2), default=-1)
    out = [0] * (top + 1)
    for k2, coeff in c.c2:
        j = k2 // 2
        for i in range(j + 1):
            out[i] += coeff * math.comb(j, i)
    if any(x < 0 for x in out):
        raise NotEffectivelyTorified(f"T-coefficients {out} have a negative entry")
    return TorifiedClass.of(out)


def f1m_points(c: TorifiedClass, m: int) -> int:
    """Point count over the m-th extension: sum a_k m^k."""
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    return sum(a * m**k for k, a in enumerate(c.a))


def euler_characteristic(c: TorifiedClass) -> int:
    return c.coeff(0)


def bb_assemble(pieces: Iterable[tuple[TorifiedClass, int]]) -> TorifiedClass:
    """Assemble sum [Z_i] L^(d_i) in the T-basis: sum [Z_i] (T + 1)^(d_i)."""
    total = TorifiedClass.zero()
    affine_line = TorifiedClass.of([1, 1])  # L = 1 + T
    for z, d in pieces:
        if d < 0:
            raise ValueError("cell dimensions must be nonnegative")
        term = z
        for _ in range(d):
            term = term * affine_line
        total = total + term
    return total


def virtual_motive(c: LClass, dim: int) -> LClass:
    """Twist by L^(-dim/2); the result may carry half-integer exponents."""
    if c.has_half_twist():
        raise HalfTwistPresent("virtual motive input must have integer exponents")
    return c.shift(-dim)


@dataclass(frozen=True)
class LeveledClass:
    cls: TorifiedClass
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be >= 1")

    def to_json(self) -> dict:
        return {"class": self.cls.to_json(), "level": self.level}

    @staticmethod
    def from_json(data: dict) -> "LeveledClass":
        return LeveledClass(TorifiedClass.from_json(data["class"]), int(data["level"]))


def bc_sigma(n: int, x: LeveledClass) -> LeveledClass:
    """Class-level shadow of precomposing the action: the pair is unchanged."""
    if n < 1:
        raise ValueError("bc_sigma needs n >= 1")
    return x


def bc_rho(n: int, x: LeveledClass) -> LeveledClass:
    """Product with the n-point cycle: class times n, level times n."""
    if n < 1:
        raise ValueError("bc_rho needs n >= 1")
    return LeveledClass(x.cls * n, x.level * n)
