"""Finite combinatorial model of cyclic actions over a base.

A cyclic action is a finite set {0..size-1} with a chosen generator
permutation whose N-th power is the identity, N being the stored level (a
profinite action factoring through Z/NZ).  A relative object adds an
equivariant map to a base action at the same level.

The two Bost-Connes operations act as follows:

* sigma: replace the generator by its n-th power (precompose the action),
  keeping the level;
* geometric Verschiebung: spread the set over n copies, cycling the copies
  and applying the original generator once per full cycle, at level N*n,
  so the n-th power of the new generator is the old one times identity.

Periodic points of period k are the fixed points of the k-th power of the
generator, and satisfy the reindexing identities tested exhaustively in
the suite: precomposition turns k-periodicity into nk-periodicity, and the
Verschiebung has k-periodic points only for n | k, namely n stacked copies
of the (k/n)-periodic points.

The Euler characteristic with values in the group ring of Q/Z sends an
orbit of size d to the full set of division points of order dividing d
(the regular character sum); it intertwines sigma with the group-ring
endomorphisms and the Verschiebung with the division-point maps.

Isomorphism of actions is decided by orbit sizes (the cycle type), which
classifies effectively finite actions; for relative objects the invariant
is, per base orbit, the multiset of total-orbit sizes lying over it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .qz import QZElement


@dataclass(frozen=True)
class CyclicAction:
    """Permutation action of Z/level on {0..size-1}; perm is the generator."""

    level: int
    perm: tuple[int, ...]

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be >= 1")
        size = len(self.perm)
        if sorted(self.perm) != list(range(size)):
            raise ValueError("perm must be a permutation of 0..size-1")
        if self.power(self.level) != tuple(range(size)):
            raise ValueError(f"generator must have order dividing the level {self.level}")

    @property
    def size(self) -> int:
        return len(self.perm)

    @staticmethod
    def of(level: int, perm: Sequence[int]) -> "CyclicAction":
        return CyclicAction(level, tuple(perm))

    @staticmethod
    def trivial(level: int, size: int) -> "CyclicAction":
        return CyclicAction(level, tuple(range(size)))

    @staticmethod
    def cycle(n: int, level: int | None = None) -> "CyclicAction":
        """A single n-cycle, at level n unless specified."""
        return CyclicAction(level or n, tuple((i + 1) % n for i in range(n)))

    def power(self, k: int) -> tuple[int, ...]:
        """The permutation perm^k."""
        if k < 0:
            raise ValueError("negative power of a generator")
        out = list(range(self.size))
        base = list(self.perm)
        while k:
            if k & 1:
                out = [base[i] for i in out]
            base = [base[i] for i in base]
            k >>= 1
        return tuple(out)

    def orbits(self) -> list[tuple[int, ...]]:
        seen = [False] * self.size
        out = []
        for start in range(self.size):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            current = self.perm[start]
            while current != start:
                orbit.append(current)
                seen[current] = True
                current = self.perm[current]
            out.append(tuple(orbit))
        return out

    def orbit_type(self) -> tuple[int, ...]:
        """Sorted orbit sizes; a complete isomorphism invariant of the action."""
        return tuple(sorted(len(o) for o in self.orbits()))

    def to_json(self) -> dict:
        return {"level": self.level, "perm": list(self.perm)}

    @staticmethod
    def from_json(data: dict) -> "CyclicAction":
        return CyclicAction.of(int(data["level"]), [int(x) for x in data["perm"]])


@dataclass(frozen=True)
class RelativeObject:
    """An equivariant map between actions at the same level."""

    total: CyclicAction
    base: CyclicAction
    fibration: tuple[int, ...]

    def __post_init__(self):
        if self.total.level != self.base.level:
            raise ValueError("total and base must share a level")
        if len(self.fibration) != self.total.size:
            raise ValueError("the map must be defined on every point of the total set")
        if any(not 0 <= b < self.base.size for b in self.fibration):
            raise ValueError("the map must land in the base set")
        for s in range(self.total.size):
            if self.fibration[self.total.perm[s]] != self.base.perm[self.fibration[s]]:
                raise ValueError("the map must be equivariant")

    @staticmethod
    def of(total: CyclicAction, base: CyclicAction, fibration: Sequence[int]) -> "RelativeObject":
        return RelativeObject(total, base, tuple(fibration))

    def orbit_type(self):
        """Per base orbit, the sorted multiset of total-orbit sizes over it."""
        base_orbits = self.base.orbits()
        which = {}
        for idx, orbit in enumerate(base_orbits):
            for b in orbit:
                which[b] = idx
        over: dict[int, list[int]] = {i: [] for i in range(len(base_orbits))}
        for orbit in self.total.orbits():
            over[which[self.fibration[orbit[0]]]].append(len(orbit))
        return tuple(sorted(
            (len(base_orbits[i]), tuple(sorted(sizes))) for i, sizes in over.items()))

    def to_json(self) -> dict:
        return {"total": self.total.to_json(), "base": self.base.to_json(),
                "map": list(self.fibration)}

    @staticmethod
    def from_json(data: dict) -> "RelativeObject":
        return RelativeObject.of(CyclicAction.from_json(data["total"]),
                                 CyclicAction.from_json(data["base"]),
                                 [int(x) for x in data["map"]])


# ------------------------------------------------------------- operations

def sigma_action(n: int, a: CyclicAction) -> CyclicAction:
    """Precompose: the generator becomes perm^n, level unchanged."""
    if n < 1:
        raise ValueError("sigma_action needs n >= 1")
    return CyclicAction(a.level, a.power(n))


def verschiebung_action(n: int, a: CyclicAction) -> CyclicAction:
    """Spread over n copies at level n*level; copy j of point s has index
    j*size + s.  The generator advances the copy index and applies the old
    generator on wraparound, so its n-th power is perm x id."""
    if n < 1:
        raise ValueError("verschiebung_action needs n >= 1")
    size = a.size
    perm = [0] * (n * size)
    for j in range(n):
        for s in range(size):
            if j < n - 1:
                perm[j * size + s] = (j + 1) * size + s
            else:
                perm[j * size + s] = a.perm[s]
    return CyclicAction(a.level * n, tuple(perm))


def periodic_points(a: CyclicAction, k: int) -> frozenset[int]:
    """Fixed points of the k-th power of the generator."""
    if k < 1:
        raise ValueError("periodic_points needs k >= 1")
    power = a.power(k)
    return frozenset(s for s in range(a.size) if power[s] == s)


def bc_sigma(n: int, x: RelativeObject) -> RelativeObject:
    return RelativeObject.of(sigma_action(n, x.total), sigma_action(n, x.base), x.fibration)


def bc_rho(n: int, x: RelativeObject) -> RelativeObject:
    total = verschiebung_action(n, x.total)
    base = verschiebung_action(n, x.base)
    fib = [0] * total.size
    for j in range(n):
        for s in range(x.total.size):
            fib[j * x.total.size + s] = j * x.base.size + x.fibration[s]
    return RelativeObject.of(total, base, fib)


def euler_char(a: CyclicAction) -> QZElement:
    """Each orbit of size d contributes the division points of order
    dividing d: sum over r with d*r = 0 of e(r)."""
    acc: dict[Fraction, int] = {}
    for orbit in a.orbits():
        d = len(orbit)
        for j in range(d):
            r = Fraction(j, d)
            acc[r] = acc.get(r, 0) + 1
    return QZElement.from_terms(acc)


# -------------------------------------------------- constructions for tests

def disjoint_union(a: CyclicAction, b: CyclicAction) -> CyclicAction:
    """Union at the common level (lcm), b's points shifted past a's."""
    level = math.lcm(a.level, b.level)
    perm = list(a.perm) + [a.size + t for t in b.perm]
    return CyclicAction(level, tuple(perm))


def product(a: CyclicAction, b: CyclicAction) -> CyclicAction:
    """Diagonal action on the product set, at level lcm(a.level, b.level)."""
    level = math.lcm(a.level, b.level)
    perm = [0] * (a.size * b.size)
    for s in range(a.size):
        for t in range(b.size):
            perm[s * b.size + t] = a.perm[s] * b.size + b.perm[t]
    return CyclicAction(level, tuple(perm))


def relative_product(x: RelativeObject, y: RelativeObject) -> RelativeObject:
    """Componentwise product with diagonal actions."""
    total = product(x.total, y.total)
    base = product(x.base, y.base)
    fib = [0] * total.size
    for s in range(x.total.size):
        for t in range(y.total.size):
            fib[s * y.total.size + t] = x.fibration[s] * y.base.size + y.fibration[t]
    return RelativeObject.of(total, base, fib)


def relative_disjoint_union(x: RelativeObject, y: RelativeObject) -> RelativeObject:
    total = disjoint_union(x.total, y.total)
    base = disjoint_union(x.base, y.base)
    fib = list(x.fibration) + [x.base.size + b for b in y.fibration]
    return RelativeObject.of(total, base, fib)
