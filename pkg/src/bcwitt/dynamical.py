"""Lefschetz and Artin-Mazur zeta functions of quasi-unipotent toral maps.

A toral map is an integer d x d matrix M acting on the d-torus; its model
of homology is the exterior algebra of the rank-d lattice, which makes the
Lefschetz number of the m-th iterate det(I - M^m).  The Lefschetz zeta
function is the exponential of the generating series of those numbers; the
Artin-Mazur variant counts fixed points, |det(I - M^m)|, and is defined
only while every iterate has isolated fixed points.

When the characteristic polynomial of M is a product of cyclotomic
polynomials Phi_{m_i} (the quasi-unipotent case), the Lefschetz zeta has a
closed form: with m = lcm(m_i),

    zeta(t) = prod_{d | m} (1 - t^d)^(-s_d),
    s_d = (1/d) sum_{k | d} F_k mu(d/k),
    F_k = prod_i Phi_{m_i/(k, m_i)}(1) ^ (phi(m_i)/phi(m_i/(k, m_i))),

where Phi(1) is evaluated directly on the polynomial.  The expansion of
the closed form is checked against the exponential series in the tests.

The spectral Euler characteristic of a quasi-unipotent matrix collects its
eigenvalues (all roots of unity) into the group ring of Q/Z: each factor
Phi_d contributes the sum of the primitive points of denominator d.  It
turns matrix powers into the ring endomorphisms of the group ring, and
companion Verschiebung blocks into the division-point maps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .arith import cyclotomic, cyclotomic_factor, divisors, moebius, totient
from .errors import DegenerateIterate
from . import linalg
from .linalg import Matrix
from .qz import QZElement
from .witt import GhostVector, WittVector, unghost, witt_add


@dataclass(frozen=True)
class ToralMap:
    """An integer matrix acting on the torus of its dimension."""

    matrix: Matrix

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @staticmethod
    def of(rows: Sequence[Sequence[int]]) -> "ToralMap":
        m = linalg.as_matrix(rows)
        if any(not isinstance(x, int) for row in m for x in row):
            raise ValueError("toral maps need integer matrices")
        return ToralMap(m)

    def to_json(self) -> dict:
        return {"rows": [list(row) for row in self.matrix]}

    @staticmethod
    def from_json(data: dict) -> "ToralMap":
        return ToralMap.of(data["rows"])


def lefschetz_numbers(f: ToralMap, trunc: int) -> list[int]:
    """det(I - M^n) for n = 1..trunc."""
    if trunc < 1:
        raise ValueError("truncation must be >= 1")
    out = []
    power = linalg.identity(f.dim)
    for _ in range(trunc):
        power = linalg.mat_mul(power, f.matrix)
        out.append(int(linalg.det(linalg.mat_sub(linalg.identity(f.dim), power))))
    return out


def lefschetz_zeta_series(f: ToralMap, trunc: int) -> WittVector:
    """exp of the Lefschetz-number generating series, truncated."""
    return unghost(GhostVector.of(lefschetz_numbers(f, trunc)))


@dataclass(frozen=True)
class LefschetzZeta:
    """prod_{d} (1 - t^d)^(-s_d), stored as the exponent map d -> s_d."""

    exponents: tuple[tuple[int, int], ...]

    @staticmethod
    def of(exponents: dict[int, int]) -> "LefschetzZeta":
        return LefschetzZeta(tuple(sorted((d, s) for d, s in exponents.items() if s != 0)))

    def expand(self, trunc: int) -> WittVector:
        """Ghosts of (1 - t^d)^(-s) are s*d at multiples of d, else 0."""
        values = [0] * trunc
        for d, s in self.exponents:
            for m in range(d, trunc + 1, d):
                values[m - 1] += s * d
        return unghost(GhostVector.of(values))

    def to_json(self) -> dict:
        return {"exponents": {str(d): s for d, s in self.exponents}}


def lefschetz_zeta_closed(f: ToralMap) -> LefschetzZeta:
    """Exact closed form for a quasi-unipotent toral map."""
    indices = cyclotomic_factor(linalg.charpoly(f.matrix))
    if not indices:
        return LefschetzZeta.of({})
    m = math.lcm(*indices)
    f_k = {}
    for k in divisors(m):
        acc = 1
        for mi in indices:
            reduced = mi // math.gcd(k, mi)
            acc *= cyclotomic(reduced)(1) ** (totient(mi) // totient(reduced))
        f_k[k] = acc
    exponents = {}
    for d in divisors(m):
        total = sum(f_k[k] * moebius(d // k) for k in divisors(d))
        assert total % d == 0, "closed-form exponent must be an integer"
        exponents[d] = total // d
    return LefschetzZeta.of(exponents)


def artin_mazur_series(f: ToralMap, trunc: int) -> WittVector:
    """exp(sum |det(I - M^n)|/n t^n); fails on a degenerate iterate."""
    counts = []
    for n, a in enumerate(lefschetz_numbers(f, trunc), start=1):
        if a == 0:
            raise DegenerateIterate(n)
        counts.append(abs(a))
    return unghost(GhostVector.of(counts))


ZetaKind = Literal["lefschetz", "artin_mazur"]


def torified_dynamical_zeta(parts: Sequence[ToralMap], trunc: int,
                            kind: ZetaKind = "lefschetz") -> WittVector:
    """Product over the tori of the per-torus zeta (the Witt sum)."""
    if kind not in ("lefschetz", "artin_mazur"):
        raise ValueError(f"unknown zeta kind {kind!r}")
    acc = WittVector.one(trunc)
    for part in parts:
        series = (lefschetz_zeta_series if kind == "lefschetz" else artin_mazur_series)(
            part, trunc)
        acc = witt_add(acc, series)
    return acc


def spectral_euler(m: Matrix | ToralMap) -> QZElement:
    """Eigenvalues as division points: Phi_d contributes the primitive
    points of denominator d, with the factor's multiplicity."""
    mat = m.matrix if isinstance(m, ToralMap) else linalg.as_matrix(m)
    indices = cyclotomic_factor(linalg.charpoly(mat))
    acc: dict[Fraction, int] = {}
    for d in indices:
        for num in range(d):
            if math.gcd(num, d) == 1:
                r = Fraction(num, d)
                acc[r] = acc.get(r, 0) + 1
    return QZElement.from_terms(acc)


def verschiebung_block(n: int, m: Matrix | ToralMap) -> Matrix:
    """The nd x nd companion block whose n-th power is block-diagonal m."""
    mat = m.matrix if isinstance(m, ToralMap) else linalg.as_matrix(m)
    d = len(mat)
    if n < 1:
        raise ValueError("verschiebung_block needs n >= 1")
    size = n * d
    def entry(i: int, j: int):
        bi, bj = i // d, j // d
        if bi == 0 and bj == n - 1:
            return mat[i % d][j % d]
        if bi == bj + 1:
            return 1 if i % d == j % d else 0
        return 0
    if n == 1:
        return mat
    return tuple(tuple(entry(i, j) for j in range(size)) for i in range(size))
