"""Big Witt vectors over Q with exact arithmetic.

A (truncated) Witt vector is the power series 1 + c_1 t + ... + c_N t^N,
stored as the list c_1..c_N of exact rationals.  Its ghost components N_m
are read off from t d/dt log Z(t) = sum N_m t^m, which gives the Newton
recursion

    m * c_m = N_m + sum_{j=1}^{m-1} N_j c_{m-j},

used in both directions (ghost <-> coefficients) without leaving Q.

Operations follow the Witt dictionary: addition is the series product,
multiplication is pointwise on ghosts, the Teichmueller lift of a is the
geometric series 1/(1 - a t), Frobenius reindexes ghosts by n (shrinking
the truncation to floor(N/n)) and Verschiebung substitutes t -> t^n.

Rational Witt vectors are ratios num/den of polynomials with constant
term 1, the dense subring where zeta functions of interest live; they
expand exactly to truncated vectors, and their quotient (Witt subtraction)
stays rational.  Ghost vectors may also carry polynomial values (used for
a symbolic parameter q), in which case evaluation at q = 1 is literal
polynomial evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .arith import Polynomial, poly_gcd
from .errors import NotDivisible, TruncationTooSmall

Scalar = Union[int, Fraction]
GhostValue = Union[int, Fraction, Polynomial]


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


@dataclass(frozen=True)
class WittVector:
    """1 + c_1 t + ... + c_N t^N with exact rational c_m."""

    trunc: int
    coeffs: tuple[Scalar, ...]

    def __post_init__(self):
        if self.trunc < 1:
            raise ValueError("truncation must be >= 1")
        if len(self.coeffs) != self.trunc:
            raise ValueError("coefficient list must have exactly trunc entries")

    @staticmethod
    def from_coeffs(coeffs: Sequence[Scalar], trunc: int | None = None) -> "WittVector":
        cs = [_norm(Fraction(c) if not isinstance(c, (int, Fraction)) else c) for c in coeffs]
        n = len(cs) if trunc is None else trunc
        cs = (cs + [0] * n)[:n]
        return WittVector(n, tuple(cs))

    @staticmethod
    def one(trunc: int) -> "WittVector":
        """The Witt zero element: the constant series 1."""
        return WittVector(trunc, (0,) * trunc)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def truncate(self, n: int) -> "WittVector":
        if n > self.trunc:
            raise TruncationTooSmall(f"cannot extend truncation {self.trunc} to {n}")
        return WittVector(n, self.coeffs[:n])

    def to_json(self) -> dict:
        return {"trunc": self.trunc, "coeffs": [str(Fraction(c)) for c in self.coeffs]}

    @staticmethod
    def from_json(data: dict) -> "WittVector":
        return WittVector.from_coeffs([Fraction(c) for c in data["coeffs"]], int(data["trunc"]))


@dataclass(frozen=True)
class GhostVector:
    """Ghost components N_1..N_N; values may be polynomials in a symbol q."""

    trunc: int
    values: tuple[GhostValue, ...]

    def __post_init__(self):
        if len(self.values) != self.trunc:
            raise ValueError("ghost list must have exactly trunc entries")

    @staticmethod
    def of(values: Sequence[GhostValue]) -> "GhostVector":
        return GhostVector(len(values), tuple(
            v if isinstance(v, Polynomial) else _norm(v) for v in values))

    def is_symbolic(self) -> bool:
        return any(isinstance(v, Polynomial) for v in self.values)

    def __add__(self, other: "GhostVector") -> "GhostVector":
        _match(self, other)
        return GhostVector.of([a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, other: "GhostVector") -> "GhostVector":
        _match(self, other)
        return GhostVector.of([a * b for a, b in zip(self.values, other.values)])

    def scale(self, n: int) -> "GhostVector":
        return GhostVector.of([n * v for v in self.values])


def _match(a, b):
    if a.trunc != b.trunc:
        raise ValueError("truncations differ")


# ---------------------------------------------------------------- series ops

def series_mul(a: Sequence[Scalar], b: Sequence[Scalar], n: int) -> list[Scalar]:
    """Product of 1 + sum a_m t^m and 1 + sum b_m t^m, coefficients 1..n."""
    out = []
    for m in range(1, n + 1):
        s = (a[m - 1] if m <= len(a) else 0) + (b[m - 1] if m <= len(b) else 0)
        for j in range(1, m):
            if j <= len(a) and (m - j) <= len(b):
                s += a[j - 1] * b[m - j - 1]
        out.append(_norm(Fraction(s)))
    return out


def series_div(a: Sequence[Scalar], b: Sequence[Scalar], n: int) -> list[Scalar]:
    """Coefficients 1..n of (1 + sum a_m t^m) / (1 + sum b_m t^m)."""
    out: list[Scalar] = []
    for m in range(1, n + 1):
        s = Fraction(a[m - 1] if m <= len(a) else 0)
        for j in range(1, m + 1):
            if j <= len(b):
                prev = out[m - j - 1] if m - j >= 1 else 1
                s -= Fraction(b[j - 1]) * prev
        out.append(_norm(s))
    return out


def series_ratio(num: Sequence[Scalar], den: Sequence[Scalar], n: int) -> list[Scalar]:
    """Coefficients 0..n of num(t)/den(t) for an arbitrary numerator.

    ``num`` and ``den`` are plain ascending coefficient lists; ``den`` must
    have constant term 1.
    """
    if not den or den[0] != 1:
        raise ValueError("series_ratio needs a denominator with constant term 1")
    out: list[Scalar] = []
    for m in range(n + 1):
        s = Fraction(num[m] if m < len(num) else 0)
        for j in range(1, m + 1):
            if j < len(den):
                s -= Fraction(den[j]) * out[m - j]
        out.append(_norm(s))
    return out


# ------------------------------------------------------------- ghost bridge

def ghost(w: WittVector) -> GhostVector:
    """Ghost components via the Newton recursion; exact."""
    c = w.coeffs
    ns: list[Scalar] = []
    for m in range(1, w.trunc + 1):
        s = Fraction(m * c[m - 1])
        for j in range(1, m):
            s -= ns[j - 1] * c[m - j - 1]
        ns.append(_norm(s))
    return GhostVector.of(ns)


def unghost(g: GhostVector) -> WittVector:
    """Series with the given ghost components (exp of the generating series)."""
    if g.is_symbolic():
        raise ValueError("cannot expand a symbolic ghost vector; take q -> value first")
    cs: list[Scalar] = []
    for m in range(1, g.trunc + 1):
        s = Fraction(g.values[m - 1])
        for j in range(1, m):
            s += g.values[j - 1] * cs[m - j - 1]
        cs.append(_norm(s / m))
    return WittVector(g.trunc, tuple(cs))


# ------------------------------------------------------------ ring structure

def witt_add(a: WittVector, b: WittVector) -> WittVector:
    """Witt sum = product of the underlying series."""
    _match(a, b)
    return WittVector(a.trunc, tuple(series_mul(a.coeffs, b.coeffs, a.trunc)))


def witt_neg(a: WittVector) -> WittVector:
    return WittVector(a.trunc, tuple(series_div((), a.coeffs, a.trunc)))


def witt_sub(a: WittVector, b: WittVector) -> WittVector:
    _match(a, b)
    return WittVector(a.trunc, tuple(series_div(a.coeffs, b.coeffs, a.trunc)))


def witt_mul(a: WittVector, b: WittVector) -> WittVector:
    """Witt product: pointwise on ghosts, then back."""
    _match(a, b)
    return unghost(ghost(a) * ghost(b))


def witt_scale(n: int, a: WittVector) -> WittVector:
    """n-fold Witt sum of a with itself (ghosts scale by n)."""
    return unghost(ghost(a).scale(n))


def teichmuller(a: Scalar, trunc: int) -> WittVector:
    """[a] = 1/(1 - a t): coefficients a^m."""
    return WittVector.from_coeffs([_norm(Fraction(a) ** m) for m in range(1, trunc + 1)])


def frobenius(n: int, w: WittVector) -> WittVector:
    """ghost(F_n w)_m = ghost(w)_{n m}; truncation shrinks to floor(N/n)."""
    if n < 1:
        raise ValueError("frobenius needs n >= 1")
    m = w.trunc // n
    if m == 0:
        raise TruncationTooSmall(f"truncation {w.trunc} too small for Frobenius F_{n}")
    g = ghost(w)
    return unghost(GhostVector.of([g.values[n * k - 1] for k in range(1, m + 1)]))


def verschiebung(n: int, w: WittVector) -> WittVector:
    """V_n: P(t) -> P(t^n), keeping the stored truncation."""
    if n < 1:
        raise ValueError("verschiebung needs n >= 1")
    cs = [0] * w.trunc
    for m in range(1, w.trunc // n + 1):
        cs[m * n - 1] = w.coeffs[m - 1]
    return WittVector(w.trunc, tuple(cs))


# --------------------------------------------------------- rational vectors

@dataclass(frozen=True)
class RationalWitt:
    """num(t)/den(t) with constant terms 1 and gcd(num, den) = 1."""

    num: Polynomial
    den: Polynomial

    @staticmethod
    def of(num: Polynomial | Sequence[Scalar], den: Polynomial | Sequence[Scalar] = (1,),
           reduce: bool = True) -> "RationalWitt":
        """Build num/den, cancelling the gcd unless the caller constructed
        the two sides coprime already (reduce=False)."""
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        den = den if isinstance(den, Polynomial) else Polynomial(den)
        if num.is_zero() or den.is_zero() or num[0] != 1 or den[0] != 1:
            raise NotDivisible("rational Witt vectors need constant terms exactly 1")
        if reduce and num.degree > 0 and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                g = g * Fraction(1, Fraction(g[0]))  # normalize g(0) = 1
                num = num.exact_div(g)
                den = den.exact_div(g)
        return RationalWitt(num, den)

    @staticmethod
    def one() -> "RationalWitt":
        return RationalWitt.of([1])

    def expand(self, trunc: int) -> WittVector:
        """Exact series expansion mod t^(trunc+1)."""
        return WittVector(trunc, tuple(
            series_div(self.num.coeffs[1:], self.den.coeffs[1:], trunc)))

    def ghosts(self, trunc: int) -> GhostVector:
        return ghost(self.expand(trunc))

    def witt_add(self, other: "RationalWitt") -> "RationalWitt":
        return RationalWitt.of(self.num * other.num, self.den * other.den)

    def witt_neg(self) -> "RationalWitt":
        return RationalWitt.of(self.den, self.num)

    def __repr__(self) -> str:
        return f"RationalWitt({self.num!r} / {self.den!r})"

    def to_json(self) -> dict:
        def side(p: Polynomial):
            return [c if isinstance(c, int) else str(c) for c in p.coeffs]
        return {"num": side(self.num), "den": side(self.den)}

    @staticmethod
    def from_json(data: dict) -> "RationalWitt":
        def side(cs):
            return Polynomial([Fraction(c) for c in cs])
        return RationalWitt.of(side(data["num"]), side(data.get("den", [1])))


def rational_expand(r: RationalWitt, trunc: int) -> WittVector:
    return r.expand(trunc)


def rational_div(p: RationalWitt, q: RationalWitt) -> RationalWitt:
    """Witt subtraction p -_W q, i.e. the series ratio p/q reduced.

    The unique S with S +_W q = p.  On ghosts this subtracts componentwise;
    the multiplicative Witt quotient (componentwise ghost division) is a
    different operation, provided by ghost_divide below.
    """
    return RationalWitt.of(p.num * q.den, p.den * q.num)


def ghost_divide(p: GhostVector, q: GhostVector) -> GhostVector:
    """Componentwise exact division of ghost vectors (Witt product quotient).

    Integer/rational entries must divide exactly in Z (or produce the exact
    rational); polynomial entries must divide without remainder.
    """
    _match(p, q)
    out: list[GhostValue] = []
    for a, b in zip(p.values, q.values):
        if isinstance(a, Polynomial) or isinstance(b, Polynomial):
            pa = a if isinstance(a, Polynomial) else Polynomial([a])
            pb = b if isinstance(b, Polynomial) else Polynomial([b])
            quot, rem = divmod(pa, pb)
            if not rem.is_zero():
                raise NotDivisible(f"polynomial ghost {pa!r} not divisible by {pb!r}")
            out.append(quot)
        else:
            if b == 0:
                raise NotDivisible("ghost division by zero component")
            quot = Fraction(a) / Fraction(b)
            if isinstance(a, int) and isinstance(b, int) and quot.denominator != 1:
                raise NotDivisible(f"ghost component {a} not divisible by {b}")
            out.append(_norm(quot))
    return GhostVector.of(out)
