"""Extended rationals p/q (with the single point at infinity 1/0) and lens parameters."""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from math import gcd

from .errors import BadModulus, NegativeInput, NotCoprime, OddP, QZeroModP, ZeroOverZero


@functools.total_ordering
@dataclass(frozen=True, slots=True)
class ExtRational:
    """Irreducible fraction ``num/den`` with ``den >= 0``.

    Infinity is stored in-band as ``1/0``; ``-1/0`` is the same point and is
    canonicalised by :func:`reduce`. Build values through :func:`reduce` unless
    the pair is already canonical.

    Ordering is the usual order on the reals with infinity above everything.
    """

    num: int
    den: int

    def __post_init__(self):
        n, d = self.num, self.den
        if d < 0:
            raise ValueError(f"denominator must be non-negative: {n}/{d}")
        if d == 0:
            if n != 1:
                raise ValueError(f"infinity must be stored as 1/0, got {n}/0")
        elif gcd(n, d) != 1:
            raise ValueError(f"{n}/{d} is not reduced")

    @property
    def is_inf(self) -> bool:
        return self.den == 0

    def __neg__(self) -> ExtRational:
        if self.den == 0:
            return self
        return ExtRational(-self.num, self.den)

    def __abs__(self) -> ExtRational:
        return ExtRational(abs(self.num), self.den)

    def __lt__(self, other):
        if not isinstance(other, ExtRational):
            return NotImplemented
        if other.den == 0:
            return self.den != 0
        if self.den == 0:
            return False
        return self.num * other.den < other.num * self.den

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ExtRational({self.num}, {self.den})"

    @classmethod
    def parse(cls, text: str) -> ExtRational:
        """Inverse of ``str``: accepts ``"8/3"``, ``"-2/5"``, ``"1/0"`` and bare integers."""
        m = re.fullmatch(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?", text)
        if m is None:
            raise ValueError(f"not a fraction: {text!r}")
        return reduce(int(m.group(1)), int(m.group(2)) if m.group(2) is not None else 1)


INF = ExtRational(1, 0)
ZERO = ExtRational(0, 1)
ONE = ExtRational(1, 1)


def reduce(n: int, d: int) -> ExtRational:
    """Canonical representative of n/d; both signs of n/0 give infinity."""
    if n == 0 and d == 0:
        raise ZeroOverZero("0/0 is not a fraction")
    if d == 0:
        return INF
    g = gcd(n, d)
    if d < 0:
        g = -g
    return ExtRational(n // g, d // g)


def integer(n: int) -> ExtRational:
    return ExtRational(n, 1)


def distance(a: ExtRational, b: ExtRational) -> int:
    """|a.num * b.den - b.num * a.den|, the Farey distance between two slopes."""
    return abs(a.num * b.den - b.num * a.den)


def size(x: ExtRational) -> int:
    if x.num < 0:
        raise NegativeInput(f"size is defined only for non-negative fractions, got {x}")
    return x.num + x.den


@dataclass(frozen=True, slots=True)
class LensParams:
    """Parameters of L(p, q) with p even.

    ``q_normalized`` is the representative of +-q mod p in [1, p/2]; it names
    the same lens space up to homeomorphism.
    """

    p: int
    q: int
    q_normalized: int


def normalize_lens(p: int, q: int) -> LensParams:
    if p < 2:
        raise BadModulus(f"p must be at least 2, got p={p}")
    if p % 2:
        raise OddP(f"p must be even for L(p,q) to contain a non-orientable surface, got p={p}")
    if q % p == 0:
        raise QZeroModP(f"q must not be divisible by p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise NotCoprime(f"p and q must be coprime, got gcd({p},{q})={gcd(p, q)}")
    r = q % p
    return LensParams(p, q, min(r, p - r))
