"""Continued fractions and the integer Moebius maps they induce."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import IndeterminateForm, InfinityInput, NegativeInput
from .exactfrac import INF, ExtRational, reduce

Term = Union[int, ExtRational]


@dataclass(frozen=True, slots=True)
class ContFrac:
    """Standard expansion [a0, a1, ..., an]: a0 >= 0, ai >= 1, an >= 2.

    The values 0 and 1 use the conventional one-term expansions [0] and [1].
    """

    terms: tuple[int, ...]

    def __post_init__(self):
        t = self.terms
        if not t:
            raise ValueError("empty expansion")
        if t[0] < 0 or any(a < 1 for a in t[1:]):
            raise ValueError(f"non-standard terms {t}")
        if t[-1] < 2 and t not in ((0,), (1,)):
            raise ValueError(f"last term must be >= 2: {t}")

    @property
    def n(self) -> int:
        """Index of the last term."""
        return len(self.terms) - 1

    def value(self) -> ExtRational:
        return evaluate(self.terms)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.terms)) + "]"


def std_expand(x: ExtRational) -> ContFrac:
    """Standard expansion of a finite x >= 0 by Euclidean division."""
    if x.den == 0:
        raise InfinityInput("infinity has no finite continued fraction")
    if x.num < 0:
        raise NegativeInput(f"standard expansions need x >= 0, got {x}")
    n, d = x.num, x.den
    terms = []
    while d:
        a, r = divmod(n, d)
        terms.append(a)
        n, d = d, r
    return ContFrac(tuple(terms))


def _as_pair(t: Term) -> tuple[int, int]:
    if isinstance(t, ExtRational):
        return t.num, t.den
    return t, 1


def evaluate(terms: Sequence[Term]) -> ExtRational:
    """Value of [t0, t1, ..., tn] folded right to left.

    Terms may be any integers or extended rationals (zero, negative, non-integer,
    infinity), with r/0 = inf, r/inf = 0 and inf + r = inf.
    """
    if not terms:
        raise ValueError("cannot evaluate an empty sequence")
    n, d = _as_pair(terms[-1])
    for t in reversed(terms[:-1]):
        tn, td = _as_pair(t)
        # t + 1/(n/d) = (tn*n + td*d) / (td*n)
        n, d = tn * n + td * d, td * n
        if n == 0 and d == 0:
            raise IndeterminateForm(f"infinity + infinity while evaluating {list(map(str, terms))}")
        x = reduce(n, d)
        n, d = x.num, x.den
    return reduce(n, d)


@dataclass(frozen=True, slots=True)
class UniModMatrix:
    """Integer 2x2 matrix [[a11, a12], [a21, a22]] with determinant +-1."""

    a11: int
    a12: int
    a21: int
    a22: int

    def __post_init__(self):
        if abs(self.det) != 1:
            raise ValueError(f"determinant {self.det} is not +-1")

    @property
    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def __matmul__(self, other: UniModMatrix) -> UniModMatrix:
        return UniModMatrix(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a11, self.a12), (self.a21, self.a22)


IDENTITY = UniModMatrix(1, 0, 0, 1)


def mobius_of(a: Iterable[int]) -> UniModMatrix:
    """Matrix of x -> [a_n, ..., a_1, x] for the sequence (a_1, ..., a_n).

    Each step prepends a term c, i.e. left-multiplies by [[c, 1], [1, 0]].
    """
    m = IDENTITY
    for c in a:
        m = UniModMatrix(c, 1, 1, 0) @ m
    return m


def mobius_pair(m: UniModMatrix, x: ExtRational) -> tuple[int, int]:
    """The unreduced linear forms (a11 p + a12 q, a21 p + a22 q) at x = p/q."""
    return m.a11 * x.num + m.a12 * x.den, m.a21 * x.num + m.a22 * x.den


def apply_mobius(m: UniModMatrix, x: ExtRational) -> ExtRational:
    n, d = mobius_pair(m, x)
    if n == 0 and d == 0:
        raise IndeterminateForm(f"both linear forms vanish at {x}")
    assert gcd(n, d) == 1, (m, x)
    return reduce(n, d)


__all__ = [
    "INF",
    "IDENTITY",
    "ContFrac",
    "UniModMatrix",
    "apply_mobius",
    "evaluate",
    "mobius_of",
    "mobius_pair",
    "std_expand",
]
