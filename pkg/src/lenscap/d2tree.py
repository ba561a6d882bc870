"""Navigation of the tree of even slopes joined at distance 2.

Vertices are the fractions p/q with p even. Every vertex other than 0/1 has a
unique *mother* one step closer to 0/1, obtained by lowering the last term of
its standard continued fraction by 2. Negative vertices are handled by the
reflection x -> -x, which preserves distances.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count, islice
from typing import Iterable, Iterator

from .contfrac import ContFrac, evaluate, std_expand
from .errors import BadT, NegativeInput, NonPositive, NotAVertex, NotCoprime, OddP, RootHasNoMother
from .exactfrac import INF, ZERO, ExtRational, distance, reduce


def is_vertex(x: ExtRational) -> bool:
    return x.num % 2 == 0


def _require_vertex(x: ExtRational) -> None:
    if not is_vertex(x):
        raise NotAVertex(f"{x} is not an even vertex (numerator must be even)")


def _mother_pos(x: ExtRational) -> ExtRational:
    terms = list(std_expand(x).terms)
    terms[-1] -= 2
    return evaluate(terms)


def mother(x: ExtRational) -> ExtRational:
    _require_vertex(x)
    if x == ZERO:
        raise RootHasNoMother("0/1 is the root and has no mother")
    if x.num < 0:
        return -_mother_pos(-x)
    return _mother_pos(x)


def t_order(x: ExtRational) -> Iterator[int]:
    """Default enumeration of child parameters.

    1, -3, 3, -5, 5, ... for x > 0; 1, 3, 5, ... for the root, whose children
    with negative t lie on the negative side.
    """
    if x == ZERO:
        yield from count(1, 2)
        return
    yield 1
    for k in count(3, 2):
        yield -k
        yield k


def default_ts(x: ExtRational, k: int) -> list[int]:
    return list(islice(t_order(x), k))


def child(x: ExtRational, t: int) -> ExtRational:
    """The child [a0, ..., a_{n-1}, a_n + 2/t] of an even vertex x >= 0."""
    terms: list = list(std_expand(x).terms)
    terms[-1] = reduce(terms[-1] * t + 2, t)
    return evaluate(terms)


def children(x: ExtRational, t_values: Iterable[int]) -> list[ExtRational]:
    _require_vertex(x)
    if x.num < 0 or x.is_inf:
        raise NegativeInput(f"children are enumerated for finite x >= 0, got {x}")
    out = []
    for t in t_values:
        if t % 2 == 0 or t == -1:
            raise BadT(f"t must be an odd integer other than -1, got t={t}")
        if x == ZERO and t < 0:
            raise BadT(f"children of 0/1 need t >= 1 to stay on the non-negative side, got t={t}")
        out.append(child(x, t))
    return out


def generation(x: ExtRational) -> int:
    """Number of mother steps from x down to 0/1; negative x by reflection."""
    _require_vertex(x)
    x = abs(x)
    k = 0
    while x != ZERO:
        x = _mother_pos(x)
        k += 1
    return k


@dataclass(frozen=True)
class Territory:
    """Open interval (lo, hi) of the extended positive half-line, lo < hi."""

    lo: ExtRational
    hi: ExtRational

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty territory ({self.lo}, {self.hi})")

    def __contains__(self, x: ExtRational) -> bool:
        return self.lo < x < self.hi

    def issubset(self, other: Territory) -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def isdisjoint(self, other: Territory) -> bool:
        return self.hi <= other.lo or other.hi <= self.lo


def territory(x: ExtRational) -> Territory:
    _require_vertex(x)
    if x.num <= 0 or x.is_inf:
        raise NonPositive(f"territory needs a finite x > 0, got {x}")
    a = list(std_expand(x).terms)
    lower_last = evaluate(a[:-1] + [a[-1] - 1])
    inf_last = evaluate(a[:-1] + [INF])
    if len(a) % 2 == 1:  # n even
        return Territory(lower_last, inf_last)
    return Territory(inf_last, lower_last)


@dataclass(frozen=True)
class PathResult:
    """Slopes 0/1 = r_0, ..., r_k = p/q of the band-sum sequence.

    ``expansions[i]`` is the standard expansion of |r_i|.
    """

    slopes: tuple[ExtRational, ...]
    crosscap: int
    euler_char: int
    expansions: tuple[ContFrac, ...]


def slope_path(p: int, q: int) -> PathResult:
    if p < 2 or p % 2:
        raise OddP(f"p must be even and at least 2, got p={p}")
    target = reduce(p, q)
    if target.num != p and target.num != -p:
        raise NotCoprime(f"p and q must be coprime, got p={p}, q={q}")
    sign = -1 if target.num < 0 else 1
    chain = [abs(target)]
    while chain[-1] != ZERO:
        chain.append(_mother_pos(chain[-1]))
    chain.reverse()
    slopes = tuple(x if sign > 0 else -x for x in chain)
    k = len(chain) - 1
    return PathResult(slopes, k, 2 - k, tuple(std_expand(x) for x in chain))


def is_edge(a: ExtRational, b: ExtRational) -> bool:
    _require_vertex(a)
    _require_vertex(b)
    return distance(a, b) == 2


__all__ = [
    "PathResult",
    "Territory",
    "child",
    "children",
    "default_ts",
    "generation",
    "is_edge",
    "is_vertex",
    "mother",
    "slope_path",
    "t_order",
    "territory",
]
