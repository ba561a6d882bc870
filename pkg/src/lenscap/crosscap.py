"""Closed-form minimum crosscap numbers Cr(p, q) for lens spaces with p even.

Two formulas are provided, both read off the standard continued fraction of
p / q_normalized:

* :func:`crosscap_bw`, the Bredon-Wood sum of selected terms halved;
* :func:`crosscap_new`, which walks the expansion from its last term and counts
  how many mother steps each term contributes.
"""
from __future__ import annotations

from dataclasses import dataclass

from .contfrac import std_expand
from .exactfrac import INF, ExtRational, LensParams, integer, normalize_lens


@dataclass(frozen=True)
class BWTrace:
    lens: LensParams
    a: tuple[int, ...]
    b: tuple[int, ...]
    total: int


@dataclass(frozen=True)
class NewTrace:
    """Trace of the term-walk formula.

    All three sequences are indexed by i = 0..n, where alpha[0] is the *last*
    term of the standard expansion and alpha[n] its integer part.
    ``alpha_prime`` entries are integers n/1 or infinity 1/0.
    """

    lens: LensParams
    alpha: tuple[int, ...]
    alpha_prime: tuple[ExtRational, ...]
    beta: tuple[int, ...]
    total: int


def _lens(lens: LensParams | tuple[int, int]) -> LensParams:
    if isinstance(lens, LensParams):
        return lens
    return normalize_lens(*lens)


def crosscap_bw(lens: LensParams | tuple[int, int]) -> BWTrace:
    lens = _lens(lens)
    a = std_expand(ExtRational(lens.p, lens.q_normalized)).terms
    b = [a[0]]
    running = a[0]
    for i in range(1, len(a)):
        if b[i - 1] != a[i - 1] or running % 2 == 1:
            b.append(a[i])
        else:
            b.append(0)
        running += b[i]
    assert running % 2 == 0, (lens, a, b)
    return BWTrace(lens, a, tuple(b), running // 2)


def crosscap_new(lens: LensParams | tuple[int, int]) -> NewTrace:
    lens = _lens(lens)
    alpha = std_expand(ExtRational(lens.p, lens.q_normalized)).terms[::-1]
    primes: list[ExtRational] = [integer(alpha[0])]
    for i in range(1, len(alpha)):
        prev = primes[-1]
        if prev.is_inf:
            primes.append(integer(alpha[i]))
        elif prev.num % 2:
            primes.append(integer(alpha[i] + 1))
        else:
            primes.append(INF)
    last = primes[-1]
    assert last.is_inf or last.num % 2 == 0, (lens, alpha, primes)
    beta = tuple(0 if x.is_inf else x.num // 2 for x in primes)
    return NewTrace(lens, alpha, tuple(primes), beta, sum(beta))


def crosscap(p: int, q: int, method: str = "bw") -> int:
    """Cr(p, q) by one of ``"bw"``, ``"new"`` or ``"path"``."""
    if method == "bw":
        return crosscap_bw((p, q)).total
    if method == "new":
        return crosscap_new((p, q)).total
    if method == "path":
        from .d2tree import slope_path

        return slope_path(p, q).crosscap
    raise ValueError(f"unknown method {method!r}")
