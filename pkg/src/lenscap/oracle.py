"""Brute-force construction of the even-slope graph on a size-bounded ball.

The ball of size N holds every non-negative even-numerator fraction p/q with
p + q <= N. Edges are found from the determinant condition |ps - rq| = 2 alone,
without touching continued fractions, so the results can be used to check
the closed-form machinery in :mod:`lenscap.d2tree` and :mod:`lenscap.crosscap`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Any, Optional

import numpy as np

from .crosscap import crosscap_bw, crosscap_new
from .d2tree import mother, slope_path
from .exactfrac import ZERO, ExtRational, size


@dataclass(frozen=True)
class BallGraph:
    size_bound: int
    vertices: frozenset[ExtRational]
    edges: frozenset[tuple[ExtRational, ExtRational]]  # (smaller size, larger size)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict[ExtRational, list[ExtRational]]:
        adj: dict[ExtRational, list[ExtRational]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass
class VerifyReport:
    """Outcome of a verification run.

    Checks that were not part of the run are ``None``. ``cases`` counts the
    lens spaces examined by :func:`verify_formulas`.
    """

    vertex_count: int = 0
    edge_count: int = 0
    connected: Optional[bool] = None
    acyclic: Optional[bool] = None
    parent_matches_mother: Optional[bool] = None
    depth_matches_formulas: Optional[bool] = None
    cases: int = 0
    first_counterexample: Optional[dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        checks = (self.connected, self.acyclic, self.parent_matches_mother, self.depth_matches_formulas)
        return all(c is not False for c in checks) and self.first_counterexample is None

    def fail(self, check: str, **detail: Any) -> None:
        setattr(self, check, False)
        if self.first_counterexample is None:
            self.first_counterexample = {"check": check, **{k: str(v) for k, v in detail.items()}}

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "connected": self.connected,
            "acyclic": self.acyclic,
            "parent_matches_mother": self.parent_matches_mother,
            "depth_matches_formulas": self.depth_matches_formulas,
            "cases": self.cases,
            "first_counterexample": self.first_counterexample,
        }


def ball_vertices(n: int) -> list[tuple[int, int]]:
    """(p, q) pairs of the ball, sorted by size then by value."""
    out = [(0, 1)] if n >= 1 else []
    for p in range(2, n, 2):
        out.extend((p, q) for q in range(1, n - p + 1, 2) if gcd(p, q) == 1)
    out.sort(key=lambda v: (v[0] + v[1], v[0] * 1.0 / v[1]))
    return out


def _edges_scan(pq: np.ndarray, n: int) -> np.ndarray:
    """Solve ps - qr = +-2 for every vertex p/q and every odd s <= n.

    Exhaustive over candidate partners r/s: for fixed (p, q, s) the equation
    pins r down, so scanning s covers every pair. O(V * N).
    """
    p, q = pq[:, 0], pq[:, 1]
    index = np.full((n + 1) * (n + 1), -1, dtype=np.int64)
    index[p * (n + 1) + q] = np.arange(len(pq))
    found = []
    ids = np.arange(len(pq))
    for s in range(1, n + 1, 2):
        for delta in (2, -2):
            num = p * s - delta
            ok = num % q == 0
            r = num[ok] // q[ok]
            keep = (r >= 0) & (r % 2 == 0) & (r + s <= n)
            r = r[keep]
            src = ids[ok][keep]
            co = np.gcd(r, s) == 1
            dst = index[r[co] * (n + 1) + s]
            assert (dst >= 0).all()
            found.append(np.stack([src[co], dst], axis=1))
    e = np.concatenate(found) if found else np.empty((0, 2), dtype=np.int64)
    e = e[e[:, 0] < e[:, 1]]
    return np.unique(e, axis=0)


def _edges_pairwise(pq: np.ndarray, block: int = 2048) -> np.ndarray:
    """Test |ps - rq| = 2 on every unordered pair. O(V^2)."""
    p, q = pq[:, 0], pq[:, 1]
    found = []
    for start in range(0, len(pq), block):
        i = np.arange(start, min(start + block, len(pq)))
        det = np.abs(np.outer(p[i], q) - np.outer(q[i], p))
        a, b = np.nonzero(det == 2)
        a = i[a]
        keep = a < b
        found.append(np.stack([a[keep], b[keep]], axis=1))
    e = np.concatenate(found) if found else np.empty((0, 2), dtype=np.int64)
    return np.unique(e, axis=0)


def build_ball(n: int, method: str = "scan") -> BallGraph:
    if n < 1:
        raise ValueError(f"size bound must be positive, got {n}")
    verts = ball_vertices(n)
    pq = np.array(verts, dtype=np.int64).reshape(-1, 2)
    if method == "scan":
        e = _edges_scan(pq, n)
    elif method == "pairwise":
        e = _edges_pairwise(pq)
    else:
        raise ValueError(f"unknown edge method {method!r}")
    objs = [ExtRational(a, b) for a, b in verts]
    # vertices are sorted by size, so the lower index is the smaller end
    edges = frozenset((objs[i], objs[j]) for i, j in e.tolist())
    return BallGraph(n, frozenset(objs), edges)


def verify_tree(n: int, method: str = "scan") -> VerifyReport:
    g = build_ball(n, method)
    rep = VerifyReport(g.vertex_count, g.edge_count, True, True, True, True)
    adj = g.adjacency()

    depth = {ZERO: 0}
    queue = deque([ZERO])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in depth:
                depth[v] = depth[u] + 1
                queue.append(v)
    if len(depth) != g.vertex_count:
        missing = min((v for v in g.vertices if v not in depth), key=size)
        rep.fail("connected", vertex=missing)

    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in sorted(g.edges, key=lambda e: (size(e[1]), e[1], e[0])):
        ru, rv = find(u), find(v)
        if ru == rv:
            rep.fail("acyclic", edge=f"{u} -- {v}")
            break
        parent[ru] = rv
    if g.edge_count != g.vertex_count - 1:
        rep.fail("acyclic", edge_count=g.edge_count, vertex_count=g.vertex_count)

    gen = {ZERO: 0}
    for v in sorted(g.vertices, key=lambda x: (size(x), x)):
        if v == ZERO:
            continue
        m = mother(v)
        gen[v] = gen[m] + 1
        smaller = [u for u in adj[v] if size(u) < size(v)]
        if smaller != [m]:
            rep.fail("parent_matches_mother", vertex=v, mother=m, smaller_neighbors=[str(u) for u in smaller])
        bw = crosscap_bw((v.num, v.den)).total
        new = crosscap_new((v.num, v.den)).total
        if not (depth.get(v) == gen[v] == bw == new):
            rep.fail("depth_matches_formulas", vertex=v, bfs_depth=depth.get(v), generation=gen[v], bw=bw, new=new)
    return rep


def verify_formulas(p_max: int) -> VerifyReport:
    if p_max < 2:
        raise ValueError(f"p_max must be at least 2, got {p_max}")
    rep = VerifyReport(depth_matches_formulas=True)
    for p in range(2, p_max + 1, 2):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            rep.cases += 1
            bw = crosscap_bw((p, q)).total
            new = crosscap_new((p, q)).total
            path = slope_path(p, q).crosscap
            mirror = slope_path(p, p - q).crosscap
            if not (bw == new == path == mirror):
                rep.fail("depth_matches_formulas", p=p, q=q, bw=bw, new=new, path=path, path_p_minus_q=mirror)
    return rep
