from collections import deque

import pytest
from hypothesis import settings

from lenscap.exactfrac import ZERO
from lenscap.oracle import build_ball

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def bfs_depths(graph):
    adj = graph.adjacency()
    depth = {ZERO: 0}
    queue = deque([ZERO])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in depth:
                depth[v] = depth[u] + 1
                queue.append(v)
    return depth


@pytest.fixture(scope="session")
def ball_depths():
    """BFS depth from 0/1 for every vertex of the size-120 ball (pairwise edges)."""
    return bfs_depths(build_ball(120, method="pairwise"))


ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
