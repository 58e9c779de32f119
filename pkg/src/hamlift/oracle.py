"""Exhaustive Hamilton cycle and path search used as ground truth.

Deliberately separate from the constructive code: plain sets, no parity
tricks, and an expansion budget so every answer is one of found, none or
budget exceeded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphcore import Graph
from .lifting import HamiltonCertificate, verify_certificate

DEFAULT_BUDGET = 10**8

FOUND = "found"
NONE = "none"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class OracleResult:
    status: str
    certificate: HamiltonCertificate | None = None
    expansions: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _Budget(Exception):
    pass


def _reachable_all(x: Graph, sources: set[int], unvisited: set[int]) -> bool:
    seen = set()
    stack = list(sources)
    while stack:
        v = stack.pop()
        for w in x.adjacency[v]:
            if w in unvisited and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(unvisited)


def find_hamilton_cycle(x: Graph, budget: int = DEFAULT_BUDGET) -> OracleResult:
    n = x.vertex_count
    if n < 3:
        return OracleResult(NONE)
    path = [0]
    unvisited = set(range(1, n))
    count = [0]

    def dfs() -> bool:
        count[0] += 1
        if count[0] > budget:
            raise _Budget
        cur = path[-1]
        if not unvisited:
            return 0 in x.adjacency[cur]
        # each unvisited vertex needs two usable cycle neighbours
        for w in unvisited:
            usable = sum(1 for t in x.adjacency[w] if t in unvisited or t == cur or t == 0)
            if usable < 2:
                return False
        if not _reachable_all(x, {cur}, unvisited):
            return False
        for w in sorted(x.adjacency[cur]):
            if w in unvisited:
                unvisited.discard(w)
                path.append(w)
                if dfs():
                    return True
                path.pop()
                unvisited.add(w)
        return False

    try:
        ok = dfs()
    except _Budget:
        return OracleResult(BUDGET_EXCEEDED, expansions=count[0])
    if not ok:
        return OracleResult(NONE, expansions=count[0])
    cert = HamiltonCertificate("cycle", tuple(path))
    assert verify_certificate(x, cert)
    return OracleResult(FOUND, cert, count[0])


def find_hamilton_path(x: Graph, budget: int = DEFAULT_BUDGET) -> OracleResult:
    n = x.vertex_count
    count = [0]
    path: list[int] = []
    unvisited = set(range(n))

    def dfs() -> bool:
        count[0] += 1
        if count[0] > budget:
            raise _Budget
        if not unvisited:
            return True
        cur = path[-1]
        # a vertex with one usable neighbour must be the final vertex
        ends = 0
        for w in unvisited:
            usable = sum(1 for t in x.adjacency[w] if t in unvisited or t == cur)
            if usable == 0:
                return False
            if usable == 1:
                ends += 1
        if ends > 1:
            return False
        if not _reachable_all(x, {cur}, unvisited):
            return False
        for w in sorted(x.adjacency[cur]):
            if w in unvisited:
                unvisited.discard(w)
                path.append(w)
                if dfs():
                    return True
                path.pop()
                unvisited.add(w)
        return False

    try:
        for s in range(n):
            path[:] = [s]
            unvisited.discard(s)
            if dfs():
                cert = HamiltonCertificate("path", tuple(path))
                assert verify_certificate(x, cert)
                return OracleResult(FOUND, cert, count[0])
            unvisited.add(s)
    except _Budget:
        return OracleResult(BUDGET_EXCEEDED, expansions=count[0])
    return OracleResult(NONE, expansions=count[0])
