from __future__ import annotations

import itertools

import pytest

from hamlift import groups
from hamlift.permgroup import Permutation, PermGroup


def perm(*images: int) -> Permutation:
    return Permutation(tuple(images))


def cyc(n: int, *cycles) -> Permutation:
    return Permutation.from_cycles(n, *cycles)


def brute_closure(gens: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """Element set of <gens> using nothing but tuple composition."""
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(a[g[i]] for i in range(n))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def brute_commutators(elems: set[tuple[int, ...]]) -> set[tuple[int, ...]]:
    n = len(next(iter(elems)))

    def mul(a, b):
        return tuple(a[b[i]] for i in range(n))

    def inv(a):
        out = [0] * n
        for i, v in enumerate(a):
            out[v] = i
        return tuple(out)

    comms = {mul(mul(inv(a), inv(b)), mul(a, b)) for a, b in itertools.product(elems, repeat=2)}
    return brute_closure(sorted(comms))


@pytest.fixture
def sym3() -> PermGroup:
    return PermGroup(3, [cyc(3, (0, 1)), cyc(3, (0, 1, 2))])


@pytest.fixture
def z9() -> PermGroup:
    return groups.cyclic(9)


# acceptance criteria append "criterion N: PASS|FAIL ..." lines here
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
