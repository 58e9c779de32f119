"""Path lifting along quotient maps and the factor group construction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphcore import Graph, quotient_graph
from .partition import QuotientMap
from .permgroup import Permutation, PermGroup, orbit, orbit_partition, power_subgroup


class LiftError(ValueError):
    pass


class FactorGroupError(ValueError):
    pass


class EndpointNotInOrbit(FactorGroupError):
    pass


class EndpointInPowerOrbit(FactorGroupError):
    pass


class QuotientNotHamiltonian(FactorGroupError):
    pass


class TrailNotHamiltonian(FactorGroupError):
    pass


@dataclass(frozen=True)
class HamiltonCertificate:
    kind: str  # "cycle" or "path"
    vertices: tuple[int, ...]
    graph_id: str = ""

    def __post_init__(self):
        if self.kind not in ("cycle", "path"):
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        pairs = list(zip(vs, vs[1:]))
        if self.kind == "cycle" and len(vs) > 2:
            pairs.append((vs[-1], vs[0]))
        return pairs


def verify_certificate(x: Graph, c: HamiltonCertificate) -> bool:
    vs = c.vertices
    n = x.vertex_count
    if len(vs) != n or sorted(vs) != list(range(n)):
        return False
    if c.kind == "cycle" and n < 3:
        return False
    return all(w in x.adjacency[v] for v, w in c.edges())


def is_path(x: Graph, vertices: Sequence[int]) -> bool:
    if len(set(vertices)) != len(vertices):
        return False
    if any(not 0 <= v < x.vertex_count for v in vertices):
        return False
    return all(x.has_edge(v, w) for v, w in zip(vertices, vertices[1:]))


def lift_path(x: Graph, q: QuotientMap, quotient_path: Sequence[int], start: int) -> list[int]:
    """Lift a walk of blocks to a walk in ``x`` starting at ``start``.

    At each step the smallest neighbor lying in the next block is taken.
    """
    if not quotient_path:
        raise LiftError("empty quotient path")
    if q.block_of[start] != quotient_path[0]:
        raise LiftError(f"start vertex {start} is not in block {quotient_path[0]}")
    path = [start]
    for block in quotient_path[1:]:
        cur = path[-1]
        options = [w for w in x.adjacency[cur] if q.block_of[w] == block]
        if not options:
            raise LiftError(
                f"vertex {cur} has no neighbor in block {block}; "
                "the partition is not the orbit map of a normal subgroup")
        path.append(min(options))
    return path


def apply_perm_to_path(g: Permutation, p: Sequence[int]) -> list[int]:
    return [g.images[v] for v in p]


def factor_group_cycle(x: Graph, h: PermGroup, p: int, lifted_path: Sequence[int]) -> HamiltonCertificate:
    """Assemble a Hamilton cycle from a path whose ends differ by a generator of ``h``.

    ``lifted_path`` is x_1..x_{n+1}.  Its image in X/h must be a Hamilton
    cycle of X/h, or the n = 2 back-and-forth walk when X/h is K2.  With
    gamma in h taking x_1 to x_{n+1} and P = x_1..x_n, the result is
    P, gamma(P), ..., gamma^(|h|-1)(P).
    """
    path = list(lifted_path)
    if len(path) < 3:
        raise QuotientNotHamiltonian("path is too short to close up")
    first, last = path[0], path[-1]
    if h.order == 1 or last not in orbit(h, first):
        raise EndpointNotInOrbit(f"endpoint {last} is not in the orbit of {first}")
    if last in orbit(power_subgroup(h, p), first):
        raise EndpointInPowerOrbit(f"endpoint {last} lies in the p-th power orbit of {first}")

    q = orbit_partition(h)
    quotient, _ = quotient_graph(x, q)
    blocks = q.project(path[:-1])
    n = len(blocks)
    degenerate = n == 2 and quotient.vertex_count == 2 and blocks[0] != blocks[1]
    hamiltonian = (n == quotient.vertex_count and n >= 3 and len(set(blocks)) == n
                   and all(quotient.has_edge(a, b) for a, b in zip(blocks, blocks[1:] + blocks[:1])))
    if not (degenerate or hamiltonian):
        raise QuotientNotHamiltonian("the path does not project onto a Hamilton cycle of the quotient")

    gamma = next(g for g in h.elements() if g.images[first] == last)
    trail: list[int] = []
    piece = path[:-1]
    for _ in range(h.order):
        trail.extend(piece)
        piece = apply_perm_to_path(gamma, piece)
    cert = HamiltonCertificate("cycle", tuple(trail))
    if not verify_certificate(x, cert):
        raise TrailNotHamiltonian("assembled trail is not a Hamilton cycle; "
                                  "the group does not act semiregularly by automorphisms")
    return cert
