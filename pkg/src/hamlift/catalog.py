"""Built-in instances: small groups with sampled connection sets and a few
non-regular actions, plus the Petersen graph under F20."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from . import groups
from .graphcore import CayleySpec, Graph, GroupAction, cayley_graph, petersen_graph
from .permgroup import Permutation, PermGroup

HAMILTONIAN = "hamiltonian"
PETERSEN = "petersen"
VIOLATION = "violation"
TINY = "tiny"  # fewer than three vertices; only the path corollary applies


@dataclass
class Instance:
    name: str
    description: str
    expected: str
    _build: Callable[[], tuple[GroupAction, CayleySpec | None]] = field(repr=False)

    @cached_property
    def _built(self) -> tuple[GroupAction, CayleySpec | None]:
        return self._build()

    @property
    def action(self) -> GroupAction:
        return self._built[0]

    @property
    def cayley(self) -> CayleySpec | None:
        return self._built[1]

    @property
    def graph(self) -> Graph:
        return self.action.graph

    @property
    def group(self) -> PermGroup:
        return self.action.group


def generates(group: PermGroup, subset) -> bool:
    return PermGroup(group.degree, list(subset)).order == group.order


def sample_connection_sets(group: PermGroup, count: int, seed: int = 0) -> list[tuple[Permutation, ...]]:
    """Deterministic minimal symmetric generating sets.

    Random inverse-closed pairs are added until they generate, then pairs are
    dropped greedily while generation survives, so no proper symmetric subset
    generates the group.
    """
    if group.order < 2:
        return []
    rng = random.Random(seed)
    pool = [e for e in group.elements() if not e.is_identity()]
    out: list[tuple[Permutation, ...]] = []
    attempts = 0
    while len(out) < count and attempts < 20 * count:
        attempts += 1
        rng.shuffle(pool)
        chosen: list[frozenset[Permutation]] = []
        covered: set[Permutation] = set()
        for e in pool:
            if e in covered:
                continue
            pair = frozenset((e, e.inverse()))
            chosen.append(pair)
            covered |= pair
            if generates(group, covered):
                break
        for pair in list(chosen):
            rest = [q for q in chosen if q is not pair]
            if rest and generates(group, set().union(*rest)):
                chosen = rest
        conn = tuple(sorted(set().union(*chosen)))
        if conn not in out:
            out.append(conn)
    return out


def _cayley(group_fn: Callable[[], PermGroup], conn_fn) -> Callable[[], tuple[GroupAction, CayleySpec]]:
    def build():
        group = group_fn()
        spec = CayleySpec(group, tuple(conn_fn(group)))
        _, action = cayley_graph(spec)
        return action, spec
    return build


def _sampled(group_fn: Callable[[], PermGroup], index: int, seed: int = 0):
    return _cayley(group_fn, lambda g: sample_connection_sets(g, index + 1, seed)[index])


def _powers(*exps: int):
    """Connection set {r^e} in a cyclic group given by one generator r."""
    return lambda g: [g.generators[0] ** e for e in exps]


def _dihedral_on_circulant(n: int, jumps: tuple[int, ...]) -> Callable[[], tuple[GroupAction, None]]:
    def build():
        group = groups.dihedral(n)
        graph = Graph.from_edges(n, {tuple(sorted((i, (i + j) % n))) for i in range(n) for j in jumps})
        return GroupAction(group, graph), None
    return build


def _multiplier_on_circulant(n: int, m: int, jumps: tuple[int, ...]) -> Callable[[], tuple[GroupAction, None]]:
    """Z_n extended by i -> m*i, acting on circ(n; jumps)."""
    def build():
        rot = Permutation(tuple((i + 1) % n for i in range(n)))
        mult = Permutation(tuple((i * m) % n for i in range(n)))
        graph = Graph.from_edges(n, {tuple(sorted((i, (i + j) % n))) for i in range(n) for j in jumps})
        return GroupAction(PermGroup(n, [rot, mult]), graph), None
    return build


def _d6_times_z3_on_torus() -> tuple[GroupAction, None]:
    # vertex (i, j) of K3 x K3 is 3*i + j; D6 acts on i, Z3 rotates j
    def perm(f):
        return Permutation(tuple(3 * a + b for a, b in (f(i, j) for i in range(3) for j in range(3))))

    gens = [perm(lambda i, j: ((i + 1) % 3, j)),
            perm(lambda i, j: ((-i) % 3, j)),
            perm(lambda i, j: (i, (j + 1) % 3))]
    edges = [(3 * i + j, 3 * i2 + j2) for i, j, i2, j2 in itertools.product(range(3), repeat=4)
             if (i == i2) != (j == j2) and 3 * i + j < 3 * i2 + j2]
    return GroupAction(PermGroup(9, gens), Graph.from_edges(9, edges)), None


def _affine_on_z3xz9() -> tuple[GroupAction, None]:
    # translations of Z3 x Z9 together with (i, j) -> (i, 3i - j); vertex (i, j) is 9*i + j
    def perm(f):
        return Permutation(tuple(9 * (a % 3) + b % 9 for a, b in (f(i, j) for i in range(3) for j in range(9))))

    gens = [perm(lambda i, j: (i + 1, j)), perm(lambda i, j: (i, j + 1)), perm(lambda i, j: (i, 3 * i - j))]
    jumps = [(0, 1), (0, 8), (1, 0), (1, 3), (2, 0), (2, 6)]
    edges = {tuple(sorted((9 * i + j, 9 * ((i + di) % 3) + (j + dj) % 9)))
             for i in range(3) for j in range(9) for di, dj in jumps}
    return GroupAction(PermGroup(27, gens), Graph.from_edges(27, edges)), None


def _petersen_f20() -> tuple[GroupAction, None]:
    graph, _ = petersen_graph()
    group, _ = groups.affine_f20_on_pairs()
    return GroupAction(group, graph), None


def _prism_s3(g: PermGroup):
    return [Permutation.from_cycles(3, (0, 1)), Permutation.from_cycles(3, (0, 1, 2)),
            Permutation.from_cycles(3, (0, 2, 1))]


def _q8_ij(g: PermGroup):
    u = groups.quaternion_units()
    return [u["i"], u["-i"], u["j"], u["-j"]]


def _d6xz3():
    return groups.direct_product(groups.dihedral(3), groups.cyclic(3))


def _build_catalog() -> dict[str, Instance]:
    items = [
        Instance("z5-cycle", "Cay(Z5, {+-1}), the 5-cycle", HAMILTONIAN, _cayley(lambda: groups.cyclic(5), _powers(1, 4))),
        Instance("z5-complete", "Cay(Z5, {+-1, +-2}) = K5", HAMILTONIAN, _cayley(lambda: groups.cyclic(5), _powers(1, 2, 3, 4))),
        Instance("z6-chord", "Cay(Z6, {+-1, 3})", HAMILTONIAN, _cayley(lambda: groups.cyclic(6), _powers(1, 3, 5))),
        Instance("z9-cycle", "Cay(Z9, {+-1}), the 9-cycle", HAMILTONIAN, _cayley(lambda: groups.cyclic(9), _powers(1, 8))),
        Instance("z8-s0", "Z8, sampled connection set", HAMILTONIAN, _sampled(lambda: groups.cyclic(8), 0)),
        Instance("z12-s0", "Z12, sampled connection set", HAMILTONIAN, _sampled(lambda: groups.cyclic(12), 0)),
        Instance("z2xz2-s0", "Z2 x Z2, sampled", HAMILTONIAN, _sampled(lambda: groups.abelian(2, 2), 0)),
        Instance("z2xz4-s0", "Z2 x Z4, sampled", HAMILTONIAN, _sampled(lambda: groups.abelian(2, 4), 0)),
        Instance("z3xz3-s0", "Z3 x Z3, sampled", HAMILTONIAN, _sampled(lambda: groups.abelian(3, 3), 0)),
        Instance("z2xz2xz2-s0", "Z2^3, sampled", HAMILTONIAN, _sampled(lambda: groups.abelian(2, 2, 2), 0)),
        Instance("z2xz6-s0", "Z2 x Z6, sampled", HAMILTONIAN, _sampled(lambda: groups.abelian(2, 6), 0)),
        Instance("z4xz4-s0", "Z4 x Z4, sampled", HAMILTONIAN, _sampled(lambda: groups.abelian(4, 4), 0)),
        Instance("z3xz9-s0", "Z3 x Z9, sampled", HAMILTONIAN, _sampled(lambda: groups.abelian(3, 9), 0)),
        Instance("z2^5-s0", "Z2^5, sampled", HAMILTONIAN, _sampled(lambda: groups.abelian(2, 2, 2, 2, 2), 0)),
        Instance("d6-prism", "Cay(S3, {(0 1), (0 1 2), (0 2 1)}), the triangular prism", HAMILTONIAN,
                 _cayley(lambda: groups.dihedral(3), _prism_s3)),
        Instance("d6-s0", "D6 = S3, sampled", HAMILTONIAN, _sampled(lambda: groups.dihedral(3), 0)),
        Instance("d8-s0", "D8, sampled", HAMILTONIAN, _sampled(lambda: groups.dihedral(4), 0)),
        Instance("d8-s1", "D8, second sample", HAMILTONIAN, _sampled(lambda: groups.dihedral(4), 1)),
        Instance("d10-s0", "D10, sampled", HAMILTONIAN, _sampled(lambda: groups.dihedral(5), 0)),
        Instance("d18-s0", "D18, sampled", HAMILTONIAN, _sampled(lambda: groups.dihedral(9), 0)),
        Instance("d16-s0", "D16, sampled", HAMILTONIAN, _sampled(lambda: groups.dihedral(8), 0)),
        Instance("q8-ij", "Cay(Q8, {+-i, +-j})", HAMILTONIAN, _cayley(groups.quaternion, _q8_ij)),
        Instance("q16-s0", "generalized quaternion Q16, sampled", HAMILTONIAN, _sampled(lambda: groups.dicyclic(4), 0)),
        Instance("dic12-s0", "dicyclic group of order 12, sampled", HAMILTONIAN, _sampled(lambda: groups.dicyclic(3), 0)),
        Instance("heis3-s0", "Heisenberg group mod 3 (order 27), sampled", HAMILTONIAN, _sampled(lambda: groups.heisenberg(3), 0)),
        Instance("d6xz3-s0", "D6 x Z3, sampled", HAMILTONIAN, _sampled(_d6xz3, 0)),
        Instance("d8-on-c4", "D8 acting on the 4-cycle", HAMILTONIAN, _dihedral_on_circulant(4, (1,))),
        Instance("d10-on-c5", "D10 acting on the 5-cycle", HAMILTONIAN, _dihedral_on_circulant(5, (1,))),
        Instance("d16-on-c8", "D16 acting on the 8-cycle", HAMILTONIAN, _dihedral_on_circulant(8, (1,))),
        Instance("d16-on-circ8", "D16 acting on circ(8; 1, 3)", HAMILTONIAN, _dihedral_on_circulant(8, (1, 3))),
        Instance("d18-on-c9", "D18 acting on the 9-cycle", HAMILTONIAN, _dihedral_on_circulant(9, (1,))),
        Instance("d32-on-c16", "D32 acting on the 16-cycle", HAMILTONIAN, _dihedral_on_circulant(16, (1,))),
        Instance("z8x5-on-circ8", "Z8 extended by i -> 5i acting on circ(8; 1, 3)", HAMILTONIAN,
                 _multiplier_on_circulant(8, 5, (1, 3))),
        Instance("d6xz3-on-k3xk3", "D6 x Z3 acting on K3 x K3", HAMILTONIAN, _d6_times_z3_on_torus),
        Instance("z3xz9-twist", "Z3 x Z9 extended by (i, j) -> (i, 3i - j) on a 6-valent Cayley graph",
                 HAMILTONIAN, _affine_on_z3xz9),
        Instance("petersen-f20", "Petersen graph with the F20 action", PETERSEN, _petersen_f20),
        Instance("k2-z2", "K2 with Z2", TINY, _cayley(lambda: groups.cyclic(2), _powers(1))),
        Instance("s4-regular", "Cay(S4, {(0 1), (0 1 2 3)^+-1}); S4' = A4 is not cyclic", VIOLATION,
                 _cayley(lambda: groups.symmetric(4),
                         lambda g: [g.generators[0], g.generators[1], g.generators[1].inverse()])),
    ]
    return {inst.name: inst for inst in sorted(items, key=lambda i: i.name)}


_CATALOG: dict[str, Instance] | None = None


def catalog() -> dict[str, Instance]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    return _CATALOG


def get(name: str) -> Instance:
    try:
        return catalog()[name]
    except KeyError:
        raise KeyError(f"unknown catalog instance {name!r}") from None


def abelian_types(max_order: int, min_order: int = 3) -> list[tuple[int, ...]]:
    """Invariant-factor decompositions n1 | n2 | ... of every order in range."""
    out = []

    def extend(prefix: tuple[int, ...], remaining: int):
        if remaining == 1:
            if prefix:
                out.append(prefix)
            return
        last = prefix[-1] if prefix else 1
        for d in range(2, remaining + 1):
            if remaining % d == 0 and d % last == 0:
                extend(prefix + (d,), remaining // d)

    for n in range(min_order, max_order + 1):
        extend((), n)
    # n1 | n2 | ... already; order by group order then factors
    return sorted(set(out), key=lambda t: (_prod(t), t))


def _prod(t) -> int:
    r = 1
    for v in t:
        r *= v
    return r


def abelian_sweep(max_order: int = 32, samples: int = 2, seed: int = 0) -> list[tuple[str, CayleySpec]]:
    """Connected Cayley graphs on every abelian group of order 3..max_order."""
    out = []
    for factors in abelian_types(max_order):
        group = groups.abelian(*factors)
        name = "z" + "xz".join(map(str, factors))
        for i, conn in enumerate(sample_connection_sets(group, samples, seed)):
            out.append((f"{name}-s{i}", CayleySpec(group, conn)))
    return out
