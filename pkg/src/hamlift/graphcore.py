"""Simple undirected graphs, Cayley graphs, quotients and group actions."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .partition import QuotientMap
from .permgroup import Permutation, PermGroup, PermGroupError, orbit, stabilizer

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adjacency) != self.vertex_count:
            raise GraphError("adjacency length differs from vertex count")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise GraphError(f"self-loop at {v}")
            for w in nbrs:
                if not 0 <= w < self.vertex_count or v not in self.adjacency[w]:
                    raise GraphError(f"adjacency not symmetric at {v}-{w}")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge {u}-{v} out of range")
            adj[u].add(v)
            adj[v].add(u)
        return cls(vertex_count, tuple(frozenset(a) for a in adj))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n > 2 else
                              ([(0, 1)] if n == 2 else []))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.vertex_count and v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.vertex_count) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def without_edges(self, removed: Iterable[Edge]) -> Graph:
        gone = {_edge(*e) for e in removed}
        return Graph.from_edges(self.vertex_count, [e for e in self.edges() if e not in gone])


@dataclass(frozen=True)
class CayleySpec:
    group: PermGroup
    connection_set: tuple[Permutation, ...]

    def __post_init__(self):
        conn = tuple(sorted(set(self.connection_set)))
        object.__setattr__(self, "connection_set", conn)
        members = self.group.element_set()
        for s in conn:
            if s not in members:
                raise GraphError(f"connection element {s} is not in the group")
            if s.is_identity():
                raise GraphError("identity in connection set")
            if s.inverse() not in conn:
                raise GraphError(f"connection set is not symmetric: missing inverse of {s}")


@dataclass(frozen=True)
class GroupAction:
    """A permutation group acting on a graph by automorphisms."""

    group: PermGroup
    graph: Graph
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.group.degree != self.graph.vertex_count:
            raise GraphError("group degree differs from vertex count")
        if self.check:
            for g in self.group.generators:
                if not is_automorphism(self.graph, g):
                    raise GraphError(f"generator {g} is not an automorphism")


def is_automorphism(x: Graph, g: Permutation) -> bool:
    if g.degree != x.vertex_count:
        return False
    img = g.images
    return all(img[v] in x.adjacency[img[u]] for u, v in x.edges())


def cayley_graph(spec: CayleySpec) -> tuple[Graph, GroupAction]:
    """Cay(G; S) with g ~ gs; the returned action is left multiplication."""
    elems = spec.group.elements()
    index = {e: i for i, e in enumerate(elems)}
    edges = {_edge(i, index[g * s]) for i, g in enumerate(elems) for s in spec.connection_set}
    graph = Graph.from_edges(len(elems), edges)
    left = [Permutation._raw(tuple(index[h * g] for g in elems)) for h in spec.group.generators]
    action = GroupAction(PermGroup(len(elems), left), graph)
    return graph, action


def components(x: Graph) -> list[list[int]]:
    seen = [False] * x.vertex_count
    out = []
    for s in range(x.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in x.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(x: Graph) -> bool:
    return len(components(x)) == 1


def quotient_graph(x: Graph, q: QuotientMap) -> tuple[Graph, frozenset[int]]:
    """Return X/q and the set of blocks that contain an internal edge.

    The quotient is kept simple; internal edges are reported through the
    loop set instead of as self-loops.
    """
    if q.vertex_count != x.vertex_count:
        raise GraphError("partition does not cover the graph's vertices")
    edges = set()
    loops = set()
    for u, v in x.edges():
        a, b = q.block_of[u], q.block_of[v]
        if a == b:
            loops.add(a)
        else:
            edges.add(_edge(a, b))
    return Graph.from_edges(q.block_count, edges), frozenset(loops)


def induced_subgraph(x: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``s`` relabeled by ascending id; also returns the new-to-old map."""
    verts = tuple(sorted(set(s)))
    if not verts:
        raise GraphError("empty vertex set")
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[w]) for u in verts for w in x.adjacency[u] if w in pos and u < w]
    return Graph.from_edges(len(verts), edges), verts


def edge_orbits(a: GroupAction) -> list[list[Edge]]:
    """Edge orbits under the group, sorted by their smallest edge."""
    edges = a.graph.edges()
    seen: set[Edge] = set()
    out = []
    for e in edges:
        if e in seen:
            continue
        seen.add(e)
        cls = [e]
        stack = [e]
        while stack:
            u, v = stack.pop()
            for g in a.group.generators:
                f = _edge(g.images[u], g.images[v])
                if f not in seen:
                    seen.add(f)
                    cls.append(f)
                    stack.append(f)
        out.append(sorted(cls))
    return out


def g_minimal_reduce(a: GroupAction) -> tuple[Graph, list[list[Edge]]]:
    """Greedily drop edge orbits whose removal keeps the graph connected.

    Orbits are tried once, smallest edge first.  A kept orbit stays a cut
    because later removals only shrink the graph, so a single pass gives a
    minimal invariant connected spanning subgraph.
    """
    if not is_connected(a.graph):
        raise GraphError("cannot reduce a disconnected graph")
    current = a.graph
    removed = []
    for cls in edge_orbits(a):
        trial = current.without_edges(cls)
        if is_connected(trial):
            current = trial
            removed.append(cls)
    return current, removed


def girth(x: Graph) -> float:
    best = float("inf")
    for s in range(x.vertex_count):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in x.adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def is_petersen(x: Graph) -> bool:
    # the Petersen graph is the unique cubic graph of girth 5 on 10 vertices
    return (x.vertex_count == 10
            and all(x.degree(v) == 3 for v in range(10))
            and girth(x) == 5)


def petersen_graph() -> tuple[Graph, list[frozenset[int]]]:
    """Kneser graph K(5,2); vertex i is the i-th 2-subset in lexicographic order."""
    subsets = [frozenset((i, j)) for i in range(5) for j in range(i + 1, 5)]
    edges = [(i, j) for i in range(10) for j in range(i + 1, 10) if not subsets[i] & subsets[j]]
    return Graph.from_edges(10, edges), subsets


def is_transitive(a: GroupAction) -> bool:
    return len(orbit(a.group, 0)) == a.graph.vertex_count


def sabidussi_labeling(a: GroupAction, x0: int = 0) -> CayleySpec | None:
    """Cayley presentation of a regular action, or None if the stabilizer is nontrivial.

    Vertex g(x0) is labeled g and S = {s : s(x0) ~ x0}.  The labeling is
    checked to be an isomorphism onto Cay(G; S).
    """
    if not is_transitive(a):
        raise GraphError("action is not transitive")
    if stabilizer(a.group, x0).order != 1:
        return None
    x = a.graph
    elems = a.group.elements()
    conn = [s for s in elems if x.has_edge(x0, s.images[x0])]
    spec = CayleySpec(a.group, tuple(conn))
    cay, _ = cayley_graph(spec)
    label = [g.images[x0] for g in elems]
    if cay.edge_count != x.edge_count or any(not x.has_edge(label[u], label[v]) for u, v in cay.edges()):
        raise GraphError("Sabidussi labeling is not an isomorphism")
    return spec


def cayley_vertex_map(spec: CayleySpec, x0: int = 0) -> list[int]:
    """For a spec from ``sabidussi_labeling``: Cayley vertex i -> original vertex."""
    return [g.images[x0] for g in spec.group.elements()]


def quotient_action(a: GroupAction, q: QuotientMap) -> GroupAction:
    """Induced action on X/q; ``q`` must be a block system for the group."""
    quotient, _ = quotient_graph(a.graph, q)
    gens = []
    for g in a.group.generators:
        images = []
        for block in q.blocks:
            targets = {q.block_of[g.images[v]] for v in block}
            if len(targets) != 1:
                raise GraphError("partition is not a block system for the group")
            images.append(targets.pop())
        gens.append(Permutation(tuple(images)))
    try:
        return GroupAction(PermGroup(q.block_count, gens), quotient)
    except PermGroupError as exc:
        raise GraphError(str(exc)) from exc


def to_dot(x: Graph, name: str = "X") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(x.vertex_count) if not x.adjacency[v]]
    lines += [f"  {u} -- {v};" for u, v in x.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
