"""Hamilton cycles through a prescribed edge of an abelian Cayley graph.

Chen and Quimpo showed that every non-loop edge of a connected Cayley graph
on an abelian group of order at least 3 lies on a Hamilton cycle.  The
construction here is a forced-edge backtracking search; the theorem
guarantees success, so an exhausted search means a bug and is raised as
``SearchExhausted``.
"""

from __future__ import annotations

from .graphcore import CayleySpec, Graph, GraphError, cayley_graph, components, is_connected
from .lifting import HamiltonCertificate, verify_certificate


class SearchExhausted(RuntimeError):
    pass


def _check_abelian_spec(spec: CayleySpec) -> Graph:
    if not spec.group.is_abelian():
        raise GraphError("group is not abelian")
    if spec.group.order < 3:
        raise GraphError("group order must be at least 3")
    graph, _ = cayley_graph(spec)
    if not is_connected(graph):
        raise GraphError("Cayley graph is disconnected")
    return graph


def _two_coloring(x: Graph) -> list[int] | None:
    color = [-1] * x.vertex_count
    for comp in components(x):
        color[comp[0]] = 0
        stack = [comp[0]]
        while stack:
            v = stack.pop()
            for w in x.adjacency[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def cycle_through_edge(x: Graph, u: int, v: int) -> list[int] | None:
    """Deterministic search for a Hamilton cycle starting u, v, ...

    Pruning rules, each of which only discards dead partial paths:

    * degree: an unvisited vertex needs two cycle neighbours among the
      unvisited vertices, the current end and u.  Fewer means no completion.
    * forcing: if an unvisited w has exactly two such candidates and one of
      them is the current end, the edge end-w must be on the cycle, and the
      end already has its other cycle edge, so w is the next step.  Two
      forced vertices at once is a dead end.
    * connectivity: the rest of the cycle is a path from the end through
      every unvisited vertex, so they must all be reachable from the end
      inside the unvisited set, and u needs an unvisited neighbour.
    * parity: in a bipartite graph the remaining path alternates colours,
      which fixes how many unvisited vertices of each colour there must be
      and the colour of the last one (it must be adjacent to u).
    """
    n = x.vertex_count
    if n < 3 or not x.has_edge(u, v):
        return None
    nbr = [0] * n
    for a in range(n):
        for b in x.adjacency[a]:
            nbr[a] |= 1 << b
    order = [sorted(x.adjacency[a]) for a in range(n)]
    color = _two_coloring(x)
    color_mask = 0
    if color is not None:
        for a in range(n):
            if color[a]:
                color_mask |= 1 << a
        if 2 * bin(color_mask).count("1") != n:
            return None
    start_bit = 1 << u
    path = [u, v]

    def feasible(cur: int, unvisited: int) -> tuple[bool, int]:
        if not unvisited:
            return bool(nbr[cur] & start_bit), -1
        if not nbr[u] & unvisited:
            return False, -1
        allowed = unvisited | start_bit | (1 << cur)
        forced = -1
        rest = unvisited
        while rest:
            low = rest & -rest
            w = low.bit_length() - 1
            rest ^= low
            usable = nbr[w] & allowed
            count = bin(usable).count("1")
            if count < 2:
                return False, -1
            if count == 2 and usable >> cur & 1:
                if forced != -1:
                    return False, -1
                forced = w
        reach = nbr[cur] & unvisited
        frontier = reach
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = nbr[low.bit_length() - 1] & unvisited & ~reach
            reach |= new
            frontier |= new
        if reach != unvisited:
            return False, -1
        if color is not None:
            m = bin(unvisited).count("1")
            opposite = color_mask if not color[cur] else ~color_mask
            if bin(unvisited & opposite).count("1") != (m + 1) // 2:
                return False, -1
            last_color = color[cur] if m % 2 == 0 else 1 - color[cur]
            if last_color == color[u]:
                return False, -1
        return True, forced

    def extend(unvisited: int) -> bool:
        cur = path[-1]
        ok, forced = feasible(cur, unvisited)
        if not ok:
            return False
        if not unvisited:
            return True
        candidates = [forced] if forced != -1 else [w for w in order[cur] if unvisited >> w & 1]
        for w in candidates:
            path.append(w)
            if extend(unvisited & ~(1 << w)):
                return True
            path.pop()
        return False

    full = (1 << n) - 1
    if extend(full & ~start_bit & ~(1 << v)):
        return path
    return None


def hamilton_cycle_through_edge(spec: CayleySpec, e: tuple[int, int]) -> HamiltonCertificate:
    """Hamilton cycle of Cay(G; S) containing the edge ``e`` (Cayley vertex indices)."""
    graph = _check_abelian_spec(spec)
    u, v = e
    if not graph.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge of the Cayley graph")
    found = cycle_through_edge(graph, u, v)
    if found is None:
        raise SearchExhausted(f"no Hamilton cycle through {u}-{v}; this contradicts Chen-Quimpo")
    cert = HamiltonCertificate("cycle", tuple(found))
    if not verify_certificate(graph, cert):
        raise SearchExhausted("search returned an invalid cycle")
    return cert


def hamilton_cycle_abelian(spec: CayleySpec) -> HamiltonCertificate:
    graph = _check_abelian_spec(spec)
    return hamilton_cycle_through_edge(spec, (0, min(graph.adjacency[0])))
