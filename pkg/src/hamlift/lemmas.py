"""Exhaustive checks of the group- and graph-theoretic facts the construction
relies on, evaluated on one concrete action at a time."""

from __future__ import annotations

from dataclasses import dataclass

from .graphcore import (
    CayleySpec,
    GroupAction,
    cayley_graph,
    g_minimal_reduce,
    induced_subgraph,
    is_connected,
    quotient_action,
)
from .permgroup import (
    PermGroup,
    commutator,
    conjugate,
    frattini_subgroup,
    is_normal,
    normal_core,
    normal_subgroups,
    orbit,
    orbit_partition,
    power_subgroup,
    product_subgroup,
    stabilizer,
)
from .pipeline import validate_hypotheses


@dataclass(frozen=True)
class LemmaCheck:
    lemma: str
    passed: bool
    detail: str = ""


def _orbit_stabilizer(a: GroupAction, stabs) -> LemmaCheck:
    g = a.group
    bad = [x for x in range(g.degree) if len(orbit(g, x)) * stabs[x].order != g.order]
    return LemmaCheck("orbit-stabilizer", not bad, f"failing points {bad}" if bad else f"{g.degree} points")


def _stab_conj(a: GroupAction, stabs) -> LemmaCheck:
    g = a.group
    bad = []
    for x in range(g.degree):
        for s in g.generators:
            if stabs[s.images[x]] != conjugate(stabs[x], s):
                bad.append((x, str(s)))
    return LemmaCheck("stab-conj", not bad, f"{len(bad)} failures" if bad else "G_gx = g G_x g^-1")


def _stab_norm(a: GroupAction, stabs, normals) -> LemmaCheck:
    g = a.group
    n = g.degree
    bad = []
    for h in normals:
        prods = [product_subgroup(h, stabs[x], g) for x in range(n)]
        some = any(is_normal(g, p) for p in prods)
        every = all(is_normal(g, p) for p in prods)
        equal = all(p == prods[0] for p in prods)
        if not some == every == equal:
            bad.append(h.order)
    return LemmaCheck("stab-norm", not bad,
                      f"disagreement for normal subgroups of orders {bad}" if bad
                      else f"{len(normals)} normal subgroups")


def _normal_core(a: GroupAction, stabs) -> LemmaCheck:
    bad = [x for x in range(a.group.degree) if normal_core(a.group, stabs[x]).order != 1]
    return LemmaCheck("no-normal-in-stabilizer", not bad, f"nontrivial core at {bad}" if bad else "all cores trivial")


def _abelianization(g: PermGroup, derived: PermGroup) -> LemmaCheck:
    elems = g.elements()
    ok = all(commutator(x, y) in derived for x in elems for y in elems)
    return LemmaCheck("abelian-quotient", ok, "all commutators in G'" if ok else "commutator outside G'")


def _power_in_frattini(g: PermGroup, chain, p, frattini) -> LemmaCheck:
    if p is None:
        return LemmaCheck("hp-in-frattini", True, "G' trivial")
    bad = []
    for h in chain:
        if not is_normal(g, h) or not power_subgroup(h, p).issubgroup(frattini):
            bad.append(h.order)
    return LemmaCheck("hp-in-frattini", not bad,
                      f"fails for |H| in {bad}" if bad else f"{len(chain)} subgroups, |Phi(G)|={frattini.order}")


def _no_loops(reduced: GroupAction, inside_frattini) -> LemmaCheck:
    x = reduced.graph
    bad = []
    for h in inside_frattini:
        q = orbit_partition(h)
        if any(induced_subgraph(x, b)[0].edge_count for b in q.blocks):
            bad.append(h.order)
    return LemmaCheck("frattini-orbits-edgeless", not bad,
                      f"edges inside orbits for |H| in {bad}" if bad else f"{len(inside_frattini)} subgroups")


def _frattini_quotient_minimal(reduced: GroupAction, inside_frattini) -> LemmaCheck:
    bad = []
    for h in inside_frattini:
        qa = quotient_action(reduced, orbit_partition(h))
        if qa.graph.vertex_count > 1 and g_minimal_reduce(qa)[1]:
            bad.append(h.order)
    return LemmaCheck("frattini-quotient-minimal", not bad,
                      f"quotient not G-minimal for |H| in {bad}" if bad else f"{len(inside_frattini)} quotients")


def _orbit_isomorphism(a: GroupAction, chain) -> LemmaCheck:
    x = a.graph
    g = a.group
    for h in chain:
        q = orbit_partition(h)
        base = q.blocks[0]
        base_edges = {frozenset(e) for e in _edges_within(x, base)}
        for block in q.blocks[1:]:
            mover = next(e for e in g.elements() if e.images[base[0]] == block[0])
            if sorted(mover.images[v] for v in base) != list(block):
                return LemmaCheck("orbit-subgraphs-isomorphic", False, "translate does not map orbit to orbit")
            moved = {frozenset(mover.images[v] for v in e) for e in base_edges}
            if moved != {frozenset(e) for e in _edges_within(x, block)}:
                return LemmaCheck("orbit-subgraphs-isomorphic", False, f"|H|={h.order}")
    return LemmaCheck("orbit-subgraphs-isomorphic", True, f"{len(chain)} subgroups")


def _edges_within(x, block):
    members = set(block)
    return [(u, v) for u in block for v in x.adjacency[u] if v in members and u < v]


def _connected_and_odd(reduced: GroupAction, derived: PermGroup, p) -> LemmaCheck:
    q = orbit_partition(derived)
    sub, _ = induced_subgraph(reduced.graph, q.blocks[0])
    if sub.edge_count == 0:
        return LemmaCheck("connected-and-odd", True, "orbit subgraphs empty")
    ok = is_connected(sub) and p is not None and p % 2 == 1
    return LemmaCheck("connected-and-odd", ok, f"orbit size {sub.vertex_count}, p={p}")


def _cayley_connectivity(spec: CayleySpec) -> LemmaCheck:
    graph, _ = cayley_graph(spec)
    generated = PermGroup(spec.group.degree, spec.connection_set).order == spec.group.order
    ok = is_connected(graph) == generated
    return LemmaCheck("cayley-connectivity", ok, f"connected={is_connected(graph)} generates={generated}")


def verify_lemma_suite(a: GroupAction, cayley: CayleySpec | None = None) -> list[LemmaCheck]:
    """Run every checkable lemma-level invariant on one action."""
    ctx = validate_hypotheses(a)
    g = a.group
    stabs = {x: stabilizer(g, x) for x in range(g.degree)}
    normals = normal_subgroups(g)
    chain = ctx.chain()
    frattini = frattini_subgroup(g)
    reduced_graph, _ = g_minimal_reduce(a)
    reduced = GroupAction(g, reduced_graph, check=False)
    inside = [h for h in normals if h.issubgroup(frattini)]

    checks = [
        _orbit_stabilizer(a, stabs),
        _stab_conj(a, stabs),
        _stab_norm(a, stabs, normals),
        _normal_core(a, stabs),
        _abelianization(g, ctx.derived),
        _power_in_frattini(g, chain, ctx.p, frattini),
        _no_loops(reduced, inside),
        _frattini_quotient_minimal(reduced, inside),
        _orbit_isomorphism(a, chain),
        _connected_and_odd(reduced, ctx.derived, ctx.p),
    ]
    if cayley is not None:
        checks.append(_cayley_connectivity(cayley))
    return checks
