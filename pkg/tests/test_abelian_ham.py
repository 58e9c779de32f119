import networkx as nx
import pytest

from hamlift import groups
from hamlift.abelian_ham import cycle_through_edge, hamilton_cycle_abelian, hamilton_cycle_through_edge
from hamlift.graphcore import CayleySpec, Graph, GraphError, cayley_graph
from hamlift.lifting import verify_certificate


def z_spec(n, *powers):
    g = groups.cyclic(n)
    r = g.generators[0]
    return CayleySpec(g, tuple(r ** k for k in powers))


def uses_edge(vertices, u, v):
    n = len(vertices)
    return any({vertices[i], vertices[(i + 1) % n]} == {u, v} for i in range(n))


def test_c4_unique_cycle():
    cert = hamilton_cycle_through_edge(z_spec(4, 1, 3), (0, 1))
    assert cert.vertices == (0, 1, 2, 3)


def test_klein_four():
    g = groups.abelian(2, 2)
    spec = CayleySpec(g, g.generators)
    x, _ = cayley_graph(spec)
    assert nx.is_isomorphic(nx.Graph(x.edges()), nx.cycle_graph(4))
    for u, v in x.edges():
        cert = hamilton_cycle_through_edge(spec, (u, v))
        assert len(cert.vertices) == 4 and uses_edge(cert.vertices, u, v)


def test_z6_chord():
    spec = z_spec(6, 1, 3, 5)
    x, _ = cayley_graph(spec)
    cert = hamilton_cycle_through_edge(spec, (0, 3))
    assert cert.vertices[:2] == (0, 3)
    assert verify_certificate(x, cert)


def test_c5():
    assert hamilton_cycle_abelian(z_spec(5, 1, 4)).vertices == (0, 1, 2, 3, 4)


def test_k5_deterministic():
    spec = z_spec(5, 1, 2, 3, 4)
    a = hamilton_cycle_abelian(spec)
    assert a == hamilton_cycle_abelian(spec)
    assert verify_certificate(cayley_graph(spec)[0], a)


def test_order_two_rejected():
    with pytest.raises(GraphError):
        hamilton_cycle_abelian(z_spec(2, 1))


def test_nonabelian_rejected():
    s3 = groups.dihedral(3)
    with pytest.raises(GraphError):
        hamilton_cycle_abelian(CayleySpec(s3, (s3.generators[1], s3.generators[0], s3.generators[0].inverse())))


def test_disconnected_rejected():
    with pytest.raises(GraphError):
        hamilton_cycle_abelian(z_spec(6, 2, 4))


def test_not_an_edge():
    with pytest.raises(GraphError):
        hamilton_cycle_through_edge(z_spec(6, 1, 5), (0, 3))


def test_every_edge_of_small_tori():
    # Z3 x Z5 and Z4 x Z4 with standard generators; every edge lies on a cycle
    for factors in [(3, 5), (4, 4), (2, 2, 3)]:
        g = groups.abelian(*factors)
        conn = set()
        for s in g.generators:
            conn |= {s, s.inverse()}
        spec = CayleySpec(g, tuple(conn))
        x, _ = cayley_graph(spec)
        for u, v in x.edges():
            cert = hamilton_cycle_through_edge(spec, (v, u))
            assert verify_certificate(x, cert) and cert.vertices[:2] == (v, u)


def test_raw_search_reports_absence():
    # the Petersen graph has no Hamilton cycle through any edge
    pet = nx.petersen_graph()
    x = Graph.from_edges(10, pet.edges())
    assert cycle_through_edge(x, 0, 1) is None


def test_raw_search_bipartite_imbalance():
    # K_{2,3} has no Hamilton cycle
    x = Graph.from_edges(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    assert cycle_through_edge(x, 0, 2) is None
