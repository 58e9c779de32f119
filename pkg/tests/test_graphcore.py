import networkx as nx
import pytest

from hamlift import catalog as cat
from hamlift import groups
from hamlift.graphcore import (
    CayleySpec,
    Graph,
    GraphError,
    GroupAction,
    cayley_graph,
    cayley_vertex_map,
    components,
    edge_orbits,
    g_minimal_reduce,
    girth,
    induced_subgraph,
    is_automorphism,
    is_connected,
    is_petersen,
    is_transitive,
    petersen_graph,
    quotient_action,
    quotient_graph,
    sabidussi_labeling,
    to_dot,
)
from hamlift.partition import QuotientMap
from hamlift.permgroup import PermGroup, commutator_subgroup, orbit_partition

from conftest import cyc


def to_nx(x: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(x.vertex_count))
    g.add_edges_from(x.edges())
    return g


def z_spec(n, *powers):
    g = groups.cyclic(n)
    r = g.generators[0]
    return CayleySpec(g, tuple(r ** k for k in powers))


def prism_spec():
    s3 = PermGroup(3, [cyc(3, (0, 1)), cyc(3, (0, 1, 2))])
    return CayleySpec(s3, (cyc(3, (0, 1)), cyc(3, (0, 1, 2)), cyc(3, (0, 2, 1))))


def prism(n):
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


class TestGraph:
    def test_rejects_loop(self):
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_asymmetric(self):
        with pytest.raises(GraphError):
            Graph(2, (frozenset({1}), frozenset()))

    def test_multi_edges_collapse(self):
        assert Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)]).edge_count == 1

    def test_basic_queries(self):
        c = Graph.cycle(5)
        assert c.neighbors(0) == [1, 4]
        assert c.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        assert Graph.complete(5).edge_count == 10


class TestCayley:
    def test_z5_cycle(self):
        x, _ = cayley_graph(z_spec(5, 1, 4))
        assert nx.is_isomorphic(to_nx(x), nx.cycle_graph(5))

    def test_z5_complete(self):
        x, _ = cayley_graph(z_spec(5, 1, 2, 3, 4))
        assert x.edge_count == 10

    def test_sym3_prism(self):
        x, a = cayley_graph(prism_spec())
        assert x.vertex_count == 6 and all(x.degree(v) == 3 for v in range(6))
        assert is_connected(x)
        assert nx.is_isomorphic(to_nx(x), to_nx(prism(3)))
        assert is_transitive(a)

    def test_spec_validation(self):
        g = groups.cyclic(5)
        r = g.generators[0]
        with pytest.raises(GraphError):
            CayleySpec(g, (r,))
        with pytest.raises(GraphError):
            CayleySpec(g, (g.identity,))
        with pytest.raises(GraphError):
            CayleySpec(g, (cyc(5, (0, 1)), cyc(5, (0, 1))))

    def test_left_action_is_automorphism(self):
        x, a = cayley_graph(prism_spec())
        assert all(is_automorphism(x, g) for g in a.group.elements())

    def test_connectivity_iff_generating(self):
        for name, inst in cat.catalog().items():
            if inst.cayley is None:
                continue
            spec = inst.cayley
            gen = PermGroup(spec.group.degree, spec.connection_set).order == spec.group.order
            assert is_connected(cayley_graph(spec)[0]) == gen, name
        # a non-generating set gives a disconnected graph
        x, _ = cayley_graph(z_spec(6, 2, 4))
        assert not is_connected(x) and len(components(x)) == 2


class TestConnectivity:
    def test_cycle(self):
        assert is_connected(Graph.cycle(5))

    def test_two_edges(self):
        x = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert not is_connected(x)
        assert components(x) == [[0, 1], [2, 3]]


class TestQuotient:
    def test_nine_cycle_to_triangle(self):
        q = QuotientMap.from_blocks(9, [(0, 3, 6), (1, 4, 7), (2, 5, 8)])
        quot, loops = quotient_graph(Graph.cycle(9), q)
        assert quot.edges() == [(0, 1), (0, 2), (1, 2)]
        assert not loops

    def test_singletons(self):
        x = petersen_graph()[0]
        quot, loops = quotient_graph(x, QuotientMap.singletons(10))
        assert quot == x and not loops

    def test_one_block(self):
        q = QuotientMap.from_blocks(4, [(0, 1, 2, 3)])
        quot, loops = quotient_graph(Graph.cycle(4), q)
        assert quot.vertex_count == 1 and loops == {0}
        _, loops = quotient_graph(Graph.from_edges(4, []), q)
        assert not loops

    def test_partition_size_mismatch(self):
        with pytest.raises(GraphError):
            quotient_graph(Graph.cycle(4), QuotientMap.singletons(3))

    def test_quotient_action(self):
        inst = cat.get("d18-on-c9")
        h = PermGroup(9, [cyc(9, (0, 3, 6), (1, 4, 7), (2, 5, 8))])
        qa = quotient_action(inst.action, orbit_partition(h))
        assert qa.graph.edges() == [(0, 1), (0, 2), (1, 2)]
        assert is_transitive(qa)

    def test_quotient_action_needs_blocks(self):
        inst = cat.get("d10-on-c5")
        with pytest.raises(GraphError):
            quotient_action(inst.action, QuotientMap.from_blocks(5, [(0, 1), (2, 3, 4)]))


class TestInduced:
    def test_all_vertices(self):
        x = prism(4)
        assert induced_subgraph(x, range(8))[0] == x

    def test_k5_triangle(self):
        sub, verts = induced_subgraph(Graph.complete(5), [4, 1, 2])
        assert verts == (1, 2, 4) and sub.edge_count == 3

    def test_petersen_commutator_orbits(self):
        inst = cat.get("petersen-f20")
        q = orbit_partition(commutator_subgroup(inst.group))
        assert q.block_count == 2
        kinds = sorted(induced_subgraph(inst.graph, b)[0].edge_count for b in q.blocks)
        # both orbits of the order-5 subgroup induce 5-cycles in this model
        assert kinds == [5, 5]
        for b in q.blocks:
            sub, _ = induced_subgraph(inst.graph, b)
            assert nx.is_isomorphic(to_nx(sub), nx.cycle_graph(5))


class TestEdgeOrbits:
    def test_k5_under_z5(self):
        _, a = cayley_graph(z_spec(5, 1, 2, 3, 4))
        orbits = edge_orbits(a)
        assert len(orbits) == 2 and sorted(map(len, orbits)) == [5, 5]

    def test_cycle(self):
        _, a = cayley_graph(z_spec(7, 1, 6))
        assert len(edge_orbits(a)) == 1

    def test_edgeless(self):
        a = GroupAction(groups.cyclic(3), Graph.from_edges(3, []))
        assert edge_orbits(a) == []


class TestReduce:
    def test_k5_to_c5(self):
        _, a = cayley_graph(z_spec(5, 1, 2, 3, 4))
        reduced, removed = g_minimal_reduce(a)
        assert reduced.edge_count == 5 and len(removed) == 1
        assert nx.is_isomorphic(to_nx(reduced), nx.cycle_graph(5))

    def test_c6_unchanged(self):
        x, a = cayley_graph(z_spec(6, 1, 5))
        reduced, removed = g_minimal_reduce(a)
        assert reduced == x and removed == []

    def test_z6_chord(self):
        x, a = cayley_graph(z_spec(6, 1, 3, 5))
        reduced, removed = g_minimal_reduce(a)
        assert [len(o) for o in removed] == [3]
        assert nx.is_isomorphic(to_nx(reduced), nx.cycle_graph(6))

    def test_disconnected(self):
        a = GroupAction(groups.cyclic(4), Graph.from_edges(4, [(0, 2), (1, 3)]))
        with pytest.raises(GraphError):
            g_minimal_reduce(a)


class TestPetersen:
    def test_kneser(self):
        x, subsets = petersen_graph()
        assert is_petersen(x)
        assert nx.is_isomorphic(to_nx(x), nx.petersen_graph())
        assert subsets[0] == {0, 1}

    def test_c10(self):
        assert not is_petersen(Graph.cycle(10))
        assert girth(Graph.cycle(10)) == 10

    def test_pentagonal_prism(self):
        x = prism(5)
        assert girth(x) == 4
        assert not is_petersen(x)

    def test_girth_of_tree(self):
        assert girth(Graph.from_edges(3, [(0, 1), (1, 2)])) == float("inf")


class TestSabidussi:
    def test_c6(self):
        a = GroupAction(groups.cyclic(6), Graph.cycle(6))
        spec = sabidussi_labeling(a)
        r = groups.cyclic(6).generators[0]
        assert set(spec.connection_set) == {r, r.inverse()}

    def test_prism_round_trip(self):
        original = prism_spec()
        x, a = cayley_graph(original)
        spec = sabidussi_labeling(a)
        relabeled, _ = cayley_graph(spec)
        assert nx.is_isomorphic(to_nx(relabeled), to_nx(x))
        vmap = cayley_vertex_map(spec)
        assert sorted(vmap) == list(range(6))
        assert all(x.has_edge(vmap[u], vmap[v]) for u, v in relabeled.edges())

    def test_f20_has_stabilizer(self):
        assert sabidussi_labeling(cat.get("petersen-f20").action) is None

    def test_intransitive(self):
        a = GroupAction(PermGroup.trivial(2), Graph.from_edges(2, [(0, 1)]))
        with pytest.raises(GraphError):
            sabidussi_labeling(a)


class TestTransitive:
    def test_cayley(self):
        assert is_transitive(cayley_graph(prism_spec())[1])

    def test_trivial_group(self):
        assert not is_transitive(GroupAction(PermGroup.trivial(2), Graph.from_edges(2, [(0, 1)])))

    def test_f20(self):
        assert is_transitive(cat.get("petersen-f20").action)

    def test_action_rejects_non_automorphism(self):
        with pytest.raises(GraphError):
            GroupAction(PermGroup(4, [cyc(4, (0, 1))]), Graph.cycle(4))


def test_to_dot():
    text = to_dot(Graph.from_edges(3, [(0, 1)]), "G")
    assert text == "graph G {\n  2;\n  0 -- 1;\n}\n"
