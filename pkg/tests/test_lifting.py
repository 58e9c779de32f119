import pytest

from hamlift import groups
from hamlift.graphcore import Graph, petersen_graph
from hamlift.lifting import (
    EndpointInPowerOrbit,
    EndpointNotInOrbit,
    HamiltonCertificate,
    LiftError,
    QuotientNotHamiltonian,
    TrailNotHamiltonian,
    apply_perm_to_path,
    factor_group_cycle,
    is_path,
    lift_path,
    verify_certificate,
)
from hamlift.oracle import NONE, find_hamilton_cycle
from hamlift.partition import QuotientMap
from hamlift.permgroup import Permutation, PermGroup, orbit_partition

from conftest import cyc

ROT3 = cyc(9, (0, 3, 6), (1, 4, 7), (2, 5, 8))


@pytest.fixture
def h3():
    return PermGroup(9, [ROT3])


def brute_trail(path, gamma, times):
    """Independent trail assembly: concatenate gamma^i applied to the path."""
    out = []
    for i in range(times):
        out += [(v + i * gamma) % 9 for v in path]
    return out


class TestLiftPath:
    def test_singletons(self):
        x = Graph.cycle(6)
        assert lift_path(x, QuotientMap.singletons(6), [2, 3, 4], 2) == [2, 3, 4]

    def test_nine_cycle(self, h3):
        q = orbit_partition(h3)
        assert q.blocks == ((0, 3, 6), (1, 4, 7), (2, 5, 8))
        assert lift_path(Graph.cycle(9), q, [0, 1, 2], 0) == [0, 1, 2]

    def test_length_zero(self, h3):
        assert lift_path(Graph.cycle(9), orbit_partition(h3), [1], 4) == [4]

    def test_start_outside_block(self, h3):
        with pytest.raises(LiftError):
            lift_path(Graph.cycle(9), orbit_partition(h3), [0, 1], 1)

    def test_no_neighbor(self):
        q = QuotientMap.from_blocks(4, [(0, 1), (2, 3)])
        with pytest.raises(LiftError):
            lift_path(Graph.from_edges(4, [(0, 1), (1, 2)]), q, [0, 1], 0)


class TestApplyPerm:
    def test_identity(self):
        assert apply_perm_to_path(Permutation.identity(9), [0, 1, 2]) == [0, 1, 2]

    def test_rotation(self):
        assert apply_perm_to_path(ROT3, [0, 1, 2]) == [3, 4, 5]

    def test_non_automorphism_can_break_adjacency(self):
        x = Graph.cycle(5)
        moved = apply_perm_to_path(cyc(5, (1, 2)), [0, 1, 2])
        assert moved == [0, 2, 1] and not is_path(x, moved)


class TestFactorGroupCycle:
    def test_z9_mod_3(self, h3):
        cert = factor_group_cycle(Graph.cycle(9), h3, 3, [0, 1, 2, 3])
        assert cert.vertices == (0, 1, 2, 3, 4, 5, 6, 7, 8)
        assert list(cert.vertices) == brute_trail([0, 1, 2], 3, 3)
        assert verify_certificate(Graph.cycle(9), cert)

    def test_k2_degenerate(self):
        h = PermGroup(6, [cyc(6, (0, 2, 4), (1, 3, 5))])
        cert = factor_group_cycle(Graph.cycle(6), h, 3, [0, 1, 2])
        assert cert.vertices == (0, 1, 2, 3, 4, 5)

    def test_trivial_h(self):
        with pytest.raises(EndpointNotInOrbit):
            factor_group_cycle(Graph.cycle(9), PermGroup.trivial(9), 3, [0, 1, 2, 0])

    def test_endpoint_in_power_orbit(self):
        # with H = Z9 the p-th powers form <3>, whose orbit of 0 contains 3
        with pytest.raises(EndpointInPowerOrbit):
            factor_group_cycle(Graph.cycle(9), groups.cyclic(9), 3, [0, 1, 2, 3])

    def test_endpoint_not_in_orbit(self, h3):
        with pytest.raises(EndpointNotInOrbit):
            factor_group_cycle(Graph.cycle(9), h3, 3, [0, 1, 2, 4])

    def test_quotient_not_hamiltonian(self, h3):
        with pytest.raises(QuotientNotHamiltonian):
            factor_group_cycle(Graph.cycle(9), h3, 3, [0, 1, 2, 3, 4, 5, 6])

    def test_not_automorphisms(self, h3):
        x = Graph.from_edges(9, [(0, 1), (1, 2), (2, 3)])
        with pytest.raises(TrailNotHamiltonian):
            factor_group_cycle(x, h3, 3, [0, 1, 2, 3])

    def test_longer_cycle(self):
        # C15 with H = <5> (order 3); quotient is C5
        h = PermGroup(15, [Permutation(tuple((i + 5) % 15 for i in range(15)))])
        cert = factor_group_cycle(Graph.cycle(15), h, 3, list(range(6)))
        assert cert.vertices == tuple(range(15))


class TestVerifyCertificate:
    def test_c5(self):
        assert verify_certificate(Graph.cycle(5), HamiltonCertificate("cycle", (0, 1, 2, 3, 4)))

    def test_c5_bad_order(self):
        assert not verify_certificate(Graph.cycle(5), HamiltonCertificate("cycle", (0, 2, 4, 1, 3)))

    def test_petersen_has_no_cycle(self):
        x, _ = petersen_graph()
        assert find_hamilton_cycle(x).status == NONE
        # a few natural 10-vertex claims all fail
        for claim in [tuple(range(10)), (0, 7, 1, 5, 2, 6, 3, 8, 4, 9)]:
            assert not verify_certificate(x, HamiltonCertificate("cycle", claim))

    def test_path_vs_cycle(self):
        x = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert verify_certificate(x, HamiltonCertificate("path", (0, 1, 2, 3)))
        assert not verify_certificate(x, HamiltonCertificate("cycle", (0, 1, 2, 3)))

    def test_k2_cycle_rejected(self):
        x = Graph.from_edges(2, [(0, 1)])
        assert not verify_certificate(x, HamiltonCertificate("cycle", (0, 1)))
        assert verify_certificate(x, HamiltonCertificate("path", (0, 1)))

    def test_missing_or_repeated(self):
        x = Graph.complete(4)
        assert not verify_certificate(x, HamiltonCertificate("cycle", (0, 1, 2)))
        assert not verify_certificate(x, HamiltonCertificate("cycle", (0, 1, 2, 2)))

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            HamiltonCertificate("tour", (0, 1))
