"""Concrete permutation representations of the small groups used by the catalog."""

from __future__ import annotations

import itertools
from typing import Callable, Hashable, Sequence

from .permgroup import Permutation, PermGroup


def regular_representation(elements: Sequence[Hashable], mul: Callable, generators: Sequence[Hashable]) -> PermGroup:
    """Left-regular permutation group of an abstractly given group."""
    index = {e: i for i, e in enumerate(elements)}
    perms = [Permutation(tuple(index[mul(g, e)] for e in elements)) for g in generators]
    return PermGroup(len(elements), perms)


def cyclic(n: int) -> PermGroup:
    return PermGroup(n, [Permutation(tuple((i + 1) % n for i in range(n)))])


def abelian(*factors: int) -> PermGroup:
    """Regular representation of Z_{n1} x ... x Z_{nr}."""
    elems = list(itertools.product(*(range(f) for f in factors)))

    def mul(a, b):
        return tuple((x + y) % f for x, y, f in zip(a, b, factors))

    gens = [tuple(int(i == j) for j in range(len(factors))) for i in range(len(factors))]
    return regular_representation(elems, mul, gens)


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon acting on its n vertices; order 2n."""
    rot = Permutation(tuple((i + 1) % n for i in range(n)))
    ref = Permutation(tuple((-i) % n for i in range(n)))
    return PermGroup(n, [rot, ref])


def dicyclic(n: int) -> PermGroup:
    """Dic_n of order 4n as a regular group: a^{2n} = 1, x^2 = a^n, x a x^-1 = a^-1.

    ``dicyclic(2)`` is Q8 and ``dicyclic(4)`` the generalized quaternion group Q16.
    """
    m = 2 * n
    elems = [(k, e) for e in (0, 1) for k in range(m)]

    def mul(a, b):
        (k1, e1), (k2, e2) = a, b
        if e1 == 0:
            return ((k1 + k2) % m, e2)
        if e2 == 0:
            return ((k1 - k2) % m, 1)
        return ((k1 - k2 + n) % m, 0)

    return regular_representation(elems, mul, [(1, 0), (0, 1)])


def quaternion() -> PermGroup:
    return dicyclic(2)


def quaternion_units() -> dict[str, Permutation]:
    """Named elements 1, -1, i, -i, j, -j, k, -k of ``quaternion()``."""
    q = quaternion()
    a, x = q.generators  # a = i, x = j
    one = q.identity
    named = {"1": one, "i": a, "j": x, "k": a * x}
    named["-1"] = a * a
    for key in ("i", "j", "k"):
        named["-" + key] = named["-1"] * named[key]
    return named


def heisenberg(p: int) -> PermGroup:
    """Upper unitriangular 3x3 matrices over Z_p, order p^3."""
    elems = list(itertools.product(range(p), repeat=3))

    def mul(u, v):
        a, b, c = u
        a2, b2, c2 = v
        return ((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)

    return regular_representation(elems, mul, [(1, 0, 0), (0, 1, 0)])


def symmetric(n: int) -> PermGroup:
    return PermGroup(n, [Permutation.from_cycles(n, (0, 1)), Permutation.from_cycles(n, tuple(range(n)))])


def direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    """Regular representation of a x b."""
    elems = list(itertools.product(a.elements(), b.elements()))

    def mul(u, v):
        return (u[0] * v[0], u[1] * v[1])

    gens = [(g, b.identity) for g in a.generators] + [(a.identity, h) for h in b.generators]
    return regular_representation(elems, mul, gens)


def affine_f20_on_pairs() -> tuple[PermGroup, list[frozenset[int]]]:
    """The Frobenius group x -> ax + b on Z_5 acting on the ten 2-subsets."""
    pairs = [frozenset((i, j)) for i in range(5) for j in range(i + 1, 5)]
    index = {s: i for i, s in enumerate(pairs)}

    def induced(f):
        return Permutation(tuple(index[frozenset(f(v) for v in s)] for s in pairs))

    shift = induced(lambda v: (v + 1) % 5)
    scale = induced(lambda v: (2 * v) % 5)
    return PermGroup(10, [shift, scale]), pairs
