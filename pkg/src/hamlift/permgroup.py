"""Finite permutation groups at desk scale.

Every group is handled by explicit enumeration of its elements, which keeps
all answers exact.  The enumeration bound defaults to 10**5 elements and can
be changed with the ``HAMLIFT_MAX_GROUP_ORDER`` environment variable.

Composition convention: ``compose(a, b)`` is the map ``v -> a(b(v))``, and
``a * b`` means the same thing.
"""

from __future__ import annotations

import os
import threading
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .partition import QuotientMap

DEFAULT_MAX_ORDER = 10**5
ENV_MAX_ORDER = "HAMLIFT_MAX_GROUP_ORDER"


class PermGroupError(ValueError):
    pass


class DegreeMismatch(PermGroupError):
    pass


class GroupTooLarge(PermGroupError):
    pass


class NotContained(PermGroupError):
    pass


class NotASubgroup(PermGroupError):
    pass


def max_group_order() -> int:
    raw = os.environ.get(ENV_MAX_ORDER)
    if not raw:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise PermGroupError(f"{ENV_MAX_ORDER} must be an integer, got {raw!r}") from None
    if value < 1:
        raise PermGroupError(f"{ENV_MAX_ORDER} must be positive")
    return value


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {0, ..., degree-1} stored as its image table."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise PermGroupError("permutation degree must be positive")
        if sorted(images) != list(range(len(images))):
            raise PermGroupError(f"not a permutation: {images}")

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> Permutation:
        # trusted fast path for internally computed image tables
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for i, v in enumerate(cycle):
                if v in seen:
                    raise PermGroupError(f"point {v} repeated in cycles")
                seen.add(v)
                images[v] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation._raw(tuple(range(self.degree)))
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def order(self) -> int:
        result = 1
        for cycle in self.cycles():
            n = len(cycle)
            result = result * n // _gcd(result, n)
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            v = self.images[start]
            while v != start:
                cycle.append(v)
                seen.add(v)
                v = self.images[v]
            out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return the permutation ``v -> a(b(v))``."""
    if len(a.images) != len(b.images):
        raise DegreeMismatch(f"cannot compose degrees {a.degree} and {b.degree}")
    ai = a.images
    return Permutation._raw(tuple(ai[v] for v in b.images))


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """``a^-1 b^-1 a b``."""
    return a.inverse() * b.inverse() * a * b


class PermGroup:
    """Permutation group given by a degree and a list of generators.

    The element list is computed on first use and cached.  Equality and
    hashing are by element set, so two different generating sets of the
    same subgroup compare equal.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation] = ()):
        if degree < 1:
            raise PermGroupError("degree must be positive")
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in a group of degree {degree}")
        if not gens:
            gens = (Permutation.identity(degree),)
        self.degree = degree
        self.generators = gens
        self._lock = threading.Lock()
        self._elements: tuple[Permutation, ...] | None = None
        self._element_set: frozenset[Permutation] | None = None
        self._lattice: list[PermGroup] | None = None

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls(degree, ())

    @classmethod
    def from_elements(cls, degree: int, elems: Iterable[Permutation]) -> PermGroup:
        """Wrap a known closed element set, picking a small generating set."""
        elem_list = sorted(set(elems))
        target = frozenset(elem_list)
        gens: list[Permutation] = []
        current = {Permutation.identity(degree)}
        for e in elem_list:
            if e not in current:
                gens.append(e)
                current = _closure(degree, gens, len(target) + 1)
        if frozenset(current) != target:
            raise NotASubgroup("element set is not closed under composition")
        group = cls(degree, gens)
        group._set_cache(tuple(elem_list))
        return group

    def _set_cache(self, elems: tuple[Permutation, ...]) -> None:
        with self._lock:
            if self._elements is None:
                self._element_set = frozenset(elems)
                self._elements = elems

    def elements(self) -> tuple[Permutation, ...]:
        if self._elements is None:
            closed = _closure(self.degree, self.generators, max_group_order())
            self._set_cache(tuple(sorted(closed)))
        return self._elements  # type: ignore[return-value]

    def element_set(self) -> frozenset[Permutation]:
        if self._element_set is None:
            self.elements()
        return self._element_set  # type: ignore[return-value]

    @property
    def order(self) -> int:
        return len(self.elements())

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def __contains__(self, perm: Permutation) -> bool:
        return perm in self.element_set()

    def issubgroup(self, other: PermGroup) -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return self.element_set() == other.element_set()

    def __hash__(self) -> int:
        return hash((self.degree, self.element_set()))

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements())

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup(degree={self.degree}, <{gens}>)"


def _closure(degree: int, gens: Sequence[Permutation], bound: int) -> set[Permutation]:
    identity = Permutation._raw(tuple(range(degree)))
    seen = {identity}
    queue = deque([identity])
    gen_images = [g.images for g in gens]
    while queue:
        x = queue.popleft()
        xi = x.images
        for gi in gen_images:
            y = Permutation._raw(tuple(xi[v] for v in gi))
            if y not in seen:
                seen.add(y)
                if len(seen) > bound:
                    raise GroupTooLarge(f"group order exceeds enumeration bound {bound}")
                queue.append(y)
    return seen


def elements(g: PermGroup) -> list[Permutation]:
    return list(g.elements())


def _check_point(g: PermGroup, x: int) -> None:
    if not 0 <= x < g.degree:
        raise PermGroupError(f"point {x} out of range for degree {g.degree}")


def orbit(g: PermGroup, x: int) -> frozenset[int]:
    _check_point(g, x)
    seen = {x}
    stack = [x]
    while stack:
        v = stack.pop()
        for gen in g.generators:
            w = gen.images[v]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def orbit_partition(g: PermGroup) -> QuotientMap:
    label = [-1] * g.degree
    blocks = []
    for v in range(g.degree):
        if label[v] == -1:
            orb = orbit(g, v)
            for w in orb:
                label[w] = len(blocks)
            blocks.append(orb)
    return QuotientMap.from_blocks(g.degree, blocks)


def stabilizer(g: PermGroup, x: int) -> PermGroup:
    _check_point(g, x)
    fixed = [e for e in g.elements() if e.images[x] == x]
    orb = orbit(g, x)
    if len(orb) * len(fixed) != g.order:
        raise PermGroupError("orbit-stabilizer count failed; generator list is inconsistent")
    return PermGroup.from_elements(g.degree, fixed)


def _require_subgroup(h: PermGroup, g: PermGroup) -> None:
    if h.degree != g.degree:
        raise DegreeMismatch("groups act on different degrees")
    if not h.issubgroup(g):
        raise NotContained("subgroup is not contained in the ambient group")


def normal_closure(g: PermGroup, h: PermGroup) -> PermGroup:
    """Smallest normal subgroup of ``g`` containing ``h``."""
    _require_subgroup(h, g)
    gens = [x for x in h.generators if not x.is_identity()]
    current = PermGroup(g.degree, gens)
    changed = True
    while changed:
        changed = False
        for x in g.generators:
            xi = x.inverse()
            for n in list(current.generators):
                c = x * n * xi
                if c not in current:
                    gens.append(c)
                    current = PermGroup(g.degree, gens)
                    changed = True
    return current


def is_normal(g: PermGroup, h: PermGroup) -> bool:
    _require_subgroup(h, g)
    return all(x * n * x.inverse() in h for x in g.generators for n in h.generators)


def commutator_subgroup(g: PermGroup) -> PermGroup:
    gens = g.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    derived = normal_closure(g, PermGroup(g.degree, comms))
    if not is_normal(g, derived):
        raise PermGroupError("commutator subgroup is not normal")
    # g/derived is abelian iff commutators of generators lie in derived
    if not all(c in derived for c in comms):
        raise PermGroupError("quotient by commutator subgroup is not abelian")
    return derived


class CyclicStructure(NamedTuple):
    """``p`` is None exactly when the group is trivial (``k == 0``)."""

    p: int | None
    k: int
    generator: Permutation


def _prime_power(n: int) -> tuple[int, int] | None:
    if n < 2:
        return None
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def cyclic_prime_power_structure(h: PermGroup) -> CyclicStructure | None:
    n = h.order
    if n == 1:
        return CyclicStructure(None, 0, h.identity)
    pk = _prime_power(n)
    if pk is None:
        return None
    for e in h.elements():
        if e.order() == n:
            return CyclicStructure(pk[0], pk[1], e)
    return None


def power_subgroup(h: PermGroup, p: int) -> PermGroup:
    """Subgroup generated by the p-th powers of all elements of ``h``."""
    powers = {e ** p for e in h.elements()}
    return PermGroup(h.degree, sorted(x for x in powers if not x.is_identity()))


def cyclic_subgroup_chain(h: PermGroup, p: int) -> list[PermGroup]:
    """The chain {e} = H_0 < H_1 < ... < H_k = h of a cyclic p-group."""
    struct = cyclic_prime_power_structure(h)
    if struct is None:
        raise PermGroupError("group is not cyclic of prime-power order")
    if struct.k == 0:
        return [PermGroup.trivial(h.degree)]
    if struct.p != p:
        raise PermGroupError(f"group order is a power of {struct.p}, not {p}")
    gen = struct.generator
    return [PermGroup(h.degree, [gen ** (p ** (struct.k - i))]) for i in range(struct.k + 1)]


def product_subgroup(a: PermGroup, b: PermGroup, ambient: PermGroup) -> PermGroup:
    """The subgroup ``{xy : x in a, y in b}``; ``a`` must be normal in ``ambient``."""
    _require_subgroup(a, ambient)
    _require_subgroup(b, ambient)
    if not is_normal(ambient, a):
        raise NotASubgroup("left factor is not normal, so the product need not be a subgroup")
    prod = {x * y for x in a.elements() for y in b.elements()}
    common = a.element_set() & b.element_set()
    if len(prod) * len(common) != a.order * b.order:
        raise PermGroupError("product size disagrees with |a||b|/|a n b|")
    return PermGroup.from_elements(ambient.degree, prod)


def intersection(a: PermGroup, b: PermGroup) -> PermGroup:
    if a.degree != b.degree:
        raise DegreeMismatch("groups act on different degrees")
    return PermGroup.from_elements(a.degree, a.element_set() & b.element_set())


def conjugate(h: PermGroup, x: Permutation) -> PermGroup:
    """``x h x^-1``."""
    xi = x.inverse()
    return PermGroup(h.degree, [x * n * xi for n in h.generators])


def normal_core(g: PermGroup, h: PermGroup) -> PermGroup:
    """Largest normal subgroup of ``g`` inside ``h``: the meet of all conjugates."""
    _require_subgroup(h, g)
    core = h.element_set()
    for x in g.elements():
        core = core & conjugate(h, x).element_set()
    return PermGroup.from_elements(g.degree, core)


# -- subgroup lattice -------------------------------------------------------


def subgroups(g: PermGroup) -> list[PermGroup]:
    """All subgroups of ``g``, sorted by order and then by element list.

    Built by joining cyclic subgroups until no new subgroup appears.  The
    element multiplication table is materialized, so this is desk-scale only.
    """
    if g._lattice is not None:
        return g._lattice
    elems = g.elements()
    n = len(elems)
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[a * b] for b in elems] for a in elems]
    ident = index[g.identity]

    def close(gens: list[int]) -> int:
        mask = 1 << ident
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                row = table[x]
                for s in gens:
                    y = row[s]
                    if not mask >> y & 1:
                        mask |= 1 << y
                        nxt.append(y)
            frontier = nxt
        return mask

    cyclic: dict[int, int] = {}
    for i in range(n):
        m = close([i])
        cyclic.setdefault(m, i)
    found: dict[int, list[int]] = {1 << ident: []}
    for m, i in cyclic.items():
        found.setdefault(m, [i])
    queue = deque(found)
    while queue:
        mask = queue.popleft()
        gens = found[mask]
        for cmask, c in cyclic.items():
            if cmask & ~mask:
                joined = close(gens + [c])
                if joined not in found:
                    found[joined] = gens + [c]
                    queue.append(joined)

    groups = []
    for mask in found:
        members = [elems[i] for i in range(n) if mask >> i & 1]
        sub = PermGroup(g.degree, [elems[i] for i in found[mask]])
        sub._set_cache(tuple(members))
        groups.append(sub)
    groups.sort(key=lambda s: (s.order, s.elements()))
    with g._lock:
        g._lattice = groups
    return groups


def normal_subgroups(g: PermGroup) -> list[PermGroup]:
    return [h for h in subgroups(g) if is_normal(g, h)]


def maximal_subgroups(g: PermGroup) -> list[PermGroup]:
    proper = [h for h in subgroups(g) if h.order < g.order]
    out = []
    for h in proper:
        hs = h.element_set()
        if not any(k.order > h.order and hs < k.element_set() for k in proper):
            out.append(h)
    return out


def frattini_subgroup(g: PermGroup) -> PermGroup:
    """Intersection of all maximal subgroups (trivial group if there are none)."""
    maxes = maximal_subgroups(g)
    if not maxes:
        return PermGroup.trivial(g.degree)
    common = maxes[0].element_set()
    for m in maxes[1:]:
        common = common & m.element_set()
    return PermGroup.from_elements(g.degree, common)
