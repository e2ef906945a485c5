"""Finite groups given by Cayley tables, a small fixture catalog, and
brute-force homomorphism enumeration over generating sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Hashable, Iterator, Optional, Sequence

import numpy as np

from .core import _frozen, op_table, relabel_table
from .errors import AlgebraError, InvalidTable

__all__ = [
    "FiniteGroup",
    "cyclic",
    "direct_product",
    "permutation_group",
    "symmetric_group",
    "alternating_group",
    "dihedral",
    "quaternion",
    "catalog",
    "homomorphisms",
    "is_homomorphism",
    "compose_perm",
]


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    mult: np.ndarray
    unit: int
    inv: np.ndarray
    name: str = "G"
    labels: Optional[tuple] = field(default=None, repr=False)

    @classmethod
    def from_table(cls, mult, name: str = "G", labels: Optional[Sequence[Hashable]] = None,
                   *, normalize: bool = False) -> "FiniteGroup":
        mult = op_table(mult)
        n = len(mult)
        idx = np.arange(n)
        units = [e for e in range(n) if (mult[e] == idx).all() and (mult[:, e] == idx).all()]
        if not units:
            raise InvalidTable("table has no two-sided identity")
        unit = units[0]
        x, y, z = np.ix_(idx, idx, idx)
        if not (mult[mult[x, y], z] == mult[x, mult[y, z]]).all():
            raise InvalidTable("table is not associative")
        hits = mult == unit
        if not (hits.sum(axis=1) == 1).all():
            raise InvalidTable("some element has no inverse")
        inv = np.argmax(hits, axis=1)
        if not (mult[inv, idx] == unit).all():
            raise InvalidTable("left and right inverses differ")
        labels = None if labels is None else tuple(labels)
        if normalize and unit != 0:
            perm = np.arange(n)
            perm[[0, unit]] = perm[[unit, 0]]
            mult = relabel_table(mult, perm)
            inv = perm[inv[perm]]  # perm is an involution
            if labels is not None:
                labels = tuple(labels[p] for p in perm)
            unit = 0
        return cls(mult, int(unit), _frozen(inv), name, labels)

    @property
    def order(self) -> int:
        return len(self.mult)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.unit == other.unit and np.array_equal(self.mult, other.mult)

    def __hash__(self):
        return hash((self.mult.tobytes(), self.order, self.unit))

    @property
    def tables(self) -> tuple:
        return (self.mult,)

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def index(self, label) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.mult == self.mult.T).all())

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        for g in range(self.order):
            k, x = 1, g
            while x != self.unit:
                x = self.mult[x, g]
                k += 1
            orders[g] = k
        return _frozen(orders)

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders))

    def subgroup_generated(self, gens: Sequence[int]) -> frozenset:
        reached = {self.unit}
        frontier = [self.unit]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(self.mult[x, g])
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(reached)

    @cached_property
    def generators(self) -> tuple:
        """Greedy generating set: scan elements by index, keep those not yet reached."""
        gens: list[int] = []
        span = frozenset({self.unit})
        for g in range(self.order):
            if len(span) == self.order:
                break
            if g not in span:
                gens.append(g)
                span = self.subgroup_generated(gens)
        return tuple(gens)

    def opposite(self) -> "FiniteGroup":
        return FiniteGroup(_frozen(self.mult.T), self.unit, self.inv, self.name + "^op", self.labels)


def cyclic(n: int) -> FiniteGroup:
    idx = np.arange(n)
    return FiniteGroup.from_table((idx[:, None] + idx[None, :]) % n, name=f"Z{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: Optional[str] = None) -> FiniteGroup:
    """Pairs (a, b) are indexed as ``a * |h| + b``."""
    m = len(h)
    a = np.repeat(np.arange(len(g)), m)
    b = np.tile(np.arange(m), len(g))
    mult = g.mult[a[:, None], a[None, :]] * m + h.mult[b[:, None], b[None, :]]
    labels = [(i, j) for i in range(len(g)) for j in range(m)]
    return FiniteGroup.from_table(mult, name or f"{g.name}x{h.name}", labels)


def compose_perm(p: Sequence[int], q: Sequence[int]) -> tuple:
    """``(p q)(i) = p(q(i))``: apply ``q`` first."""
    return tuple(p[i] for i in q)


def permutation_group(gens: Sequence[Sequence[int]], name: str = "G") -> FiniteGroup:
    """Close ``gens`` under composition; elements are sorted image tuples, so the identity is 0."""
    gens = [tuple(g) for g in gens]
    degree = len(gens[0])
    identity = tuple(range(degree))
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose_perm(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    elements = sorted(elems)
    pos = {e: i for i, e in enumerate(elements)}
    mult = [[pos[compose_perm(a, b)] for b in elements] for a in elements]
    return FiniteGroup.from_table(mult, name, elements)


def symmetric_group(k: int) -> FiniteGroup:
    gens = [tuple(range(k))]
    if k > 1:
        gens = [(1, 0) + tuple(range(2, k)), tuple(range(1, k)) + (0,)]
    return permutation_group(gens, f"S{k}")


def alternating_group(k: int) -> FiniteGroup:
    perms = [p for p in itertools.permutations(range(k)) if _parity(p) == 0]
    return permutation_group(perms, f"A{k}")


def _parity(p: Sequence[int]) -> int:
    seen, parity = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def dihedral(m: int) -> FiniteGroup:
    """Symmetries of the regular m-gon, order 2m, as permutations of its vertices."""
    rotation = tuple((i + 1) % m for i in range(m))
    reflection = tuple((-i) % m for i in range(m))
    return permutation_group([rotation, reflection], f"D{m}")


def quaternion() -> FiniteGroup:
    # unit quaternions as (sign, basis) with basis in 1, i, j, k
    basis = "1ijk"
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elements = [(s, b) for b in basis for s in (1, -1)]
    pos = {e: i for i, e in enumerate(elements)}

    def mul(a, b):
        sign, c = table[a[1], b[1]]
        return (a[0] * b[0] * sign, c)

    mult = [[pos[mul(a, b)] for b in elements] for a in elements]
    labels = [("" if s > 0 else "-") + b for s, b in elements]
    return FiniteGroup.from_table(mult, "Q8", labels)


@lru_cache(maxsize=None)
def _catalog() -> dict:
    groups = {f"Z{n}": cyclic(n) for n in range(1, 17)}
    groups["Z2xZ2"] = direct_product(cyclic(2), cyclic(2), "Z2xZ2")
    groups["Z2xZ4"] = direct_product(cyclic(2), cyclic(4), "Z2xZ4")
    for m in range(3, 7):
        groups[f"D{m}"] = dihedral(m)
    groups["Q8"] = quaternion()
    groups["S3"] = symmetric_group(3)
    groups["A4"] = alternating_group(4)
    return groups


def catalog(max_order: int = 16) -> dict:
    """Fixture groups of order at most ``max_order``, keyed by name."""
    return {k: g for k, g in _catalog().items() if g.order <= max_order}


def is_homomorphism(phi: Sequence[int], src: np.ndarray, dst: np.ndarray) -> bool:
    """Does ``phi`` carry the operation table ``src`` onto ``dst``?"""
    phi = np.asarray(phi)
    return bool((phi[src] == dst[phi[:, None], phi[None, :]]).all())


def _extend(g: FiniteGroup, h: FiniteGroup, images: Sequence[int]) -> Optional[np.ndarray]:
    """Extend generator images to a map on all of ``g``; None on a conflict."""
    phi = np.full(g.order, -1, dtype=np.int64)
    phi[g.unit] = h.unit
    frontier = [g.unit]
    gens = g.generators
    while frontier:
        nxt = []
        for x in frontier:
            for gen, img in zip(gens, images):
                y = g.mult[x, gen]
                val = h.mult[phi[x], img]
                if phi[y] < 0:
                    phi[y] = val
                    nxt.append(y)
                elif phi[y] != val:
                    return None
        frontier = nxt
    return phi


def homomorphisms(g: FiniteGroup, h: FiniteGroup, constraint=None) -> Iterator[np.ndarray]:
    """All group homomorphisms ``g -> h`` as element maps, in lexicographic
    order of generator images.

    ``constraint(gen_position, image)`` may reject candidate images early.
    """
    gens = g.generators
    g_orders = g.element_orders
    h_orders = h.element_orders
    choices = []
    for k, gen in enumerate(gens):
        ok = [
            y for y in range(h.order)
            if g_orders[gen] % h_orders[y] == 0 and (constraint is None or constraint(k, y))
        ]
        choices.append(ok)
    for images in itertools.product(*choices):
        phi = _extend(g, h, images)
        if phi is not None and is_homomorphism(phi, g.mult, h.mult):
            phi.flags.writeable = False
            yield phi


def require_group(obj) -> FiniteGroup:
    if not isinstance(obj, FiniteGroup):
        raise AlgebraError(f"expected a FiniteGroup, got {type(obj).__name__}")
    return obj
