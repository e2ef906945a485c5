"""Named examples: group ILO settings, Alexander, conjugation and trivial
quandles, products and subalgebra closures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import IloModel, _frozen, adjoint, model
from .errors import NotAbelian, NotAutomorphism
from .groups import FiniteGroup, cyclic, direct_product, is_homomorphism, symmetric_group

__all__ = [
    "AlexanderDatum",
    "from_group",
    "alexander",
    "multiplier",
    "conjugation_quandle",
    "trivial_quandle",
    "product",
    "submodel",
    "subalgebra_closure",
    "closure_trace",
    "prequandle_catalog",
]


def from_group(g: FiniteGroup) -> IloModel:
    """The ILO setting of a group: ``d(x, y) = y^-1 x`` with adjoint the group law."""
    d = g.mult[g.inv[None, :], np.arange(g.order)[:, None]]
    return IloModel(_frozen(d), g.mult, g.unit)


@dataclass(frozen=True)
class AlexanderDatum:
    group: FiniteGroup
    f: tuple

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(v) for v in self.f))

    def validate(self) -> None:
        g = self.group
        if not g.is_abelian:
            raise NotAbelian(f"{g.name} is not commutative")
        f = np.asarray(self.f)
        if len(f) != g.order or sorted(f.tolist()) != list(range(g.order)):
            raise NotAutomorphism("f is not a bijection of the carrier")
        if not is_homomorphism(f, g.mult, g.mult):
            raise NotAutomorphism("f is not additive")


def multiplier(n: int, k: int) -> tuple:
    """The map ``x -> k x`` on the cyclic group Z_n."""
    return tuple((k * x) % n for x in range(n))


def _alexander_table(g: FiniteGroup, f: np.ndarray) -> np.ndarray:
    # x > y = f(x) + y - f(y)
    n = g.order
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    return g.mult[g.mult[f[x], y], g.inv[f[y]]]


def alexander(a: AlexanderDatum) -> IloModel:
    a.validate()
    f = np.asarray(a.f)
    d = _alexander_table(a.group, f)
    # adjoint: x o y = y >_{f^-1} x
    finv = np.argsort(f)
    circ = _alexander_table(a.group, finv).T
    if not np.array_equal(circ, adjoint(d)):
        raise AssertionError("Alexander adjoint formula disagrees with the computed adjoint")
    return IloModel(_frozen(d), _frozen(circ), None)


def conjugation_quandle(g: FiniteGroup) -> IloModel:
    """``x > y = y x y^-1``."""
    n = g.order
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    d = g.mult[g.mult[y, x], g.inv[y]]
    return IloModel.from_table(d)


def trivial_quandle(n: int) -> IloModel:
    if n < 1:
        raise ValueError("order must be positive")
    d = np.repeat(np.arange(n)[:, None], n, axis=1)
    return IloModel.from_table(d)


def product(a, b):
    """Componentwise product; pair ``(i, j)`` is element ``i * |b| + j``."""
    m = b.order
    i = np.repeat(np.arange(a.order), m)
    j = np.tile(np.arange(m), a.order)
    d = a.d[i[:, None], i[None, :]] * m + b.d[j[:, None], j[None, :]]
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = a.unit * m + b.unit
    if isinstance(a, IloModel) and isinstance(b, IloModel):
        circ = a.adjoint[i[:, None], i[None, :]] * m + b.adjoint[j[:, None], j[None, :]]
        return IloModel(_frozen(d), _frozen(circ), unit)
    return model(d, unit, normalize=False)


def submodel(m: IloModel, elements: Iterable[int]) -> tuple:
    """Restrict ``m`` to a closed subset; returns ``(model, elements)`` with
    ``elements[i]`` the original label of new element ``i``."""
    elems = sorted(set(int(e) for e in elements))
    pos = {e: i for i, e in enumerate(elems)}
    d = [[pos[int(m.d[a, b])] for b in elems] for a in elems]
    unit = pos[m.unit] if m.unit is not None and m.unit in pos else None
    return IloModel.from_table(d, unit, normalize=False), tuple(elems)


def closure_trace(m, seed: Iterable[int]) -> list:
    """Elements of the subalgebra generated by ``seed``, in the order reached.

    The seed (plus the unit, if any) comes first in ascending order; then
    pairs ``(a, b)`` of reached elements are scanned in ascending order,
    adding ``d(a, b)`` and ``a o b`` as they appear, until nothing changes.
    """
    start = set(int(s) for s in seed)
    if m.unit is not None:
        start.add(m.unit)
    reached = sorted(start)
    have = np.zeros(m.order, dtype=bool)
    have[reached] = True
    tables = [m.d]
    if isinstance(m, IloModel):
        tables.append(m.adjoint)
    changed = True
    while changed:
        changed = False
        current = sorted(reached)
        for a in current:
            for b in current:
                for t in tables:
                    c = int(t[a, b])
                    if not have[c]:
                        have[c] = True
                        reached.append(c)
                        changed = True
    return reached


def subalgebra_closure(m, seed: Iterable[int]) -> frozenset:
    """Smallest subset containing ``seed`` (and the unit) closed under d and its adjoint."""
    return frozenset(closure_trace(m, seed))


def prequandle_catalog() -> dict:
    """Small named prequandles used as fixtures.

    ``T<n>`` trivial quandles, ``R3`` = Alexander(Z3, 2x), ``A4_3`` =
    Alexander(Z4, 3x) (not latin), ``A5_k`` = Alexander(Z5, kx), ``Tet`` =
    Alexander(Z2 x Z2, order-3 automorphism) and ``Conj_S3``.
    """
    z4 = cyclic(4)
    z5 = cyclic(5)
    v4 = direct_product(cyclic(2), cyclic(2))
    out = {f"T{n}": trivial_quandle(n) for n in range(1, 5)}
    out["R3"] = alexander(AlexanderDatum(cyclic(3), multiplier(3, 2)))
    out["A4_3"] = alexander(AlexanderDatum(z4, multiplier(4, 3)))
    for k in (2, 3, 4):
        out[f"A5_{k}"] = alexander(AlexanderDatum(z5, multiplier(5, k)))
    # (a, b) -> (b, a + b) on index 2a + b
    out["Tet"] = alexander(AlexanderDatum(v4, (0, 3, 1, 2)))
    out["Conj_S3"] = conjugation_quandle(symmetric_group(3))
    return out
