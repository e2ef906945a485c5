"""Operations internal to finite abelian groups.

An operation ``op`` on the carrier of an abelian group ``A`` is internal
when it is a group homomorphism ``A x A -> A``.  Internal Slominski
operations are ``d(x, y) = f(x - y)`` with ``x o y = x + g(y)`` and
``g f = id``; internal prequandles are exactly the Alexander quandles.

The sign convention ``g f = id`` is the one that survives a direct check
(``x o d(y, x) = y`` gives ``x + g f (y - x) = y``).
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .constructions import AlexanderDatum, alexander
from .core import StructureClass, _frozen, _is_perm_rows, adjoint, classify, op_table
from .errors import (
    InvalidTable,
    NotAbelian,
    NotAutomorphism,
    NotHypersubtraction,
    NotInternal,
    NotPrequandle,
    NotSlominski,
    UnitMismatch,
)
from .groups import FiniteGroup, direct_product, homomorphisms

__all__ = [
    "internal_check",
    "decompose_slominski",
    "extract_alexander",
    "internal_operations",
    "umag_hst_abelian_check",
]

S = StructureClass


def internal_check(ambient: FiniteGroup, op) -> bool:
    """Is ``op(x + x', y + y') = op(x, y) + op(x', y')`` for all arguments?"""
    if not ambient.is_abelian:
        raise NotAbelian(f"{ambient.name} is not commutative")
    op = op_table(op)
    add = ambient.mult
    n = ambient.order
    x, x2, y, y2 = np.ix_(*([np.arange(n)] * 4))
    return bool((op[add[x, x2], add[y, y2]] == add[op[x, y], op[x2, y2]]).all())


def decompose_slominski(ambient: FiniteGroup, d) -> tuple:
    """Return ``(f, g)`` with ``d(x, y) = f(x - y)``, ``x o y = x + g(y)``, ``g f = id``."""
    d = op_table(d)
    if not internal_check(ambient, d):
        raise NotInternal("operation is not a homomorphism from the square")
    zero = ambient.unit
    if not (np.diagonal(d) == zero).all():
        raise NotSlominski("d(x, x) is not constantly 0")
    if not _is_perm_rows(d.T).all():
        raise NotSlominski("no adjoint satisfies x o d(z, x) = z")
    add, neg = ambient.mult, ambient.inv
    n = ambient.order
    o = adjoint(d)
    f = d[:, zero]
    g = o[zero, :]
    x, y = np.ix_(range(n), range(n))
    if not (d == f[add[x, neg[y]]]).all():
        raise AssertionError("d(x, y) != f(x - y)")
    if not (o == add[x, g[y]]).all():
        raise AssertionError("x o y != x + g(y)")
    if not (g[f] == np.arange(n)).all():
        raise AssertionError("g f != id")
    if len(set(f.tolist())) != n:
        raise AssertionError("f is not bijective")
    return _frozen(f), _frozen(g)


def extract_alexander(ambient: FiniteGroup, op) -> AlexanderDatum:
    """Recover ``f = - > 0`` from an internal prequandle and check ``op`` is
    the Alexander operation of ``f``."""
    op = op_table(op)
    if not internal_check(ambient, op):
        raise NotInternal("operation is not a homomorphism from the square")
    flags = classify(op)
    if S.Prequandle not in flags:
        raise NotPrequandle("operation is not an idempotent ILO operation")
    f = op[:, ambient.unit]
    datum = AlexanderDatum(ambient, tuple(f.tolist()))
    try:
        rebuilt = alexander(datum)
    except NotAutomorphism as exc:
        raise AssertionError(f"x > 0 is not an automorphism: {exc}") from exc
    if not np.array_equal(rebuilt.d, op):
        raise AssertionError("operation differs from the Alexander quandle of x > 0")
    return datum


def internal_operations(ambient: FiniteGroup) -> Iterator[np.ndarray]:
    """Every internal binary operation on ``ambient``, as a table, obtained
    by brute force over homomorphisms ``A x A -> A``."""
    if not ambient.is_abelian:
        raise NotAbelian(f"{ambient.name} is not commutative")
    n = ambient.order
    square = direct_product(ambient, ambient)
    for phi in homomorphisms(square, ambient):
        yield _frozen(phi.reshape(n, n))


def umag_hst_abelian_check(star, d, unit: int = 0) -> bool:
    """Are the unitary magma ``star`` and the hypersubtraction ``d`` (sharing
    ``unit``) homomorphisms of each other?

    When they are, ``star`` is checked to be an abelian group law with
    ``d(x, y) = x star y^-1``; a failure there raises AssertionError.
    """
    star = op_table(star)
    d = op_table(d)
    n = len(star)
    if len(d) != n:
        raise ValueError("operations live on carriers of different sizes")
    idx = np.arange(n)
    if not ((star[unit] == idx).all() and (star[:, unit] == idx).all()):
        raise UnitMismatch(f"{unit} is not a two-sided unit of star")
    d_flags = classify(d)
    if S.Hypersubtraction not in d_flags:
        raise NotHypersubtraction("d is not a hypersubtraction")
    if d[0, 0] != unit:
        raise UnitMismatch("d and star have different units")
    a, b, c, e = np.ix_(*([idx] * 4))
    # star is a d-homomorphism  <=>  d is a star-homomorphism
    mutual = bool((star[d[a, b], d[c, e]] == d[star[a, c], star[b, e]]).all())
    if mutual:
        try:
            group = FiniteGroup.from_table(star)
        except InvalidTable as exc:
            raise AssertionError(f"mutually internal pair whose star is not a group: {exc}") from exc
        if group.unit != unit or not group.is_abelian:
            raise AssertionError("mutually internal pair whose star is not an abelian group")
        x, y = np.ix_(idx, idx)
        if not (d == star[x, group.inv[y]]).all():
            raise AssertionError("d(x, y) != x star y^-1")
    return mutual
