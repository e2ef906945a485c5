"""Digroups and left skew braces, with their two forgetful hyperindexes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AlgebraError, NotBihomomorphism, NotHomomorphism, NotSection, UnitMismatch
from .groups import FiniteGroup
from .points import SplitEpi, group_index, split_epi

__all__ = ["Digroup", "SkewBrace", "digroup", "is_skew_brace", "skew_brace",
           "trivial_brace", "opposite_brace", "brace_indexes", "brace_split_epi"]


@dataclass(frozen=True, eq=False)
class Digroup:
    star: FiniteGroup
    circ: FiniteGroup

    @property
    def order(self) -> int:
        return self.star.order

    @property
    def unit(self) -> int:
        return self.star.unit

    @property
    def tables(self) -> tuple:
        return (self.star.mult, self.circ.mult)


@dataclass(frozen=True, eq=False)
class SkewBrace(Digroup):
    pass


def digroup(star: FiniteGroup, circ: FiniteGroup) -> Digroup:
    if star.order != circ.order:
        raise AlgebraError("the two laws live on carriers of different sizes")
    if star.unit != circ.unit:
        raise UnitMismatch(f"units differ: {star.unit} vs {circ.unit}")
    return Digroup(star, circ)


def is_skew_brace(dg: Digroup) -> bool:
    """``a o (b * c) = (a o b) * a^-* * (a o c)`` for all ``a, b, c``."""
    if dg.star.unit != dg.circ.unit:
        raise UnitMismatch(f"units differ: {dg.star.unit} vs {dg.circ.unit}")
    st, ci, inv = dg.star.mult, dg.circ.mult, dg.star.inv
    n = dg.order
    a, b, c = np.ix_(range(n), range(n), range(n))
    lhs = ci[a, st[b, c]]
    rhs = st[st[ci[a, b], inv[a]], ci[a, c]]
    return bool((lhs == rhs).all())


def skew_brace(star: FiniteGroup, circ: FiniteGroup) -> SkewBrace:
    dg = digroup(star, circ)
    if not is_skew_brace(dg):
        raise AlgebraError("the brace compatibility axiom fails")
    return SkewBrace(star, circ)


def trivial_brace(g: FiniteGroup) -> SkewBrace:
    return skew_brace(g, g)


def opposite_brace(g: FiniteGroup) -> SkewBrace:
    """``(G, *, *^op)``: ``a o b = b * a``."""
    return skew_brace(g, g.opposite())


def brace_split_epi(total: Digroup, base: Digroup, f, s) -> SplitEpi:
    """Split epi of digroups; ``f`` and ``s`` must respect both laws."""
    try:
        return split_epi(total, base, f, s)
    except NotHomomorphism as exc:
        raise NotBihomomorphism(str(exc)) from exc


def brace_indexes(e: SplitEpi) -> tuple:
    """The hyperindexes of the two underlying group split epis: ``(star, circ)``."""
    if not isinstance(e.total, Digroup):
        raise TypeError("brace_indexes needs a split epimorphism of digroups")
    X, Y = e.total, e.base
    witnesses = []
    for law in ("star", "circ"):
        try:
            part = split_epi(getattr(X, law), getattr(Y, law), e.f, e.s)
        except (NotHomomorphism, NotSection) as exc:
            raise NotBihomomorphism(f"{law} law: {exc}") from exc
        witnesses.append(group_index(part))
    return tuple(witnesses)
