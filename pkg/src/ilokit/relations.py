"""Acupuncturing elements and split epis, pullbacks of split epis of
prequandles, reflexive relations, the Mal'tsev term of a latin prequandle
and autonomy.

Throughout, the prequandle operation ``x > y`` is the ``d`` table of an
IloModel: every column map ``z -> z > x`` is a bijection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

import numpy as np

from .constructions import closure_trace, product, submodel
from .core import IloModel, StructureClass, _frozen
from .errors import NotLatin, NotPrequandle
from .points import SplitEpi

__all__ = [
    "is_acupuncturing_element",
    "fiber_thetas",
    "is_acupuncturing_split_epi",
    "PullbackOfSplitEpis",
    "pullback",
    "jointly_strongly_epic_check",
    "theta_witness_check",
    "ReflexiveRelation",
    "RelationReport",
    "reflexive_relation",
    "check_relation",
    "reflexive_relations",
    "maltsev_term",
    "AutonomyReport",
    "check_autonomy_naturality",
]

S = StructureClass


def _require_prequandle(m) -> None:
    if not isinstance(m, IloModel) or S.Prequandle not in m.flags:
        raise NotPrequandle("expected a prequandle (idempotent ILO model)")


def is_acupuncturing_element(m: IloModel, x: int) -> bool:
    """Is ``y -> x > y`` a bijection?"""
    _require_prequandle(m)
    return len(set(m.d[x].tolist())) == m.order


def fiber_thetas(e: SplitEpi) -> Optional[dict]:
    """For each base element ``y``, the inverse of ``s(y) > -`` on the fiber
    ``f^-1(y)``, as a dict ``{element: preimage}``; None when some ``s(y)``
    is not acupuncturing in its fiber."""
    X = e.total
    thetas = {}
    for y in range(e.base.order):
        fiber = e.fiber(y)
        row = {int(X.d[e.s[y], w]): w for w in fiber}
        if set(row) != set(fiber):
            return None
        thetas[y] = row
    return thetas


def is_acupuncturing_split_epi(e: SplitEpi) -> bool:
    _require_prequandle(e.total)
    return fiber_thetas(e) is not None


@dataclass(frozen=True, eq=False)
class PullbackOfSplitEpis:
    left: SplitEpi  # (f, s): X -> Z
    right: SplitEpi  # (g, t): Y -> Z
    model: IloModel  # the pullback, relabelled 0..m-1
    pairs: tuple  # pairs[i] = (x, y)
    iota_x: np.ndarray
    iota_y: np.ndarray

    @property
    def index(self) -> dict:
        return {p: i for i, p in enumerate(self.pairs)}


def pullback(left: SplitEpi, right: SplitEpi) -> PullbackOfSplitEpis:
    """``X x_Z Y = {(x, y) | f(x) = g(y)}`` with the injections
    ``x -> (x, t f x)`` and ``y -> (s g y, y)``."""
    X, Y = left.total, right.total
    full = product(X, Y)
    m = Y.order
    members = [x * m + y for x in range(X.order) for y in range(m) if left.f[x] == right.f[y]]
    sub, elems = submodel(full, members)
    pairs = tuple((e // m, e % m) for e in elems)
    pos = {p: i for i, p in enumerate(pairs)}
    iota_x = [pos[x, int(right.s[left.f[x]])] for x in range(X.order)]
    iota_y = [pos[int(left.s[right.f[y]]), y] for y in range(m)]
    return PullbackOfSplitEpis(left, right, sub, pairs, _frozen(iota_x), _frozen(iota_y))


def jointly_strongly_epic_check(p: PullbackOfSplitEpis, trace: Optional[list] = None) -> bool:
    """Does the subalgebra generated by both injections fill the pullback?

    If ``trace`` is a list, the closure order (as ``(x, y)`` pairs) is
    appended to it.
    """
    seed = set(p.iota_x.tolist()) | set(p.iota_y.tolist())
    reached = closure_trace(p.model, seed)
    if trace is not None:
        trace.extend(p.pairs[i] for i in reached)
    return len(reached) == p.model.order


def theta_witness_check(p: PullbackOfSplitEpis) -> bool:
    """Check ``(x, y) = iota_X(s(z) o x) > iota_Y(theta_z(y))`` on every pair,
    with ``z = f(x)``, when the right leg is acupuncturing."""
    thetas = fiber_thetas(p.right)
    if thetas is None:
        return False
    X = p.left.total
    d = p.model.d
    for i, (x, y) in enumerate(p.pairs):
        z = int(p.left.f[x])
        a = p.iota_x[int(X.adjoint[p.left.s[z], x])]
        b = p.iota_y[thetas[z][y]]
        if d[a, b] != i:
            return False
    return True


@dataclass(frozen=True, eq=False)
class ReflexiveRelation:
    base: IloModel
    pairs: frozenset

    def related(self, x: int) -> list:
        return sorted(y for (a, y) in self.pairs if a == x)


def reflexive_relation(base: IloModel, pairs: Iterable) -> ReflexiveRelation:
    _require_prequandle(base)
    pairs = frozenset((int(a), int(b)) for a, b in pairs)
    n = base.order
    if any((x, x) not in pairs for x in range(n)):
        raise ValueError("relation is not reflexive")
    d = base.d
    for a, b in pairs:
        for c, e in pairs:
            if (int(d[a, c]), int(d[b, e])) not in pairs:
                raise ValueError("relation is not closed under the operation")
    return ReflexiveRelation(base, pairs)


class RelationReport(NamedTuple):
    acupuncturing: bool
    transitive: bool
    classes_latin: Optional[bool]  # None unless the relation is an equivalence


def _is_transitive(pairs: frozenset) -> bool:
    succ: dict = {}
    for a, b in pairs:
        succ.setdefault(a, set()).add(b)
    return all(c in succ[a] for a, b in pairs for c in succ.get(b, ()))


def check_relation(r: ReflexiveRelation) -> RelationReport:
    d = r.base.d
    n = r.base.order
    # fiber of d0 over x is {(x, w) | x R w}; (x, x) > (x, w) = (x, x > w)
    acup = True
    for x in range(n):
        fiber = r.related(x)
        if sorted(int(d[x, w]) for w in fiber) != fiber:
            acup = False
            break
    transitive = _is_transitive(r.pairs)
    symmetric = all((b, a) in r.pairs for a, b in r.pairs)
    classes_latin = None
    if transitive and symmetric:
        classes_latin = True
        for x in range(n):
            cls = r.related(x)
            sub = d[np.ix_(cls, cls)]
            if any(len(set(row.tolist())) != len(cls) for row in sub):
                classes_latin = False
                break
    return RelationReport(acup, transitive, classes_latin)


def reflexive_relations(base: IloModel) -> Iterator[ReflexiveRelation]:
    """Every reflexive relation on ``base`` closed under ``>``, ordered by size
    and then by sorted pair list."""
    _require_prequandle(base)
    n = base.order
    sq = product(base, base)
    diag = [x * n + x for x in range(n)]
    start = frozenset(closure_trace(sq, diag))
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for closed in frontier:
            for e in range(n * n):
                if e in closed:
                    continue
                c = frozenset(closure_trace(sq, closed | {e}))
                if c not in found:
                    found.add(c)
                    nxt.append(c)
        frontier = nxt
    for closed in sorted(found, key=lambda c: (len(c), sorted(c))):
        yield ReflexiveRelation(base, frozenset((e // n, e % n) for e in closed))


def maltsev_term(m: IloModel) -> np.ndarray:
    """``p(x, y, z) = (y o x) > delta(z, y)`` where ``delta(z, y)`` is the
    ``w`` with ``y > w = z``; returned as an n x n x n array."""
    if S.Latin not in m.flags:
        raise NotLatin("the Mal'tsev term needs a latin prequandle")
    _require_prequandle(m)
    n = m.order
    d, o = m.d, m.adjoint
    delta = np.empty_like(d)
    rows = np.arange(n)[:, None]
    delta[d, rows] = np.arange(n)[None, :]  # delta[y > w, y] = w
    x, y, z = np.ix_(range(n), range(n), range(n))
    p = d[o[y, x], delta[z, y]]
    if not ((p[x, x, z] == z).all() and (p[x, z, z] == np.broadcast_to(x, (n, 1, n))).all()):
        raise AssertionError("Mal'tsev identities fail")
    return _frozen(p)


class AutonomyReport(NamedTuple):
    autonomous: bool
    p_is_homomorphism: Optional[bool]  # None unless the prequandle is latin


def _p_is_homomorphism(d: np.ndarray, p: np.ndarray) -> bool:
    # p(a > a', b > b', c > c') == p(a, b, c) > p(a', b', c')
    n = len(d)
    a, a2, b, b2, c, c2 = np.ix_(*([np.arange(n)] * 6))
    return bool((p[d[a, a2], d[b, b2], d[c, c2]] == d[p[a, b, c], p[a2, b2, c2]]).all())


def check_autonomy_naturality(m: IloModel) -> AutonomyReport:
    _require_prequandle(m)
    autonomous = S.Autonomous in m.flags
    hom = None
    if S.Latin in m.flags:
        hom = _p_is_homomorphism(m.d, maltsev_term(m))
        if autonomous and not hom:
            raise AssertionError("autonomous latin prequandle whose Mal'tsev term is not a homomorphism")
    if autonomous and S.Quandle not in m.flags:
        raise AssertionError("autonomous prequandle that is not a quandle")
    return AutonomyReport(autonomous, hom)
