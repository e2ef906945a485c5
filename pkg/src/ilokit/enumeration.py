"""Exhaustive enumeration of models by class, isomorphism testing and
canonical forms (lexicographically least relabelled table)."""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

import numpy as np

from .core import IloModel, Magma, StructureClass, _frozen, adjoint, classify, model
from .errors import OrderTooLarge
from .search import MEDIAL, SELF_DISTRIBUTIVE, search_tables

__all__ = [
    "EnumerationRequest",
    "enumerate_models",
    "enumerate_tables",
    "max_order_for",
    "canonical_table",
    "canonical_model",
    "are_isomorphic",
    "iso_classes",
    "latin_prequandles",
    "census",
    "census_stream",
]

S = StructureClass
QUANDLE_LIKE = frozenset({S.Prequandle, S.Quandle, S.Autonomous})
DEFAULT_MAX_ORDER = 5
DEFAULT_MAX_ORDER_QUANDLES = 6


def max_order_for(cls: StructureClass) -> int:
    env = os.environ.get("ILO_MAX_ORDER")
    if env:
        return int(env)
    return DEFAULT_MAX_ORDER_QUANDLES if cls in QUANDLE_LIKE else DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class EnumerationRequest:
    order: int
    cls: StructureClass
    up_to_iso: bool = False
    partition: Optional[tuple] = None  # (shard index, shard count)
    max_order: Optional[int] = None

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        cap = self.max_order if self.max_order is not None else max_order_for(self.cls)
        if self.order > cap:
            raise OrderTooLarge(f"order {self.order} exceeds the cap {cap} for {self.cls.value}")
        if self.partition is not None:
            i, k = self.partition
            if not 0 <= i < k:
                raise ValueError(f"shard index {i} must lie in 0..{k - 1}")


def _symmetric(t, n):
    x, y = np.ix_(range(n), range(n))
    return t[x, y], t[y, x]


def _involutive(t, n):
    # x o y = d(y, x)  <=>  d(d(y, x), x) = y
    x, y = np.ix_(range(n), range(n))
    return t[t[y, x], x], np.broadcast_to(y, (n, n))


def _right_transitive(t, n):
    # d(d(x, z), d(y, z)) = d(x, y): equivalent to associativity of the adjoint
    x, y, z = np.ix_(range(n), range(n), range(n))
    return t[t[x, z], t[y, z]], np.broadcast_to(t[x, y], (n, n, n))


def _search_config(n: int, cls: StructureClass) -> dict:
    diag_unit = {(x, x): 0 for x in range(n)}
    subtraction = {**diag_unit, **{(x, 0): x for x in range(n)}}
    idempotent = {(x, x): x for x in range(n)}
    configs = {
        S.Ilo: dict(distinct_cols=True),
        S.Latin: dict(distinct_cols=True, distinct_rows=True),
        S.Symmetric: dict(distinct_cols=True, identities=[_symmetric]),
        S.Involutive: dict(distinct_cols=True, identities=[_involutive]),
        S.Slominski: dict(distinct_cols=True, fixed=diag_unit),
        S.HyperSlominski: dict(distinct_cols=True, fixed=diag_unit),
        S.Subtraction: dict(fixed=subtraction),
        S.Hypersubtraction: dict(distinct_cols=True, fixed=subtraction),
        S.GroupDerived: dict(
            distinct_cols=True,
            fixed=subtraction,
            identities=[_right_transitive],
            accept=lambda t: S.GroupDerived in classify(t, 0),
        ),
        S.Prequandle: dict(distinct_cols=True, fixed=idempotent),
        S.Quandle: dict(distinct_cols=True, fixed=idempotent, identities=[SELF_DISTRIBUTIVE]),
        S.Autonomous: dict(distinct_cols=True, fixed=idempotent, identities=[MEDIAL]),
    }
    return configs[cls]


def _is_pointed(cls: StructureClass) -> bool:
    return cls in {S.Slominski, S.HyperSlominski, S.Subtraction, S.Hypersubtraction, S.GroupDerived}


def enumerate_tables(order: int, cls: StructureClass) -> Iterator[tuple]:
    """Flat row-major tables of every labelled model of ``cls``, in lexicographic order.

    Pointed classes use 0 as the unit.  No order cap is applied here.
    """
    return search_tables(order, **_search_config(order, cls))


def latin_prequandles(order: int) -> Iterator[IloModel]:
    """Idempotent latin squares read as prequandles, in lexicographic order."""
    fixed = {(x, x): x for x in range(order)}
    for table in search_tables(order, fixed=fixed, distinct_cols=True, distinct_rows=True):
        yield _wrap(table, order, None, True)


def _wrap(table: tuple, n: int, unit: Optional[int], ilo: bool):
    d = _frozen(np.array(table, dtype=np.int64).reshape(n, n))
    if ilo:
        return IloModel(d, adjoint(d), unit)
    return model(d, unit, normalize=False)


def _shard(req: EnumerationRequest) -> Iterator[tuple]:
    shard, shards = req.partition if req.partition is not None else (0, 1)
    for j, table in enumerate(enumerate_tables(req.order, req.cls)):
        if j % shards == shard:
            yield table


def _is_canonical(table: tuple, n: int, unit: Optional[int]) -> bool:
    arr = np.array(table, dtype=np.int64).reshape(n, n)
    return bool(np.array_equal(canonical_table(arr, unit)[0], arr))


def enumerate_models(req: EnumerationRequest) -> Iterator:
    """Every model of the requested class exactly once, in lexicographic table order.

    With ``up_to_iso`` only canonical representatives (tables that are
    lexicographically least in their isomorphism class) are produced.
    """
    n = req.order
    unit = 0 if _is_pointed(req.cls) else None
    ilo = req.cls is not S.Subtraction
    for table in _shard(req):
        if req.up_to_iso and not _is_canonical(table, n, unit):
            continue
        yield _wrap(table, n, unit, ilo)


def census_stream(req: EnumerationRequest) -> Iterator[tuple]:
    """``(model, is_canonical)`` for every labelled model of the request's shard.

    Each isomorphism class has exactly one canonical member, so counting
    the flags gives the number of classes.
    """
    n = req.order
    unit = 0 if _is_pointed(req.cls) else None
    ilo = req.cls is not S.Subtraction
    for table in _shard(req):
        yield _wrap(table, n, unit, ilo), _is_canonical(table, n, unit)


def census(req: EnumerationRequest) -> dict:
    labeled = iso = 0
    for _, canon in census_stream(req):
        labeled += 1
        iso += canon
    return {"class": req.cls.value, "order": req.order, "labeled": labeled, "iso": iso}


@lru_cache(maxsize=None)
def _perms(n: int, fix_zero: bool) -> tuple:
    if fix_zero:
        rest = itertools.permutations(range(1, n))
        perms = np.array([(0,) + p for p in rest], dtype=np.int64).reshape(-1, n)
    else:
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    invs = np.argsort(perms, axis=1)
    return perms, invs


def _lexmin_row(rows: np.ndarray) -> int:
    cand = np.arange(len(rows))
    for col in range(rows.shape[1]):
        vals = rows[cand, col]
        cand = cand[vals == vals.min()]
        if len(cand) == 1:
            break
    return int(cand[0])


def canonical_table(d, unit: Optional[int] = None) -> tuple:
    """Lexicographically least relabelling of ``d`` and a permutation (old -> new) reaching it.

    Pointed tables only admit relabellings sending the unit to 0.
    """
    d = np.asarray(d, dtype=np.int64)
    n = len(d)
    if unit is not None and unit != 0:
        swap = np.arange(n)
        swap[[0, unit]] = swap[[unit, 0]]
        d = swap[d[np.ix_(swap, swap)]]
    perms, invs = _perms(n, unit is not None)
    # relabelled[k, i, j] = perms[k, d[invs[k, i], invs[k, j]]]
    inner = d[invs[:, :, None], invs[:, None, :]].reshape(len(perms), -1)
    relabelled = np.take_along_axis(perms, inner, axis=1)
    k = _lexmin_row(relabelled)
    perm = perms[k]
    if unit is not None and unit != 0:
        perm = perm[swap]
    return _frozen(relabelled[k].reshape(n, n)), _frozen(perm)


def canonical_model(m):
    canon, _ = canonical_table(m.d, m.unit)
    unit = None if m.unit is None else 0
    if isinstance(m, IloModel):
        return IloModel(canon, adjoint(canon), unit)
    return Magma(canon, unit)


def _cycle_type(perm: np.ndarray) -> tuple:
    seen = np.zeros(len(perm), dtype=bool)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, k = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths))


def _element_invariants(m) -> list:
    d = m.d
    out = []
    for x in range(m.order):
        col = d[:, x]
        col_sig = _cycle_type(col) if len(set(col.tolist())) == m.order else tuple(sorted(Counter(col.tolist()).values()))
        row_sig = tuple(sorted(Counter(d[x].tolist()).values()))
        out.append((int(d[x, x] == x), x == m.unit, col_sig, row_sig))
    return out


def are_isomorphic(a, b) -> Optional[tuple]:
    """A bijection ``phi`` with ``phi(d_a(x, y)) = d_b(phi x, phi y)`` (fixing units), or None.

    The witness is the first one in lexicographic order of ``(phi(0), phi(1), ...)``.
    """
    n = a.order
    if b.order != n or (a.unit is None) != (b.unit is None):
        return None
    if a.flags != b.flags:
        return None
    inv_a = _element_invariants(a)
    inv_b = _element_invariants(b)
    if sorted(inv_a) != sorted(inv_b):
        return None
    da, db = a.d, b.d
    phi = [-1] * n
    used = [False] * n
    candidates = []
    for x in range(n):
        if a.unit is not None and x == a.unit:
            candidates.append([b.unit])
        else:
            candidates.append([y for y in range(n) if inv_b[y] == inv_a[x]])

    # each pair (p, q) is checked once p, q and d(p, q) all have images
    due = [[] for _ in range(n)]
    for p in range(n):
        for q in range(n):
            due[max(p, q, int(da[p, q]))].append((p, q, int(da[p, q])))

    def consistent(i: int) -> bool:
        return all(phi[c] == db[phi[p], phi[q]] for p, q, c in due[i])

    def extend(i: int) -> bool:
        if i == n:
            return True
        for y in candidates[i]:
            if used[y]:
                continue
            phi[i] = y
            used[y] = True
            if consistent(i) and extend(i + 1):
                return True
            used[y] = False
            phi[i] = -1
        return False

    if extend(0):
        return tuple(phi)
    return None


def iso_classes(models: Iterable) -> list:
    """Group models into isomorphism classes: ``[(canonical representative, count), ...]``
    sorted by the representative's table."""
    counts: dict = {}
    reps: dict = {}
    for m in models:
        canon, _ = canonical_table(m.d, m.unit)
        key = (canon.tobytes(), m.unit is None, type(m).__name__)
        if key not in counts:
            counts[key] = 0
            reps[key] = canonical_model(m)
        counts[key] += 1
    order = sorted(counts, key=lambda k: (reps[k].order, reps[k].d.ravel().tolist()))
    return [(reps[k], counts[k]) for k in order]
