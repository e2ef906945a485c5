"""Operation tables, ILO models and their classification.

Tables are square ``numpy`` integer arrays with ``table[a, b] = op(a, b)``
(row index = left argument) over the carrier ``{0, ..., n-1}``.  Arrays
handed out by this module are read-only.

A note on axiom i): it is checked in the form ``d(x o z, x) = z``.  The
variant ``d(x o z, z) = x`` that also circulates fails on the ILO setting
of any non-trivial group, so it is not used anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import InvalidTable, NonInvertibleTranslation, NotSlominski

__all__ = [
    "StructureClass",
    "Magma",
    "IloModel",
    "op_table",
    "adjoint",
    "classify",
    "model",
    "relabel_table",
    "relabel",
    "dual",
    "check_associativity_equivalence",
    "check_commutativity_equivalence",
    "check_slominski_identities",
    "SlominskiReport",
]


class StructureClass(enum.Enum):
    Ilo = "Ilo"
    Latin = "Latin"
    Symmetric = "Symmetric"
    Involutive = "Involutive"
    Slominski = "Slominski"
    HyperSlominski = "HyperSlominski"
    Subtraction = "Subtraction"
    Hypersubtraction = "Hypersubtraction"
    Prequandle = "Prequandle"
    Quandle = "Quandle"
    Autonomous = "Autonomous"
    GroupDerived = "GroupDerived"

    @classmethod
    def parse(cls, name: str) -> "StructureClass":
        key = name.replace("-", "").replace("_", "").lower()
        for member in cls:
            if member.value.lower() == key:
                return member
        raise ValueError(f"unknown structure class {name!r}")


_CLASS_ORDER = {c: i for i, c in enumerate(StructureClass)}

# Classes whose definition involves a distinguished element.
POINTED_CLASSES = frozenset({
    StructureClass.Slominski,
    StructureClass.HyperSlominski,
    StructureClass.Subtraction,
    StructureClass.Hypersubtraction,
    StructureClass.GroupDerived,
})


def sorted_flags(flags) -> list[str]:
    return [c.value for c in sorted(flags, key=_CLASS_ORDER.__getitem__)]


def op_table(data) -> np.ndarray:
    """Validate ``data`` as an n x n operation table and return a read-only copy."""
    arr = np.array(data, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise InvalidTable(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise InvalidTable(f"table entries must lie in 0..{n - 1}")
    arr.flags.writeable = False
    return arr


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.flags.writeable = False
    return arr


def _is_perm_rows(arr: np.ndarray) -> np.ndarray:
    """Boolean per row: does that row hit every value exactly once?"""
    n = arr.shape[1]
    ordered = np.sort(arr, axis=1)
    return (ordered == np.arange(n)).all(axis=1)


def adjoint(d) -> np.ndarray:
    """The adjoint ``o`` of an ILO operation: ``x o y`` is the ``t`` with ``d(t, x) = y``.

    Raises NonInvertibleTranslation(x) for the first ``x`` whose column is
    not a permutation.
    """
    d = op_table(d)
    n = len(d)
    cols = d.T  # cols[x] = the map z -> d(z, x)
    ok = _is_perm_rows(cols)
    if not ok.all():
        raise NonInvertibleTranslation(int(np.flatnonzero(~ok)[0]))
    adj = np.empty_like(d)
    rows = np.arange(n)[:, None]
    adj[rows, cols] = np.arange(n)[None, :]
    return _frozen(adj)


def _recover_unit(d: np.ndarray, unit: Optional[int]) -> Optional[int]:
    if unit is not None:
        return int(unit)
    diag = np.diagonal(d)
    if (diag == diag[0]).all():
        return int(diag[0])
    return None


def _self_distributive(d: np.ndarray) -> bool:
    # (x > y) > z == (x > z) > (y > z)
    n = len(d)
    x, y, z = np.ix_(range(n), range(n), range(n))
    return bool((d[d[x, y], z] == d[d[x, z], d[y, z]]).all())


def _medial(d: np.ndarray) -> bool:
    # (x > x') > (y > y') == (x > y) > (x' > y')
    n = len(d)
    x, x2, y, y2 = np.ix_(range(n), range(n), range(n), range(n))
    return bool((d[d[x, x2], d[y, y2]] == d[d[x, y], d[x2, y2]]).all())


def _associative(op: np.ndarray) -> bool:
    n = len(op)
    x, y, z = np.ix_(range(n), range(n), range(n))
    return bool((op[op[x, y], z] == op[x, op[y, z]]).all())


def classify(d, unit: Optional[int] = None) -> frozenset:
    """Return every StructureClass whose defining identities hold for ``d``.

    When ``unit`` is omitted and the diagonal of ``d`` is constant, that
    constant is used as the distinguished element for the pointed classes.
    """
    S = StructureClass
    d = op_table(d)
    n = len(d)
    idx = np.arange(n)
    diag = np.diagonal(d)
    unit = _recover_unit(d, unit)
    if unit is not None and not 0 <= unit < n:
        raise InvalidTable(f"unit {unit} outside carrier of order {n}")
    flags = set()

    diag_is_unit = unit is not None and bool((diag == unit).all())
    if diag_is_unit and (d[:, unit] == idx).all():
        flags.add(S.Subtraction)

    if not _is_perm_rows(d.T).all():
        return frozenset(flags)
    adj = adjoint(d)
    flags.add(S.Ilo)
    if _is_perm_rows(d).all():
        flags.add(S.Latin)
    if (d == d.T).all():
        flags.add(S.Symmetric)
    if (adj == d.T).all():
        flags.add(S.Involutive)
    if diag_is_unit:
        # On a finite carrier the Slominski axioms already force d(-, x) to be
        # bijective, so the hyper variant coincides with the plain one.
        flags.update((S.Slominski, S.HyperSlominski))
        if S.Subtraction in flags:
            flags.add(S.Hypersubtraction)
    if (diag == idx).all():
        flags.add(S.Prequandle)
        if _self_distributive(d):
            flags.add(S.Quandle)
        if _medial(d):
            flags.add(S.Autonomous)
    if (
        unit is not None
        and (adj[unit] == idx).all()
        and (adj[:, unit] == idx).all()
        and _associative(adj)
    ):
        flags.add(S.GroupDerived)
    return frozenset(flags)


def relabel_table(table, perm) -> np.ndarray:
    """Transport ``table`` along the bijection ``perm`` (old label -> new label)."""
    table = np.asarray(table)
    perm = np.asarray(perm, dtype=np.int64)
    inv = np.argsort(perm)
    return _frozen(perm[table[np.ix_(inv, inv)]])


def _unit_transposition(n: int, unit: int) -> np.ndarray:
    perm = np.arange(n)
    perm[[0, unit]] = perm[[unit, 0]]
    return perm


class _TableStructure:
    """Behaviour shared by Magma and IloModel."""

    d: np.ndarray
    unit: Optional[int]

    @property
    def order(self) -> int:
        return len(self.d)

    @property
    def tables(self) -> tuple:
        """Operation tables a homomorphism must preserve."""
        return (self.d,)

    @cached_property
    def flags(self) -> frozenset:
        return classify(self.d, self.unit)

    def has(self, *classes: StructureClass) -> bool:
        return all(c in self.flags for c in classes)

    def _key(self):
        return (type(self).__name__, self.d.tobytes(), self.order, self.unit)

    def __eq__(self, other):
        if not isinstance(other, _TableStructure):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        unit = "" if self.unit is None else f", unit={self.unit}"
        return f"{type(self).__name__}(order={self.order}{unit}, d={self.d.tolist()})"


@dataclass(frozen=True, eq=False, repr=False)
class Magma(_TableStructure):
    """A bare binary operation, possibly pointed; no invertibility assumed."""

    d: np.ndarray
    unit: Optional[int] = None
    relabeling: Optional[tuple] = field(default=None, compare=False)

    kind = "magma"


@dataclass(frozen=True, eq=False, repr=False)
class IloModel(_TableStructure):
    """An ILO setting ``(X, d, o)`` with optional distinguished element.

    ``relabeling`` records the permutation (old -> new) applied when a unit
    other than 0 was moved to 0 on construction.
    """

    d: np.ndarray
    adjoint: np.ndarray
    unit: Optional[int] = None
    relabeling: Optional[tuple] = field(default=None, compare=False)

    kind = "ilo"

    @classmethod
    def from_table(cls, d, unit: Optional[int] = None, *, normalize: bool = True) -> "IloModel":
        d = op_table(d)
        relabeling = None
        if unit is not None and unit != 0 and normalize:
            perm = _unit_transposition(len(d), int(unit))
            d = relabel_table(d, perm)
            relabeling = tuple(int(p) for p in perm)
            unit = 0
        return cls(d, adjoint(d), None if unit is None else int(unit), relabeling)

    def circ(self, x: int, y: int) -> int:
        return int(self.adjoint[x, y])

    def __call__(self, x: int, y: int) -> int:
        return int(self.d[x, y])


def model(d, unit: Optional[int] = None, *, normalize: bool = True):
    """Build an IloModel when ``d`` is ILO and a Magma otherwise."""
    d = op_table(d)
    if _is_perm_rows(d.T).all():
        return IloModel.from_table(d, unit, normalize=normalize)
    relabeling = None
    if unit is not None and unit != 0 and normalize:
        perm = _unit_transposition(len(d), int(unit))
        d = relabel_table(d, perm)
        relabeling = tuple(int(p) for p in perm)
        unit = 0
    return Magma(d, None if unit is None else int(unit), relabeling)


def relabel(m, perm):
    """Transport a model along ``perm`` (old -> new); the unit moves with it."""
    perm = np.asarray(perm, dtype=np.int64)
    d = relabel_table(m.d, perm)
    unit = None if m.unit is None else int(perm[m.unit])
    if isinstance(m, IloModel):
        return IloModel(d, adjoint(d), unit)
    return Magma(d, unit)


def dual(m: IloModel) -> IloModel:
    """The dual ILO setting: ``d'(x, y) = y o x`` and ``x o' y = d(y, x)``."""
    return IloModel(_frozen(m.adjoint.T), _frozen(m.d.T), m.unit)


def _grid3(n):
    return np.ix_(range(n), range(n), range(n))


def check_associativity_equivalence(m: IloModel) -> tuple:
    """Evaluate the four equivalent associativity conditions exhaustively.

    Returns ``(assoc, c2, c3, c4)`` where

    * ``assoc``: ``o`` is associative,
    * ``c2``: ``d(y, z) o d(x, y) = d(x, z)``,
    * ``c3``: ``d(d(x, z), d(y, z)) = d(x, y)``,
    * ``c4``: ``d(x, y) o t = d(x o t, y)``.
    """
    d, o = m.d, m.adjoint
    x, y, z = _grid3(m.order)
    c1 = (o[o[x, y], z] == o[x, o[y, z]]).all()
    c2 = (o[d[y, z], d[x, y]] == d[x, z]).all()
    c3 = (d[d[x, z], d[y, z]] == d[x, y]).all()
    t = z
    c4 = (o[d[x, y], t] == d[o[x, t], y]).all()
    return (bool(c1), bool(c2), bool(c3), bool(c4))


def check_commutativity_equivalence(m: IloModel) -> tuple:
    """``(o commutative, x = d(x o y, y), d(y, d(y, x)) = x)``."""
    d, o = m.d, m.adjoint
    n = m.order
    x, y = np.ix_(range(n), range(n))
    c1 = (o == o.T).all()
    c2 = (d[o[x, y], y] == x).all()
    c3 = (d[y, d[y, x]] == x).all()
    return (bool(c1), bool(c2), bool(c3))


class SlominskiReport(NamedTuple):
    right_unit: bool  # x o 1 = x
    unit_recovers: bool  # 1 o d(x, 1) = x
    right_inverse: bool  # x o d(1, x) = 1
    separates: bool  # x = y  <=>  d(x, y) = 1

    def all(self) -> bool:
        return all(self)


def check_slominski_identities(m: IloModel) -> SlominskiReport:
    if StructureClass.Slominski not in m.flags:
        raise NotSlominski("model does not carry the Slominski flag")
    d, o = m.d, m.adjoint
    u = m.unit if m.unit is not None else int(d[0, 0])
    n = m.order
    idx = np.arange(n)
    x, y = np.ix_(idx, idx)
    return SlominskiReport(
        bool((o[:, u] == idx).all()),
        bool((o[u, d[:, u]] == idx).all()),
        bool((o[idx, d[u, idx]] == u).all()),
        bool(((x == y) == (d == u)).all()),
    )


def as_sequence(values: Sequence[int]) -> np.ndarray:
    """Read-only int64 array from an element map."""
    return _frozen(np.asarray(values, dtype=np.int64))
