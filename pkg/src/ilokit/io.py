"""JSON interchange.

Every record carries a ``"kind"``.  Tables are nested integer lists with
``row = left argument``.  Pointed structures are relabelled on load so the
unit is 0 (swapping 0 with the declared unit); maps attached to them are
transported along the same swap.  ``dumps`` writes the canonical compact
form, so ``dumps(load(json.loads(text))) == text`` for canonical input.
"""

from __future__ import annotations

import json
from typing import Any, Optional

import numpy as np

from .braces import Digroup, SkewBrace, digroup, is_skew_brace
from .constructions import AlexanderDatum
from .core import IloModel, Magma, op_table, relabel_table, sorted_flags
from .errors import FlagMismatch, InvalidTable
from .groups import FiniteGroup
from .points import IndexWitness, SplitEpi, split_epi
from .relations import ReflexiveRelation, reflexive_relation

__all__ = ["load", "dump", "loads", "dumps", "witness_report", "internal_record"]


def _swap(n: int, unit: Optional[int]) -> Optional[np.ndarray]:
    if unit is None or unit == 0:
        return None
    perm = np.arange(n)
    perm[[0, unit]] = perm[[unit, 0]]
    return perm


def _require(data: dict, *keys: str) -> None:
    missing = [k for k in keys if k not in data]
    if missing:
        raise InvalidTable(f"{data.get('kind', '?')} record lacks {', '.join(missing)}")


def _check_order(data: dict, table: np.ndarray) -> None:
    if "order" in data and data["order"] != len(table):
        raise InvalidTable(f"declared order {data['order']} but table has {len(table)} rows")


def _load_model(data: dict):
    _require(data, "d")
    d = op_table(data["d"])
    _check_order(data, d)
    unit = data.get("unit")
    if unit is not None and not 0 <= unit < len(d):
        raise InvalidTable(f"unit {unit} outside the carrier")
    perm = _swap(len(d), unit)
    if perm is not None:
        d = relabel_table(d, perm)
        unit = 0
    if data["kind"] == "ilo":
        m = IloModel.from_table(d, unit)
    else:
        m = Magma(d, unit)
    if "flags" in data and sorted(data["flags"]) != sorted(sorted_flags(m.flags)):
        raise FlagMismatch(f"declared flags {data['flags']} disagree with {sorted_flags(m.flags)}")
    return m, perm


def _load_group(data: dict):
    _require(data, "mult")
    g = FiniteGroup.from_table(data["mult"], name=data.get("name", "G"))
    _check_order(data, g.mult)
    if "unit" in data and data["unit"] != g.unit:
        raise InvalidTable(f"declared unit {data['unit']} is not the identity {g.unit}")
    perm = _swap(g.order, g.unit)
    if perm is not None:
        g = FiniteGroup.from_table(data["mult"], name=g.name, normalize=True)
    return g, perm


def _load_brace(data: dict):
    _require(data, "star", "circ")
    star = op_table(data["star"])
    circ = op_table(data["circ"])
    _check_order(data, star)
    perm = _swap(len(star), data.get("unit"))
    if perm is not None:
        star, circ = relabel_table(star, perm), relabel_table(circ, perm)
    dg = digroup(FiniteGroup.from_table(star), FiniteGroup.from_table(circ))
    if "unit" in data and perm is None and data["unit"] != dg.unit:
        raise InvalidTable("declared unit is not the identity of the laws")
    if is_skew_brace(dg):
        dg = SkewBrace(dg.star, dg.circ)
    return dg, perm


def _load_with_perm(data: dict):
    kind = data.get("kind")
    if kind in ("ilo", "magma"):
        return _load_model(data)
    if kind == "group":
        return _load_group(data)
    if kind == "brace":
        return _load_brace(data)
    return load(data), None


def _transport(values, src_perm, dst_perm) -> np.ndarray:
    """Rewrite a map ``a -> b`` after relabelling its domain and codomain."""
    values = np.asarray(values, dtype=np.int64)
    if dst_perm is not None:
        values = dst_perm[values]
    if src_perm is not None:
        out = np.empty_like(values)
        out[src_perm] = values
        values = out
    return values


def load(data: dict) -> Any:
    """Build the object described by a parsed JSON record."""
    if not isinstance(data, dict) or "kind" not in data:
        raise InvalidTable("expected a JSON object with a 'kind'")
    kind = data["kind"]
    if kind in ("ilo", "magma", "group", "brace"):
        return _load_with_perm(data)[0]
    if kind == "alexander":
        _require(data, "group", "f")
        g, perm = _load_group(data["group"])
        datum = AlexanderDatum(g, tuple(_transport(data["f"], perm, perm).tolist()))
        return datum
    if kind == "split-epi":
        _require(data, "total", "base", "f", "s")
        total, pt = _load_with_perm(data["total"])
        base, pb = _load_with_perm(data["base"])
        f = _transport(data["f"], pt, pb)
        s = _transport(data["s"], pb, pt)
        return split_epi(total, base, f, s)
    if kind == "relation":
        _require(data, "base", "pairs")
        base, perm = _load_with_perm(data["base"])
        pairs = [tuple(p) for p in data["pairs"]]
        if perm is not None:
            pairs = [(int(perm[a]), int(perm[b])) for a, b in pairs]
        return reflexive_relation(base, pairs)
    if kind == "internal":
        _require(data, "ambient", "op")
        g, perm = _load_group(data["ambient"])
        op = op_table(data["op"])
        if perm is not None:
            op = relabel_table(op, perm)
        return g, op
    raise InvalidTable(f"unknown kind {kind!r}")


def _table(arr) -> list:
    return np.asarray(arr).tolist()


def dump(obj: Any) -> dict:
    """The JSON record (a dict with a fixed key order) describing ``obj``."""
    if isinstance(obj, (IloModel, Magma)):
        out = {"kind": obj.kind, "order": obj.order, "d": _table(obj.d)}
        if obj.unit is not None:
            out["unit"] = obj.unit
        out["flags"] = sorted_flags(obj.flags)
        return out
    if isinstance(obj, FiniteGroup):
        return {"kind": "group", "order": obj.order, "mult": _table(obj.mult), "unit": obj.unit}
    if isinstance(obj, Digroup):
        return {"kind": "brace", "order": obj.order, "star": _table(obj.star.mult),
                "circ": _table(obj.circ.mult), "unit": obj.unit}
    if isinstance(obj, AlexanderDatum):
        return {"kind": "alexander", "group": dump(obj.group), "f": list(obj.f)}
    if isinstance(obj, SplitEpi):
        return {"kind": "split-epi", "total": dump(obj.total), "base": dump(obj.base),
                "f": _table(obj.f), "s": _table(obj.s)}
    if isinstance(obj, ReflexiveRelation):
        return {"kind": "relation", "base": dump(obj.base),
                "pairs": [list(p) for p in sorted(obj.pairs)]}
    if isinstance(obj, IndexWitness):
        return witness_report(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def witness_report(w: IndexWitness) -> dict:
    return {
        "kind": "index-witness",
        "formula": w.formula,
        "kernel": list(w.kernel),
        "gamma": _table(w.gamma),
        "rho": _table(w.rho),
        "is_index": w.is_index,
        "is_hyperindex": w.is_hyperindex,
        "inverse_ok": w.inverse_ok,
    }


def internal_record(ambient: FiniteGroup, op) -> dict:
    return {"kind": "internal", "ambient": dump(ambient), "op": _table(op)}


def dumps(obj: Any) -> str:
    record = obj if isinstance(obj, dict) else dump(obj)
    return json.dumps(record, separators=(",", ":"))


def loads(text: str) -> Any:
    return load(json.loads(text))
