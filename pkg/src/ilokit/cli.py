"""Command line front end.  Every verb prints JSON on standard output.

Exit status: 0 when everything checked holds, 1 when a checked property
fails (the JSON error names the suite or check and gives a counterexample),
2 when the input or the flags are malformed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import io
from .braces import Digroup, brace_indexes
from .core import IloModel, Magma, StructureClass, classify, sorted_flags
from .enumeration import EnumerationRequest, census, census_stream
from .errors import AlgebraError, FlagMismatch
from .groups import FiniteGroup
from .points import SplitEpi, group_index, model_index
from .theorems import SUITES, run_all

EXIT_OK, EXIT_FAILED, EXIT_MALFORMED = 0, 1, 2


class Malformed(Exception):
    pass


class Failed(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("message", ""))
        self.payload = payload


def _emit(record: dict, out) -> None:
    out.write(io.dumps(record) + "\n")


def _read_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise Malformed(f"cannot read {path}: {exc}") from exc


def _load(path: str):
    data = _read_json(path)
    try:
        return io.load(data)
    except FlagMismatch as exc:
        raise Failed({"error": "assertion", "check": "declared-flags", "message": str(exc), "input": path}) from exc
    except (AlgebraError, TypeError, KeyError, IndexError) as exc:
        raise Malformed(f"{path}: {type(exc).__name__}: {exc}") from exc


def _shard(text: Optional[str]) -> Optional[tuple]:
    if text is None:
        return None
    try:
        i, k = (int(v) for v in text.split("/"))
    except ValueError as exc:
        raise Malformed(f"shard must look like i/k, got {text!r}") from exc
    return i, k


def _cls(text: str) -> StructureClass:
    try:
        return StructureClass.parse(text)
    except (KeyError, ValueError) as exc:
        raise Malformed(f"unknown class {text!r}") from exc


def _request(order: int, cls: StructureClass, up_to_iso=False, partition=None) -> EnumerationRequest:
    try:
        return EnumerationRequest(order, cls, up_to_iso, partition)
    except (AlgebraError, ValueError) as exc:
        raise Malformed(str(exc)) from exc


def cmd_enumerate(args, out) -> int:
    req = _request(args.order, _cls(args.cls), args.up_to_iso, _shard(args.shard))
    labeled = iso = 0
    for m, canonical in census_stream(req):
        labeled += 1
        iso += canonical
        if canonical or not req.up_to_iso:
            _emit(io.dump(m), out)
    _emit({"class": req.cls.value, "order": req.order, "labeled": labeled, "iso": iso}, out)
    return EXIT_OK


def cmd_census(args, out) -> int:
    classes = [_cls(c) for c in args.cls] if args.cls else list(StructureClass)
    for cls in classes:
        for n in range(1, args.max_order + 1):
            _emit(census(_request(n, cls)), out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    obj = _load(args.file)
    if isinstance(obj, FiniteGroup):
        from .constructions import from_group

        obj = from_group(obj)
    if not isinstance(obj, (IloModel, Magma)):
        raise Malformed("classify expects an ilo, magma or group record")
    record = {"kind": obj.kind, "order": obj.order}
    if obj.unit is not None:
        record["unit"] = obj.unit
    record["flags"] = sorted_flags(classify(obj.d, obj.unit))
    _emit(record, out)
    return EXIT_OK


def cmd_verify_index(args, out) -> int:
    e = _load(args.epi)
    if not isinstance(e, SplitEpi):
        raise Malformed("verify-index expects a split-epi record")
    if e.kernel is None:
        raise Malformed("the base of the split epi has no unit, so there is no kernel")
    try:
        if args.formula == "group":
            if not isinstance(e.total, FiniteGroup):
                raise Malformed("the group formula needs group total and base")
            _emit(io.witness_report(group_index(e)), out)
        elif args.formula == "model":
            if not isinstance(e.total, IloModel):
                raise Malformed("the model formula needs ilo total and base")
            _emit(io.witness_report(model_index(e)), out)
        else:
            if not isinstance(e.total, Digroup):
                raise Malformed("the brace formula needs brace total and base")
            ws, wc = brace_indexes(e)
            differ = bool((ws.gamma != wc.gamma).any())
            _emit({"kind": "brace-index-witnesses", "star": io.witness_report(ws),
                   "circ": io.witness_report(wc), "differ": differ}, out)
    except AssertionError as exc:
        raise Failed({"error": "assertion", "check": f"{args.formula}-index", "message": str(exc),
                      "counterexample": io.dump(e)}) from exc
    except AlgebraError as exc:
        raise Malformed(f"{type(exc).__name__}: {exc}") from exc
    return EXIT_OK


def cmd_check_theorems(args, out) -> int:
    names = args.suite or list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise Malformed(f"unknown suite(s): {', '.join(unknown)}")
    if args.max_order < 1:
        raise Malformed("--max-order must be positive")
    results = run_all(args.max_order, args.seed, names)
    for r in results:
        _emit(r.record(), out)
    failed = [r for r in results if not r.passed]
    _emit({"max_order": args.max_order, "seed": args.seed, "suites": len(results),
           "passed": len(results) - len(failed), "failed": len(failed)}, out)
    if failed:
        first = failed[0]
        raise Failed({"error": "assertion", "suite": first.name, "message": first.message,
                      "counterexample": first.counterexample})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ilokit", description="Finite ILO settings, quandles and split epis.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("enumerate", help="stream every model of a class at one order as JSON lines")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--shard", metavar="I/K")
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("classify", help="print the classes a model record belongs to")
    p.add_argument("file")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("verify-index", help="evaluate an index formula on a split epi record")
    p.add_argument("--epi", required=True)
    p.add_argument("--formula", choices=("group", "model", "brace"), required=True)
    p.set_defaults(run=cmd_verify_index)

    p = sub.add_parser("check-theorems", help="run the property suites")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    p.set_defaults(run=cmd_check_theorems)

    p = sub.add_parser("census", help="labelled and iso counts per class and order")
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--class", dest="cls", action="append")
    p.set_defaults(run=cmd_census)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args, out)
    except Malformed as exc:
        _emit({"error": "malformed-input", "message": str(exc)}, out)
        return EXIT_MALFORMED
    except Failed as exc:
        _emit(exc.payload, out)
        return EXIT_FAILED


def main() -> None:
    sys.exit(run())
