"""Property suites, each checking one family of results exhaustively on
finite models.

Every suite takes a :class:`Context` and returns how many instances it
checked; a failing instance raises :class:`Violation` carrying a JSON-ready
counterexample (the first one met in enumeration order, which is the
smallest).  Enumerated suites are bounded by ``min(max_order, cap)``;
catalog-based suites always use the full fixture catalog.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from . import io
from .abelian import (
    decompose_slominski,
    extract_alexander,
    internal_operations,
    umag_hst_abelian_check,
)
from .braces import brace_indexes, brace_split_epi, is_skew_brace, opposite_brace, trivial_brace
from .constructions import (
    AlexanderDatum,
    alexander,
    from_group,
    multiplier,
    prequandle_catalog,
    product,
    subalgebra_closure,
    submodel,
)
from .core import (
    IloModel,
    StructureClass,
    check_associativity_equivalence,
    check_commutativity_equivalence,
    check_slominski_identities,
    classify,
    dual,
    relabel,
)
from .enumeration import (
    EnumerationRequest,
    are_isomorphic,
    canonical_table,
    enumerate_models,
    iso_classes,
    latin_prequandles,
)
from .errors import AlgebraError
from .groups import catalog, cyclic, direct_product, homomorphisms, is_homomorphism
from .points import (
    group_index,
    group_split_epis,
    induced_self_structure,
    is_natural,
    kernel_iso_implies_iso,
    model_index,
    model_split_epis,
    split_epi,
    split_epi_morphisms,
)
from .relations import (
    check_autonomy_naturality,
    check_relation,
    is_acupuncturing_split_epi,
    jointly_strongly_epic_check,
    maltsev_term,
    pullback,
    reflexive_relations,
    theta_witness_check,
)
from .search import search_tables

__all__ = ["Context", "Violation", "SuiteResult", "SUITES", "run_suite", "run_all"]

S = StructureClass


class Violation(AssertionError):
    """A suite found an instance where the expected property fails."""

    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


@dataclass(frozen=True)
class Context:
    max_order: int
    seed: int = 0

    def bound(self, cap: int) -> int:
        return max(1, min(self.max_order, cap))

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int = 0
    message: str = ""
    counterexample: object = None

    def record(self) -> dict:
        out = {"suite": self.name, "status": "pass" if self.passed else "fail", "checked": self.checked}
        if not self.passed:
            out["message"] = self.message
            out["counterexample"] = self.counterexample
        return out


SUITES: dict[str, Callable[[Context], int]] = {}


def suite(name: str):
    def register(fn):
        SUITES[name] = fn
        fn.suite_name = name
        return fn

    return register


def _require(cond: bool, message: str, counterexample=None) -> None:
    if not cond:
        raise Violation(message, counterexample)


def labeled(cls: StructureClass, top: int) -> Iterator:
    """Every labelled model of ``cls`` with order ``1..top``."""
    for n in range(1, top + 1):
        yield from enumerate_models(EnumerationRequest(n, cls, max_order=top))


def _epi_record(e) -> dict:
    return {"total": io.dump(e.total), "base": io.dump(e.base), "f": e.f.tolist(), "s": e.s.tolist()}


def _groups(max_order: int) -> list:
    return [g for _, g in sorted(catalog(max_order).items(), key=lambda kv: (kv[1].order, kv[0]))]


# -- operation tables and classes ---------------------------------------------------

@suite("prop-assos")
def prop_assos(ctx: Context) -> int:
    count = 0
    for m in labeled(S.Ilo, ctx.bound(4)):
        verdicts = check_associativity_equivalence(m)
        _require(len(set(verdicts)) == 1, "associativity conditions disagree",
                 {"model": io.dump(m), "conditions": list(verdicts)})
        count += 1
    return count


@suite("prop-commut")
def prop_commut(ctx: Context) -> int:
    count = 0
    for m in labeled(S.Ilo, ctx.bound(4)):
        verdicts = check_commutativity_equivalence(m)
        _require(len(set(verdicts)) == 1, "commutativity conditions disagree",
                 {"model": io.dump(m), "conditions": list(verdicts)})
        count += 1
    return count


@suite("prop-slominski")
def prop_slominski(ctx: Context) -> int:
    count = 0
    for m in labeled(S.Slominski, ctx.bound(4)):
        report = check_slominski_identities(m)
        _require(report.all(), "Slominski identity fails", {"model": io.dump(m), "report": list(report)})
        _require(S.HyperSlominski in m.flags, "finite Slominski model is not hyper-Slominski",
                 {"model": io.dump(m)})
        count += 1
    return count


_IMPLICATIONS = [
    (S.Hypersubtraction, S.HyperSlominski),
    (S.Hypersubtraction, S.Subtraction),
    (S.HyperSlominski, S.Slominski),
    (S.Slominski, S.HyperSlominski),
    (S.Quandle, S.Prequandle),
    (S.Autonomous, S.Quandle),
    (S.Symmetric, S.Latin),
    (S.GroupDerived, S.Hypersubtraction),
    (S.Latin, S.Ilo),
]


def _lattice_ok(m) -> Optional[str]:
    flags = m.flags
    for a, b in _IMPLICATIONS:
        if a in flags and b not in flags:
            return f"{a.value} without {b.value}"
    if S.Slominski in flags and S.Prequandle in flags and m.order != 1:
        return "Slominski prequandle with more than one element"
    return None


@suite("string-of-inclusions")
def string_of_inclusions(ctx: Context) -> int:
    count = 0
    top = ctx.bound(3)
    for m in itertools.chain(labeled(S.Ilo, top), labeled(S.Subtraction, top)):
        problem = _lattice_ok(m)
        _require(problem is None, f"class lattice broken: {problem}", {"model": io.dump(m)})
        count += 1
    return count


@suite("dual-involution")
def dual_involution(ctx: Context) -> int:
    count = 0
    for m in labeled(S.Ilo, ctx.bound(3)):
        dm = dual(m)
        record = {"model": io.dump(m)}
        _require(S.Ilo in classify(dm.d), "dual is not an ILO setting", record)
        _require(dual(dm) == m, "dual is not an involution", record)
        _require((S.Involutive in m.flags) == np.array_equal(dm.d, m.d), "Involutive flag disagrees with dual", record)
        _require((S.Symmetric in m.flags) == np.array_equal(m.d, m.d.T), "Symmetric flag disagrees with transpose", record)
        count += 1
    return count


@suite("gp-in-hst")
def gp_in_hst(ctx: Context) -> int:
    count = 0
    for g in _groups(16):
        m = from_group(g)
        flags = m.flags
        record = {"group": g.name}
        for needed in (S.Hypersubtraction, S.GroupDerived, S.Latin):
            _require(needed in flags, f"group ILO lacks {needed.value}", record)
        # d(x, y) = d(y, x) reads y^-1 x = x^-1 y, i.e. (x^-1 y)^2 = 1: exponent 2, not commutativity
        _require((S.Symmetric in flags) == (g.exponent <= 2), "Symmetric flag disagrees with exponent 2", record)
        _require((S.Involutive in flags) == (g.exponent <= 2), "Involutive flag disagrees with exponent 2", record)
        count += 1
    return count


# -- enumeration and isomorphism ---------------------------------------------------

@suite("census-consistency")
def census_consistency(ctx: Context) -> int:
    count = 0
    top = ctx.bound(3)
    for cls in (S.Quandle, S.Hypersubtraction):
        for n in range(1, top + 1):
            models = list(enumerate_models(EnumerationRequest(n, cls)))
            classes = iso_classes(models)
            reps = list(enumerate_models(EnumerationRequest(n, cls, up_to_iso=True)))
            record = {"class": cls.value, "order": n}
            _require(sum(c for _, c in classes) == len(models), "class sizes do not add up", record)
            _require([r.d.tolist() for r in reps] == [r.d.tolist() for r, _ in classes],
                     "up-to-iso stream differs from iso_classes", record)
            count += len(models)
    n = top
    whole = [m.d.tobytes() for m in enumerate_models(EnumerationRequest(n, S.Ilo))]
    shards = [[m.d.tobytes() for m in enumerate_models(EnumerationRequest(n, S.Ilo, partition=(i, 3)))]
              for i in range(3)]
    merged = [t for part in shards for t in part]
    _require(len(merged) == len(set(merged)) and sorted(merged) == sorted(whole),
             "shards do not partition the enumeration", {"order": n, "shards": 3})
    return count + len(whole)


def _random_ilo(rng: np.random.Generator, n: int) -> IloModel:
    cols = np.array([rng.permutation(n) for _ in range(n)])
    return IloModel.from_table(cols.T)


@suite("canonical-form")
def canonical_form(ctx: Context) -> int:
    rng = ctx.rng()
    count = 0
    top = ctx.bound(4)
    pool = [_random_ilo(rng, top) for _ in range(25)]
    for cls in (S.Quandle, S.Hypersubtraction):
        models = list(enumerate_models(EnumerationRequest(top, cls)))
        picks = rng.choice(len(models), size=min(25, len(models)), replace=False)
        pool += [models[i] for i in sorted(picks.tolist())]
    for m in pool:
        perm = rng.permutation(top)
        if m.unit is not None:
            perm = np.concatenate([[0], 1 + rng.permutation(top - 1)])
        r = relabel(m, perm)
        record = {"model": io.dump(m), "perm": perm.tolist()}
        _require(np.array_equal(canonical_table(m.d, m.unit)[0], canonical_table(r.d, r.unit)[0]),
                 "canonical form changed under relabelling", record)
        phi = are_isomorphic(m, r)
        _require(phi is not None and is_homomorphism(phi, m.d, r.d),
                 "relabelled copy not recognised as isomorphic", record)
        count += 1
    return count


# -- constructions -----------------------------------------------------------------

@suite("alexander-latin")
def alexander_latin(ctx: Context) -> int:
    count = 0
    for g in _groups(12):
        if not g.is_abelian:
            continue
        for f in homomorphisms(g, g):
            if len(set(f.tolist())) != g.order:
                continue
            m = alexander(AlexanderDatum(g, tuple(f.tolist())))
            id_minus_f = g.mult[np.arange(g.order), g.inv[f]]
            record = {"group": g.name, "f": f.tolist()}
            _require(S.Autonomous in m.flags, "Alexander quandle is not autonomous", record)
            _require((S.Latin in m.flags) == (len(set(id_minus_f.tolist())) == g.order),
                     "Latin flag disagrees with bijectivity of Id - f", record)
            count += 1
    return count


@suite("closure-properties")
def closure_properties(ctx: Context) -> int:
    rng = ctx.rng()
    cat = prequandle_catalog()
    count = 0
    for name in ("T3", "R3", "Tet", "A5_2", "Conj_S3"):
        m = cat[name]
        for _ in range(10):
            small = set(rng.choice(m.order, size=rng.integers(0, m.order + 1), replace=False).tolist())
            big = small | set(rng.choice(m.order, size=rng.integers(0, m.order + 1), replace=False).tolist())
            cs, cb = subalgebra_closure(m, small), subalgebra_closure(m, big)
            record = {"model": name, "seed": sorted(small), "larger": sorted(big)}
            _require(small <= cs, "closure is not extensive", record)
            _require(cs <= cb, "closure is not monotone", record)
            _require(subalgebra_closure(m, cs) == cs, "closure is not idempotent", record)
            count += 1
    pairs = [(cat["R3"], cat["T2"]), (cat["Tet"], cat["R3"]), (from_group(cyclic(2)), from_group(cyclic(3)))]
    for a, b in pairs:
        p = product(a, b)
        n2 = b.order
        proj_a = np.arange(p.order) // n2
        proj_b = np.arange(p.order) % n2
        for proj, src in ((proj_a, a), (proj_b, b)):
            _require(is_homomorphism(proj, p.d, src.d) and is_homomorphism(proj, p.adjoint, src.adjoint),
                     "product projection is not a homomorphism", {"left": io.dump(a), "right": io.dump(b)})
        shared = a.flags & b.flags & {S.Ilo, S.Slominski, S.HyperSlominski, S.Hypersubtraction,
                                      S.Prequandle, S.Quandle, S.Latin, S.Autonomous}
        _require(shared <= p.flags, "product loses a shared class", {"left": io.dump(a), "right": io.dump(b)})
        count += 1
    return count


# -- split epis and indexes --------------------------------------------------------

def catalog_split_epis(max_order: int = 12) -> list:
    groups = _groups(max_order)
    out = []
    for X in groups:
        for Y in groups:
            out.extend(group_split_epis(X, Y))
    return out


def _morphisms_by_base(epis: list) -> Iterator[tuple]:
    by_base: dict = {}
    for e in epis:
        by_base.setdefault(e.base.name, []).append(e)
    for name in sorted(by_base):
        group = by_base[name]
        for e, e2 in itertools.product(group, group):
            for h in split_epi_morphisms(e, e2):
                yield e, e2, h


@suite("semi-direct-index")
def semi_direct_index(ctx: Context) -> int:
    count = 0
    for e in catalog_split_epis(12):
        try:
            w = group_index(e)
        except AssertionError as exc:
            raise Violation(str(exc), _epi_record(e)) from exc
        G = e.total
        for y in range(e.base.order):
            for k in e.kernel:
                x = int(G.mult[e.s[y], k])
                _require(e.f[x] == y and w.gamma_element(x) == k, "rho inverse fails pointwise",
                         {**_epi_record(e), "y": y, "k": k})
        count += 1
    return count


@suite("naturality")
def naturality(ctx: Context) -> int:
    count = 0
    epis = catalog_split_epis(12)
    witnesses = {id(e): group_index(e) for e in epis}
    for e, e2, h in _morphisms_by_base(epis):
        _require(is_natural(h, e, e2, witnesses[id(e)], witnesses[id(e2)]),
                 "gamma is not natural", {"from": _epi_record(e), "to": _epi_record(e2), "h": h.tolist()})
        count += 1
    return count


@suite("conservativity-lemma")
def conservativity_lemma(ctx: Context) -> int:
    count = 0
    for e, e2, h in _morphisms_by_base(catalog_split_epis(12)):
        try:
            kernel_bij, h_bij = kernel_iso_implies_iso(h, e, e2)
        except AssertionError as exc:
            raise Violation(str(exc), {"from": _epi_record(e), "to": _epi_record(e2), "h": h.tolist()}) from exc
        count += 1
    top = ctx.bound(3)
    for X in labeled(S.Hypersubtraction, top):
        for Y in labeled(S.Hypersubtraction, X.order):
            epis = list(model_split_epis(X, Y))
            for e, e2 in itertools.product(epis, epis):
                for h in split_epi_morphisms(e, e2):
                    try:
                        kernel_iso_implies_iso(h, e, e2)
                    except AssertionError as exc:
                        raise Violation(str(exc), {"from": _epi_record(e), "h": h.tolist()}) from exc
                    count += 1
    return count


def z3_double_difference() -> IloModel:
    """``(Z3, d(x, y) = 2(x - y))``: hyper-Slominski but not a hypersubtraction."""
    d = [[(2 * (x - y)) % 3 for y in range(3)] for x in range(3)]
    return IloModel.from_table(d, 0)


@suite("model-index")
def model_index_suite(ctx: Context) -> int:
    count = 0
    for e in catalog_split_epis(8):
        X, Y = from_group(e.total), from_group(e.base)
        me = split_epi(X, Y, e.f, e.s)
        wm, wg = model_index(me), group_index(e)
        _require(np.array_equal(wm.gamma, wg.gamma) and wm.is_hyperindex,
                 "model index differs from group index", _epi_record(e))
        count += 1
    point = IloModel.from_table([[0]], 0)
    for X in labeled(S.Hypersubtraction, ctx.bound(4)):
        e = split_epi(X, point, [0] * X.order, [0])
        w = model_index(e)
        _require(w.is_index and w.is_hyperindex, "hypersubtraction without hyperindex", {"model": io.dump(X)})
        count += 1
    Z = z3_double_difference()
    w = model_index(split_epi(Z, point, [0, 0, 0], [0]))
    _require(w.is_index and not w.is_hyperindex, "fixture (Z3, 2(x-y)) misclassified", {"model": io.dump(Z)})
    return count + 1


@suite("factorization-theorem")
def factorization_theorem(ctx: Context) -> int:
    count = 0
    for g in _groups(16):
        induced = induced_self_structure(g)
        _require(np.array_equal(induced.d, from_group(g).d), "induced table differs from the group ILO",
                 {"group": g.name})
        count += 1
    for X in labeled(S.Hypersubtraction, ctx.bound(4)):
        induced = induced_self_structure(X)
        _require(np.array_equal(induced.d, X.d), "induced table differs from d", {"model": io.dump(X)})
        again = induced_self_structure(induced)
        _require(np.array_equal(again.d, induced.d), "induction is not idempotent", {"model": io.dump(X)})
        count += 1
    Z = z3_double_difference()
    induced = induced_self_structure(Z)
    _require(S.HyperSlominski in induced.flags and S.Hypersubtraction not in induced.flags,
             "fixture (Z3, 2(x-y)) induced the wrong class", {"model": io.dump(Z)})
    return count + 1


# -- Mal'tsev-type properties --------------------------------------------------------

def catalog_pullbacks(limit: int = 36) -> Iterator:
    """Pullbacks of pairs of split epis between catalog prequandles over a
    common base, with at most ``limit`` elements."""
    cat = prequandle_catalog()
    names = list(cat)
    epis: dict = {}
    for zn in names:
        for xn in names:
            if cat[xn].order >= cat[zn].order:
                epis.setdefault(zn, []).extend((xn, e) for e in model_split_epis(cat[xn], cat[zn]))
    for zn in names:
        for (xn, left), (yn, right) in itertools.product(epis.get(zn, []), repeat=2):
            size = sum(len(left.fiber(z)) * len(right.fiber(z)) for z in range(left.base.order))
            if size <= limit:
                yield (xn, yn, zn), left, right


@suite("theta-maltsev")
def theta_maltsev(ctx: Context) -> int:
    count = 0
    for names, left, right in catalog_pullbacks(36):
        if not is_acupuncturing_split_epi(right):
            continue
        p = pullback(left, right)
        record = {"left": _epi_record(left), "right": _epi_record(right)}
        _require(jointly_strongly_epic_check(p), "injections are not jointly strongly epic", record)
        _require(theta_witness_check(p), "explicit theta witness fails", record)
        # the projection to X, split by iota_X, is again acupuncturing
        proj = split_epi(p.model, left.total, [x for x, _ in p.pairs], p.iota_x)
        _require(is_acupuncturing_split_epi(proj), "acupuncturing not stable under pullback", record)
        count += 1
    t2 = prequandle_catalog()["T2"]
    point = prequandle_catalog()["T1"]
    bang = split_epi(t2, point, [0, 0], [0])
    _require(not jointly_strongly_epic_check(pullback(bang, bang)),
             "trivial x trivial pullback unexpectedly generated", {"left": _epi_record(bang)})
    return count


@suite("acupuncturing-transitive")
def acupuncturing_transitive(ctx: Context) -> int:
    count = 0
    for m in labeled(S.Prequandle, ctx.bound(4)):
        for r in reflexive_relations(m):
            report = check_relation(r)
            record = {"base": io.dump(m), "pairs": sorted(map(list, r.pairs))}
            _require(report.transitive or not report.acupuncturing,
                     "acupuncturing relation is not transitive", record)
            if report.classes_latin is not None:
                _require(report.acupuncturing == report.classes_latin,
                         "acupuncturing disagrees with latin classes", record)
            count += 1
    return count


def _latin_prequandles(top: int) -> Iterator[IloModel]:
    for n in range(1, top + 1):
        yield from latin_prequandles(n)


@suite("latin-stable")
def latin_stable(ctx: Context) -> int:
    count = 0
    models = list(_latin_prequandles(ctx.bound(3)))
    models += [m for m in prequandle_catalog().values() if S.Latin in m.flags]
    small = [m for m in models if m.order <= 4]
    for a, b in itertools.product(small, small):
        _require(S.Latin in product(a, b).flags, "product of latin prequandles is not latin",
                 {"left": io.dump(a), "right": io.dump(b)})
        count += 1
    for m in models:
        for size in range(1, m.order + 1):
            for seed in itertools.combinations(range(m.order), size):
                sub, elems = submodel(m, subalgebra_closure(m, seed))
                _require(S.Latin in sub.flags, "latin prequandle has a non-latin subalgebra",
                         {"model": io.dump(m), "elements": list(elems)})
                count += 1
    return count


@suite("maltsev-term")
def maltsev_term_suite(ctx: Context) -> int:
    count = 0
    for m in _latin_prequandles(ctx.bound(5)):
        try:
            maltsev_term(m)
        except AssertionError as exc:
            raise Violation(str(exc), {"model": io.dump(m)}) from exc
        count += 1
    r3 = prequandle_catalog()["R3"]
    x, y, z = np.ix_(range(3), range(3), range(3))
    _require(np.array_equal(maltsev_term(r3), (x - y + z) % 3), "R3 term is not x - y + z", {"model": "R3"})
    for m in prequandle_catalog().values():
        if m.has(S.Latin, S.Autonomous):
            report = check_autonomy_naturality(m)
            _require(report.p_is_homomorphism is True, "term of an autonomous latin prequandle is not a homomorphism",
                     {"model": io.dump(m)})
            count += 1
    return count


@suite("autonomous-quandle")
def autonomous_quandle(ctx: Context) -> int:
    count = 0
    models = itertools.chain(labeled(S.Prequandle, ctx.bound(4)), prequandle_catalog().values())
    for m in models:
        try:
            check_autonomy_naturality(m)
        except AssertionError as exc:
            raise Violation(str(exc), {"model": io.dump(m)}) from exc
        count += 1
    return count


@suite("p-from-slominski")
def p_from_slominski(ctx: Context) -> int:
    count = 0
    for m in labeled(S.Slominski, ctx.bound(4)):
        n = m.order
        x, y, z = np.ix_(range(n), range(n), range(n))
        p = m.adjoint[x, m.d[z, y]]
        ok = (p[x, x, z] == np.broadcast_to(z, (n, 1, n))).all() and (p[x, z, z] == np.broadcast_to(x, (n, 1, n))).all()
        _require(bool(ok), "x o d(z, y) is not a Mal'tsev term", {"model": io.dump(m)})
        count += 1
    return count


# -- internal structures in abelian groups -------------------------------------------

def _units_mod(n: int) -> list:
    return [k for k in range(n) if np.gcd(k, n) == 1] if n > 1 else [0]


def _internal(n: int) -> list:
    return list(internal_operations(cyclic(n)))


@suite("prop-slomab")
def prop_slomab(ctx: Context) -> int:
    count = 0
    for n in range(1, 13):
        g = cyclic(n)
        found = set()
        for op in _internal(n):
            if not (np.diagonal(op) == 0).all() or S.Ilo not in classify(op, 0):
                continue
            try:
                f, h = decompose_slominski(g, op)
            except (AssertionError, AlgebraError) as exc:
                raise Violation(str(exc), {"group": g.name, "op": op.tolist()}) from exc
            found.add(tuple(f.tolist()))
            count += 1
        expected = {multiplier(n, k) for k in _units_mod(n)}
        _require(found == expected, "internal Slominski operations are not the unit multiples of x - y",
                 {"group": g.name, "found": sorted(found)})
    return count


@suite("prop-abprq")
def prop_abprq(ctx: Context) -> int:
    count = 0
    for n in range(1, 13):
        g = cyclic(n)
        for op in _internal(n):
            if S.Prequandle not in classify(op):
                continue
            try:
                datum = extract_alexander(g, op)
            except (AssertionError, AlgebraError) as exc:
                raise Violation(str(exc), {"group": g.name, "op": op.tolist()}) from exc
            _require(np.array_equal(alexander(datum).d, op), "Alexander round trip changed the table",
                     {"group": g.name, "op": op.tolist()})
            count += 1
    return count


def interchange_stars(d: np.ndarray) -> Iterator[np.ndarray]:
    """Every operation with two-sided unit 0 that is a homomorphism for ``d``."""
    n = len(d)
    dp = np.full((n + 1, n + 1), -1, dtype=np.int64)
    dp[:n, :n] = d

    def interchange(t, n):
        a, b, c, e = np.ix_(*([np.arange(n)] * 4))
        return t[dp[a, b], dp[c, e]], dp[t[a, c], t[b, e]]

    fixed = {(0, x): x for x in range(n)} | {(x, 0): x for x in range(n)}
    for table in search_tables(n, fixed=fixed, identities=[interchange]):
        yield np.array(table, dtype=np.int64).reshape(n, n)


@suite("umag-hst")
def umag_hst(ctx: Context) -> int:
    count = 0
    for m in labeled(S.Hypersubtraction, ctx.bound(4)):
        mutual = 0
        for star in interchange_stars(m.d):
            try:
                ok = umag_hst_abelian_check(star, m.d, 0)
            except AssertionError as exc:
                raise Violation(str(exc), {"star": star.tolist(), "d": m.d.tolist()}) from exc
            mutual += ok
            count += 1
        if S.GroupDerived in m.flags:
            _require(mutual >= 1, "group-derived hypersubtraction has no internal unitary magma",
                     {"d": m.d.tolist()})
    s3 = catalog()["S3"]
    _require(not umag_hst_abelian_check(s3.mult, from_group(s3).d, 0),
             "S3 law and its subtraction are mutually internal", {"group": "S3"})
    return count + 1


# -- braces --------------------------------------------------------------------------

@suite("skew-brace-hyperindexes")
def skew_brace_hyperindexes(ctx: Context) -> int:
    count = 0
    groups = _groups(12)
    for g in groups:
        for b in (trivial_brace(g), opposite_brace(g)):
            _require(is_skew_brace(b), "brace axiom fails", {"group": g.name})
            count += 1
    for e in catalog_split_epis(12):
        for make in (trivial_brace, opposite_brace):
            be = brace_split_epi(make(e.total), make(e.base), e.f, e.s)
            ws, wc = brace_indexes(be)
            _require(ws.is_hyperindex and wc.is_hyperindex, "brace witness is not a hyperindex", _epi_record(e))
            if make is trivial_brace:
                _require(np.array_equal(ws.gamma, wc.gamma), "trivial brace witnesses differ", _epi_record(e))
            count += 1
    for g in groups:
        if g.is_abelian:
            continue
        sq = direct_product(g, g)
        n = g.order
        f = np.arange(n * n) % n
        s = np.arange(n) * n + np.arange(n)
        ws, wc = brace_indexes(brace_split_epi(opposite_brace(sq), opposite_brace(g), f, s))
        _require(not np.array_equal(ws.gamma, wc.gamma), "no independence witness on the square",
                 {"group": g.name})
        count += 1
    return count


# -- running -------------------------------------------------------------------------

def run_suite(name: str, ctx: Context) -> SuiteResult:
    fn = SUITES[name]
    try:
        checked = fn(ctx)
    except Violation as exc:
        return SuiteResult(name, False, 0, str(exc), exc.counterexample)
    except (AssertionError, AlgebraError) as exc:
        return SuiteResult(name, False, 0, f"{type(exc).__name__}: {exc}", None)
    return SuiteResult(name, True, checked)


def run_all(max_order: int, seed: int = 0, names: Optional[Iterable[str]] = None) -> list:
    ctx = Context(max_order, seed)
    return [run_suite(name, ctx) for name in (names or SUITES)]
