"""Split epimorphisms, kernels and semi-direct indexes.

A split epimorphism ``(f, s): X -> Y`` is stored as two element maps.  An
index is a map ``gamma: X -> Ker f`` killing the section and making
``rho = (f, gamma): X -> Y x Ker f`` a bijection; a hyperindex also fixes
the kernel pointwise.  Kernel elements are numbered ``0..|K|-1`` in
ascending carrier order and ``gamma`` is stored in those coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from .constructions import product, subalgebra_closure
from .core import IloModel, StructureClass, _frozen
from .errors import NotHomomorphism, NotMorphismOfSplitEpis, NotSection, NotSlominski
from .groups import FiniteGroup, direct_product, homomorphisms, is_homomorphism

__all__ = [
    "SplitEpi",
    "IndexWitness",
    "split_epi",
    "index_witness",
    "group_index",
    "model_index",
    "induced_self_structure",
    "kernel_iso_implies_iso",
    "is_natural",
    "group_split_epis",
    "split_epi_morphisms",
    "model_homomorphisms",
    "model_split_epis",
]

S = StructureClass


def _preserves(phi: np.ndarray, src, dst) -> bool:
    return all(is_homomorphism(phi, a, b) for a, b in zip(src.tables, dst.tables))


@dataclass(frozen=True, eq=False)
class SplitEpi:
    total: object
    base: object
    f: np.ndarray
    s: np.ndarray
    kernel: Optional[tuple]

    @property
    def kernel_index(self) -> dict:
        return {k: i for i, k in enumerate(self.kernel)}

    def fiber(self, y: int) -> tuple:
        return tuple(int(x) for x in np.flatnonzero(self.f == y))

    def __repr__(self):
        return f"SplitEpi(f={self.f.tolist()}, s={self.s.tolist()})"


def split_epi(total, base, f: Sequence[int], s: Sequence[int]) -> SplitEpi:
    """Validate ``(f, s)`` and compute the kernel ``f^-1(unit of base)``."""
    f = np.asarray(f, dtype=np.int64)
    s = np.asarray(s, dtype=np.int64)
    if f.shape != (total.order,) or f.min() < 0 or f.max() >= base.order:
        raise NotHomomorphism("f is not a map from the total carrier to the base")
    if s.shape != (base.order,) or s.min() < 0 or s.max() >= total.order:
        raise NotHomomorphism("s is not a map from the base carrier to the total")
    if not _preserves(f, total, base):
        raise NotHomomorphism("f does not preserve the operations")
    if not _preserves(s, base, total):
        raise NotHomomorphism("s does not preserve the operations")
    if total.unit is not None and base.unit is not None:
        if f[total.unit] != base.unit or s[base.unit] != total.unit:
            raise NotHomomorphism("maps do not preserve the unit")
    if not (f[s] == np.arange(base.order)).all():
        raise NotSection("f o s is not the identity")
    kernel = None
    if base.unit is not None:
        kernel = tuple(int(x) for x in np.flatnonzero(f == base.unit))
    return SplitEpi(total, base, _frozen(f), _frozen(s), kernel)


@dataclass(frozen=True, eq=False)
class IndexWitness:
    gamma: np.ndarray  # kernel coordinates, -1 where gamma leaves the kernel
    rho: np.ndarray  # rows (f(x), gamma(x))
    kernel: tuple
    is_index: bool
    is_hyperindex: bool
    inverse_ok: bool
    formula: str

    def gamma_element(self, x: int) -> int:
        """gamma(x) as an element of the total carrier."""
        return self.kernel[int(self.gamma[x])]

    def gamma_elements(self) -> np.ndarray:
        return np.asarray(self.kernel)[self.gamma]


def index_witness(e: SplitEpi, gamma: Sequence[int], inverse: Callable[[int, int], int],
                  formula: str = "") -> IndexWitness:
    """Evaluate a candidate index ``gamma`` (given on carrier elements) against ``e``.

    ``inverse(y, k)`` is the claimed inverse of ``rho`` on base element ``y``
    and kernel element ``k``; ``inverse_ok`` records whether it really is.
    """
    X, Y = e.total, e.base
    gamma = np.asarray(gamma, dtype=np.int64)
    kpos = e.kernel_index
    coords = np.array([kpos.get(int(g), -1) for g in gamma], dtype=np.int64)
    in_kernel = bool((coords >= 0).all())
    kills_section = bool((gamma[e.s] == X.unit).all())
    rho = np.stack([e.f, coords], axis=1)
    distinct = len({(int(a), int(b)) for a, b in rho}) == X.order
    bijective = in_kernel and distinct and X.order == Y.order * len(e.kernel)
    is_index = kills_section and bijective
    is_hyper = is_index and all(gamma[k] == k for k in e.kernel)
    inverse_ok = is_index
    if is_index:
        for y in range(Y.order):
            for i, k in enumerate(e.kernel):
                x = inverse(y, k)
                if e.f[x] != y or coords[x] != i:
                    inverse_ok = False
                    break
            if not inverse_ok:
                break
    return IndexWitness(_frozen(coords), _frozen(rho), e.kernel, is_index, is_hyper, inverse_ok, formula)


def group_index(e: SplitEpi) -> IndexWitness:
    """``gamma(x) = s(f(x))^-1 . x``, inverse ``(y, k) -> s(y) . k``."""
    G = e.total
    if not isinstance(G, FiniteGroup):
        raise TypeError("group_index needs a split epimorphism of groups")
    gamma = G.mult[G.inv[e.s[e.f]], np.arange(G.order)]
    w = index_witness(e, gamma, lambda y, k: int(G.mult[e.s[y], k]), "group")
    if not (w.is_index and w.is_hyperindex and w.inverse_ok):
        raise AssertionError(f"group index failed on {e!r}: {w}")
    return w


def model_index(e: SplitEpi) -> IndexWitness:
    """``gamma(x) = d(x, s(f(x)))``, inverse ``(y, k) -> s(y) o k``.

    Always an index on hyper-Slominski models; a hyperindex whenever the
    total model is a hypersubtraction.
    """
    X, Y = e.total, e.base
    if not isinstance(X, IloModel) or not (X.has(S.HyperSlominski) and Y.has(S.HyperSlominski)):
        raise NotSlominski("model_index needs hyper-Slominski total and base")
    gamma = X.d[np.arange(X.order), e.s[e.f]]
    w = index_witness(e, gamma, lambda y, k: int(X.adjoint[e.s[y], k]), "model")
    if not (w.is_index and w.inverse_ok):
        raise AssertionError(f"model index failed on {e!r}: {w}")
    if X.has(S.Hypersubtraction) and not w.is_hyperindex:
        raise AssertionError(f"hypersubtraction total but no hyperindex on {e!r}")
    return w


def _square_epi(X) -> SplitEpi:
    """The split epi (second projection, diagonal): X x X -> X."""
    n = X.order
    XX = direct_product(X, X) if isinstance(X, FiniteGroup) else product(X, X)
    idx = np.arange(n * n)
    f = idx % n
    s = np.arange(n) * n + np.arange(n)
    return split_epi(XX, X, f, s)


def induced_self_structure(X, formula: Optional[str] = None) -> IloModel:
    """The operation ``d_X`` read off from the index of ``X x X -> X``.

    The kernel ``{(k, 1)}`` of the second projection is identified with
    ``X`` via ``(k, 1) -> k``.
    """
    if formula is None:
        formula = "group" if isinstance(X, FiniteGroup) else "model"
    e = _square_epi(X)
    w = group_index(e) if formula == "group" else model_index(e)
    n = X.order
    first = np.asarray(e.kernel) // n
    d_X = first[w.gamma].reshape(n, n)
    out = IloModel.from_table(d_X, X.unit, normalize=False)
    if not out.has(S.HyperSlominski):
        raise AssertionError("induced structure is not hyper-Slominski")
    if w.is_hyperindex and not out.has(S.Hypersubtraction):
        raise AssertionError("hyperindex did not induce a hypersubtraction")
    return out


def _check_morphism(h, e: SplitEpi, e2: SplitEpi) -> np.ndarray:
    h = np.asarray(h, dtype=np.int64)
    if e.base.order != e2.base.order or not all(
        np.array_equal(a, b) for a, b in zip(e.base.tables, e2.base.tables)
    ):
        raise NotMorphismOfSplitEpis("split epis do not share a base")
    if h.shape != (e.total.order,) or h.min() < 0 or h.max() >= e2.total.order:
        raise NotMorphismOfSplitEpis("h is not a map between the totals")
    if not _preserves(h, e.total, e2.total):
        raise NotMorphismOfSplitEpis("h is not a homomorphism")
    if not (e2.f[h] == e.f).all() or not (h[e.s] == e2.s).all():
        raise NotMorphismOfSplitEpis("h does not commute with the split epis")
    return h


def _protomodular_total(X) -> bool:
    return isinstance(X, FiniteGroup) or (isinstance(X, IloModel) and X.has(S.HyperSlominski))


def kernel_iso_implies_iso(h, e: SplitEpi, e2: SplitEpi) -> tuple:
    """``(h restricted to kernels is bijective, h is bijective)`` for a
    morphism of split epis over a common base.

    For groups and hyper-Slominski models the first implies the second; a
    violation raises AssertionError.
    """
    h = _check_morphism(h, e, e2)
    image = h[list(e.kernel)]
    kernel_bij = len(set(image.tolist())) == len(e.kernel) == len(e2.kernel)
    h_bij = len(set(h.tolist())) == e.total.order == e2.total.order
    if kernel_bij and not h_bij and _protomodular_total(e.total) and _protomodular_total(e2.total):
        raise AssertionError(f"kernel iso without total iso: h={h.tolist()}")
    return kernel_bij, h_bij


def is_natural(h, e: SplitEpi, e2: SplitEpi, w: IndexWitness, w2: IndexWitness) -> bool:
    """``gamma'(h(x)) = h(gamma(x))`` for every ``x``."""
    h = np.asarray(h)
    return bool((w2.gamma_elements()[h] == h[w.gamma_elements()]).all())


def group_split_epis(X: FiniteGroup, Y: FiniteGroup) -> Iterator[SplitEpi]:
    """Every split epimorphism ``X -> Y`` of groups."""
    if X.order % Y.order:
        return
    for f in homomorphisms(X, Y):
        if len(set(f.tolist())) != Y.order:
            continue
        gens = Y.generators
        for s in homomorphisms(Y, X, constraint=lambda k, img, f=f: f[img] == gens[k]):
            if (f[s] == np.arange(Y.order)).all():
                yield SplitEpi(X, Y, f, s, tuple(int(x) for x in np.flatnonzero(f == Y.unit)))


def split_epi_morphisms(e: SplitEpi, e2: SplitEpi) -> Iterator[np.ndarray]:
    """Homomorphisms ``h`` with ``f' h = f`` and ``h s = s'`` (groups or models)."""
    X, X2 = e.total, e2.total
    if isinstance(X, FiniteGroup):
        gens = X.generators
        cands = homomorphisms(X, X2, constraint=lambda k, img: e2.f[img] == e.f[gens[k]])
    else:
        cands = model_homomorphisms(X, X2)
    for h in cands:
        if (h[e.s] == e2.s).all() and (e2.f[h] == e.f).all():
            yield h


def _closure_tables(m) -> tuple:
    return (m.d, m.adjoint) if isinstance(m, IloModel) else tuple(m.tables)


def generating_set(m) -> tuple:
    """Greedy generators of a model under d and its adjoint (unit included for free)."""
    gens: list[int] = []
    span = subalgebra_closure(m, [])
    for x in range(m.order):
        if len(span) == m.order:
            break
        if x not in span:
            gens.append(x)
            span = subalgebra_closure(m, gens)
    return tuple(gens)


def model_homomorphisms(a, b) -> Iterator[np.ndarray]:
    """All maps ``a -> b`` preserving d (and the unit when both are pointed)."""
    gens = generating_set(a)
    ta, tb = _closure_tables(a), _closure_tables(b)
    for images in itertools.product(range(b.order), repeat=len(gens)):
        phi = np.full(a.order, -1, dtype=np.int64)
        ok = True
        if a.unit is not None and b.unit is not None:
            phi[a.unit] = b.unit
        for g, img in zip(gens, images):
            if phi[g] >= 0 and phi[g] != img:
                ok = False
            phi[g] = img
        if not ok:
            continue
        changed = True
        while ok and changed:
            changed = False
            known = np.flatnonzero(phi >= 0)
            for x in known:
                for y in known:
                    for s_tab, d_tab in zip(ta, tb):
                        c = s_tab[x, y]
                        v = d_tab[phi[x], phi[y]]
                        if phi[c] < 0:
                            phi[c] = v
                            changed = True
                        elif phi[c] != v:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
        if ok and (phi >= 0).all() and is_homomorphism(phi, a.d, b.d):
            phi.flags.writeable = False
            yield phi


def model_split_epis(X, Y) -> Iterator[SplitEpi]:
    """Every split epimorphism ``X -> Y`` between models."""
    for f in model_homomorphisms(X, Y):
        if len(set(f.tolist())) != Y.order:
            continue
        for s in model_homomorphisms(Y, X):
            if (f[s] == np.arange(Y.order)).all():
                kernel = None
                if Y.unit is not None:
                    kernel = tuple(int(x) for x in np.flatnonzero(f == Y.unit))
                yield SplitEpi(X, Y, f, s, kernel)
