import itertools

import numpy as np
import pytest

from ilokit import catalog, cyclic, symmetric_group
from ilokit.braces import (
    brace_indexes,
    brace_split_epi,
    digroup,
    is_skew_brace,
    opposite_brace,
    skew_brace,
    trivial_brace,
)
from ilokit.errors import AlgebraError, NotBihomomorphism, UnitMismatch
from ilokit.groups import FiniteGroup
from ilokit.points import group_split_epis

S3 = symmetric_group(3)
EVEN = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]


def sign_epi():
    sign = [0 if p in EVEN else 1 for p in S3.labels]
    return brace_split_epi(opposite_brace(S3), trivial_brace(cyclic(2)), sign, [0, S3.index((1, 0, 2))])


def test_is_skew_brace_examples():
    assert is_skew_brace(digroup(cyclic(3), cyclic(3)))
    assert is_skew_brace(digroup(S3, S3))
    assert is_skew_brace(digroup(S3, S3.opposite()))


def brute_brace(star, circ):
    n = star.order
    st, ci = star.mult, circ.mult
    inv = [next(b for b in range(n) if st[a, b] == star.unit) for a in range(n)]
    return all(ci[a, st[b, c]] == st[st[ci[a, b], inv[a]], ci[a, c]]
               for a, b, c in itertools.product(range(n), repeat=3))


@pytest.mark.parametrize("name", sorted(catalog(12)))
def test_trivial_and_opposite_braces(name):
    g = catalog(12)[name]
    for b in (trivial_brace(g), opposite_brace(g)):
        assert is_skew_brace(b) and brute_brace(b.star, b.circ)
    if g.is_abelian:
        assert np.array_equal(opposite_brace(g).circ.mult, g.mult)


def test_opposite_brace_of_q8():
    q8 = catalog(8)["Q8"]
    b = opposite_brace(q8)
    assert is_skew_brace(b)
    assert not np.array_equal(b.circ.mult, b.star.mult)


def test_non_brace_digroup():
    # Z4 with a second law obtained by transporting + along a transposition
    z4 = cyclic(4)
    perm = np.array([0, 2, 1, 3])
    circ = FiniteGroup.from_table(perm[z4.mult[np.ix_(perm, perm)]])
    dg = digroup(z4, circ)
    assert not is_skew_brace(dg) and not brute_brace(z4, circ)
    with pytest.raises(AlgebraError):
        skew_brace(z4, circ)


def test_unit_mismatch():
    z3 = cyclic(3)
    shifted = FiniteGroup.from_table([[(x + y - 1) % 3 for y in range(3)] for x in range(3)])
    assert shifted.unit == 1
    with pytest.raises(UnitMismatch):
        digroup(z3, shifted)


def test_trivial_brace_indexes_coincide():
    e = brace_split_epi(trivial_brace(cyclic(6)), trivial_brace(cyclic(2)),
                        [x % 2 for x in range(6)], [0, 3])
    ws, wc = brace_indexes(e)
    assert np.array_equal(ws.gamma, wc.gamma)
    assert ws.is_hyperindex and wc.is_hyperindex


def test_opposite_brace_indexes_differ_on_s3():
    e = sign_epi()
    ws, wc = brace_indexes(e)
    assert ws.is_index and ws.is_hyperindex and wc.is_index and wc.is_hyperindex
    t13 = S3.index((2, 1, 0))
    assert ws.gamma_element(t13) != wc.gamma_element(t13)
    for k in e.kernel:
        assert ws.gamma_element(k) == wc.gamma_element(k) == k


def test_brace_split_epi_rejects_non_bihomomorphism():
    # the identity respects the star law only
    with pytest.raises(NotBihomomorphism):
        brace_split_epi(opposite_brace(S3), trivial_brace(S3), list(range(6)),
                        list(range(6)))


@pytest.mark.parametrize("name", [k for k, g in catalog(12).items() if g.order <= 8])
def test_opposite_brace_epis_from_group_epis(name):
    g = catalog(12)[name]
    checked = 0
    for other in catalog(8).values():
        for e in group_split_epis(g, other):
            # group epis are also epis of the opposite laws
            be = brace_split_epi(opposite_brace(g), opposite_brace(other), e.f, e.s)
            for w in brace_indexes(be):
                assert w.is_index and w.is_hyperindex
            checked += 1
    assert checked >= 1
