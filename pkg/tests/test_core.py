import numpy as np
import pytest
from hypothesis import given, settings

from ilokit import (
    IloModel,
    NonInvertibleTranslation,
    NotSlominski,
    StructureClass as S,
    adjoint,
    check_associativity_equivalence,
    check_commutativity_equivalence,
    check_slominski_identities,
    classify,
    cyclic,
    dual,
    from_group,
    relabel,
    symmetric_group,
    trivial_quandle,
)
from ilokit.core import op_table, relabel_table, sorted_flags
from ilokit.errors import InvalidTable

from strategies import any_tables, ilo_models, ilo_tables, permutations_of


def mod_table(n, fn):
    return [[fn(x, y) % n for y in range(n)] for x in range(n)]


Z3 = from_group(cyclic(3))


# adjoint

def test_adjoint_of_first_projection_is_second_projection():
    assert adjoint([[0, 0], [1, 1]]).tolist() == [[0, 1], [0, 1]]


def test_adjoint_of_subtraction_mod_3_is_addition():
    assert adjoint(mod_table(3, lambda x, y: x - y)).tolist() == mod_table(3, lambda x, y: x + y)


def test_adjoint_rejects_constant_column():
    with pytest.raises(NonInvertibleTranslation) as info:
        adjoint([[0, 0], [0, 0]])
    assert info.value.element == 0


def test_op_table_validates_entries():
    with pytest.raises(InvalidTable):
        op_table([[0, 2], [1, 0]])
    with pytest.raises(InvalidTable):
        op_table([[0, 1]])


@given(ilo_tables())
def test_adjoint_axioms(d):
    o = adjoint(d)
    n = len(d)
    x, z = np.ix_(range(n), range(n))
    assert (d[o[x, z], x] == z).all()  # d(x o z, x) = z
    assert (o[x, d[z, x]] == z).all()  # x o d(z, x) = z
    for a in range(n):
        for b in range(n):
            t = o[a, b]
            assert d[t, a] == b  # x o y = t  <=>  y = d(t, x)


# classify

def test_classify_z2():
    flags = classify(mod_table(2, lambda x, y: x + y))
    assert sorted_flags(flags) == ["Ilo", "Latin", "Symmetric", "Involutive", "Slominski",
                                   "HyperSlominski", "Subtraction", "Hypersubtraction", "GroupDerived"]


def test_classify_trivial_quandle_of_order_3():
    flags = classify(trivial_quandle(3).d)
    assert {S.Ilo, S.Prequandle, S.Quandle, S.Autonomous} <= flags
    assert S.Latin not in flags
    # x o y = y = d(y, x), so the dual coincides with the model
    assert flags == {S.Ilo, S.Involutive, S.Prequandle, S.Quandle, S.Autonomous}


def test_classify_subtraction_that_is_not_ilo():
    d = [[0, 0, 0], [1, 0, 0], [2, 0, 0]]
    assert classify(d) == {S.Subtraction}
    assert len(set(op_table(d)[:, 1].tolist())) < 3


def test_classify_recovers_unit_from_constant_diagonal():
    d = [[1, 0], [0, 1]]  # x - y in Z2 written with the unit relabelled 1
    assert S.Hypersubtraction in classify(d)
    assert S.Hypersubtraction not in classify(d, unit=0)


IMPLIES = [
    (S.Hypersubtraction, S.HyperSlominski),
    (S.HyperSlominski, S.Slominski),
    (S.Slominski, S.HyperSlominski),
    (S.Quandle, S.Prequandle),
    (S.Autonomous, S.Quandle),
    (S.Symmetric, S.Latin),
    (S.Latin, S.Ilo),
    (S.GroupDerived, S.Hypersubtraction),
]


@given(ilo_tables())
def test_classify_respects_lattice(d):
    flags = classify(d)
    for a, b in IMPLIES:
        assert a not in flags or b in flags
    if S.Slominski in flags and S.Prequandle in flags:
        assert len(d) == 1


@given(any_tables())
def test_classify_non_ilo_tables(d):
    flags = classify(d)
    cols_perm = all(len(set(d[:, x].tolist())) == len(d) for x in range(len(d)))
    assert (S.Ilo in flags) == cols_perm
    if not cols_perm:
        assert flags <= {S.Subtraction}


# dual

def test_dual_is_involution_on_z3():
    assert dual(dual(Z3)) == Z3


def test_dual_of_trivial_quandle_of_order_2():
    t = trivial_quandle(2)
    assert np.array_equal(dual(t).d, t.d)
    assert np.array_equal(dual(t).adjoint, t.adjoint)


def test_dual_of_z3():
    dm = dual(Z3)
    assert dm.d.tolist() == mod_table(3, lambda x, y: y + x)
    assert dm.adjoint.tolist() == mod_table(3, lambda x, y: y - x)
    assert S.Ilo in classify(dm.d)


@given(ilo_models())
def test_dual_properties(m):
    dm = dual(m)
    assert S.Ilo in classify(dm.d)
    assert np.array_equal(adjoint(dm.d), dm.adjoint)
    assert dual(dm) == m
    assert (S.Involutive in m.flags) == np.array_equal(dm.d, m.d)
    assert (S.Symmetric in m.flags) == np.array_equal(m.d, m.d.T)


# equivalence propositions

def test_associativity_examples():
    assert check_associativity_equivalence(Z3) == (True,) * 4
    assert check_associativity_equivalence(trivial_quandle(3)) == (True,) * 4
    m = IloModel.from_table(mod_table(3, lambda x, y: 2 * x + y))
    assert m.adjoint.tolist() == mod_table(3, lambda x, y: x + 2 * y)
    assert check_associativity_equivalence(m) == (False,) * 4


def test_commutativity_examples():
    assert check_commutativity_equivalence(Z3) == (True,) * 3
    assert check_commutativity_equivalence(from_group(symmetric_group(3))) == (False,) * 3
    assert check_commutativity_equivalence(trivial_quandle(2)) == (False,) * 3


@settings(max_examples=300)
@given(ilo_models())
def test_equivalences_agree(m):
    assert len(set(check_associativity_equivalence(m))) == 1
    assert len(set(check_commutativity_equivalence(m))) == 1


def test_slominski_examples():
    assert check_slominski_identities(from_group(cyclic(4))).all()
    m = IloModel.from_table(mod_table(3, lambda x, y: 2 * (x - y)), 0)
    assert m.adjoint.tolist() == mod_table(3, lambda x, y: x + 2 * y)
    assert check_slominski_identities(m).all()
    with pytest.raises(NotSlominski):
        check_slominski_identities(trivial_quandle(2))


@given(ilo_models())
def test_slominski_identities_hold_when_flagged(m):
    if S.Slominski in m.flags:
        assert check_slominski_identities(m).all()
        assert S.HyperSlominski in m.flags


# unit normalisation and relabelling

def test_from_table_moves_unit_to_zero():
    # Z3 subtraction relabelled so the unit is 2
    perm = np.array([2, 0, 1])
    d = relabel(Z3, perm).d
    m = IloModel.from_table(d, 2)
    assert m.unit == 0
    assert S.Hypersubtraction in m.flags
    assert m.relabeling == (2, 1, 0)  # the transposition of 0 and the old unit
    assert np.array_equal(m.d, relabel_table(d, [2, 1, 0]))


@given(ilo_models(min_order=2), permutations_of(4))
def test_relabel_preserves_flags(m, perm):
    perm = perm[perm < m.order]
    r = relabel(m, perm)
    assert r.flags == m.flags
