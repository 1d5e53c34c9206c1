import itertools
import math

import pytest

from clusterhodge import catalog
from clusterhodge.exceptions import (
    DomainError,
    DualityUnavailableError,
    InconsistentRankError,
    UnsupportedCaseError,
    UnsupportedDimensionError,
)
from clusterhodge.hodge import (
    Case,
    MixedHodgeTable,
    RestrictionRankData,
    Variant,
    assemble,
    classify,
    e_polynomial,
    is_mixed_tate,
    kunneth,
    mayer_vietoris,
    numerical_chl,
    table,
    table_2d,
    table_for,
    table_one_mutable,
    table_singular_case1,
    table_three_mutable,
    table_torus,
    table_two_mutable,
)
from clusterhodge.polynomial import CountingPolynomial
from clusterhodge.quiver import Seed

GRID = range(1, 7)


def diag(t):
    return [t[k, k] for k in range(t.dim + 1)]


# closed forms


def test_torus_tables():
    assert diag(table_torus(3)) == [1, 3, 3, 1]
    assert table_torus(0).entries() == {(0, 0): 1}
    assert table_torus(1).entries() == {(0, 0): 1, (1, 1): 1}
    with pytest.raises(DomainError):
        table_torus(-1)


@pytest.mark.parametrize("a,off", [(1, 0), (2, 1), (3, 2)])
def test_table_2d(a, off):
    t = table_2d(a)
    assert diag(t) == [1, 1, 1] and t[2, 1] == off


@pytest.mark.parametrize("a,b,off", [(4, 6, 1), (1, 9, 0), (3, 0, 2), (-4, 6, 1)])
def test_table_one_mutable(a, b, off):
    t = table_one_mutable(a, b)
    assert diag(t) == [1, 2, 2, 1] and t[2, 1] == t[3, 2] == off


def test_one_mutable_needs_a_weight():
    with pytest.raises(DomainError):
        table_one_mutable(0, 0)


@pytest.mark.parametrize("abc,C", [((1, 1, 1), 0), ((2, 2, 1), 1), ((2, 4, 6), 2)])
def test_table_two_mutable(abc, C):
    t = table_two_mutable(*abc)
    assert diag(t) == [1, 1, 1, 1] and t[2, 1] == t[3, 2] == C


@pytest.mark.parametrize("abc,C", [((1, 1, 1), 0), ((2, 2, 2), 3), ((2, 3, 4), 1)])
def test_table_three_mutable(abc, C):
    t = table_three_mutable(*abc)
    assert diag(t) == [1, 0, 1, 1] and t[2, 1] == C and t[3, 2] == C + 1


def test_singular_tables():
    h = table_singular_case1()
    ih = table_singular_case1(Variant.INTERSECTION_COHOMOLOGY)
    assert diag(h) == [1, 1, 2, 1] and h.betti() == (1, 1, 2, 1, 0, 0, 0)
    assert not h.smooth
    assert ih[2, 1] == 1 and diag(ih) == [1, 1, 2, 1]


def test_symmetries():
    for a, b in itertools.product(range(0, 7), GRID):
        assert table_one_mutable(a, b) == table_one_mutable(b, a)
    for abc in itertools.product(GRID, repeat=3):
        ref = table_three_mutable(*abc)
        assert all(table_three_mutable(*p) == ref for p in itertools.permutations(abc))


def test_euler_characteristic_vanishes():
    for a, b, c in itertools.product(GRID, repeat=3):
        for t in (table_one_mutable(a, b), table_two_mutable(a, b, c), table_three_mutable(a, b, c)):
            assert t.euler_characteristic() == 0
    assert all(table_torus(r).euler_characteristic() == 0 for r in range(1, 6))


def test_table_invariants_enforced():
    with pytest.raises(ValueError):
        MixedHodgeTable.from_entries(1, {(0, 1): 1})
    with pytest.raises(ValueError):
        MixedHodgeTable.from_entries(1, {(0, 0): -1})


# Kunneth


def test_kunneth_examples():
    for a in GRID:
        assert kunneth(table_2d(a), table_torus(1)) == table_one_mutable(a, 0)
    t = table_three_mutable(2, 3, 4)
    assert kunneth(t, table_torus(0)) == t
    assert kunneth(table_torus(1), table_torus(2)) == table_torus(3)


def test_kunneth_commutative_associative():
    a, b, c = table_2d(3), table_torus(1), table_2d(2)
    assert kunneth(a, c) == kunneth(c, a)
    assert kunneth(kunneth(a, b), c) == kunneth(a, kunneth(b, c))


# Mayer-Vietoris


def test_mv_with_empty_intersection_adds():
    tU, tV = table_one_mutable(2, 2), table_torus(3)
    zero = MixedHodgeTable.zeros(3)
    t = mayer_vietoris(tU, tV, zero, RestrictionRankData())
    assert t.entries() == {kp: tU[kp] + tV[kp] for kp in set(tU.entries()) | set(tV.entries())}


def test_mv_rejects_excess_rank():
    t = table_torus(3)
    with pytest.raises(InconsistentRankError):
        mayer_vietoris(t, t, t, RestrictionRankData({(1, 1): 4}))


@pytest.mark.parametrize("abc", list(itertools.product(GRID, repeat=3))[::7])
def test_assembly_matches_closed_forms(abc):
    assert assemble(catalog.two_mutable(*abc)) == table_two_mutable(*abc)
    assert assemble(catalog.three_mutable(*abc)) == table_three_mutable(*abc)


def test_three_mutable_coker_feeds_h3():
    # one class in H^{3,(2,2)} beyond the kernel comes from coker f^{2,(2,2)}
    t = assemble(catalog.three_mutable(1, 1, 1))
    assert t[2, 2] == 1 and t[3, 2] == 1


# checks


def test_numerical_chl():
    assert numerical_chl(table_torus(2))
    assert numerical_chl(table_torus(3))
    assert not numerical_chl(table_three_mutable(2, 2, 2))
    assert not numerical_chl(table_singular_case1())
    assert not numerical_chl(table_singular_case1(Variant.INTERSECTION_COHOMOLOGY))


def test_all_emitted_tables_are_mixed_tate():
    for a, b, c in itertools.product(GRID, repeat=3):
        assert is_mixed_tate(table_two_mutable(a, b, c))
        assert is_mixed_tate(table_three_mutable(a, b, c))


def test_e_polynomial():
    assert e_polynomial(table_torus(1)) == CountingPolynomial((-1, 1))
    assert str(e_polynomial(table_one_mutable(1, 1))) == "q^3 - 2*q^2 + 2*q - 1"
    assert e_polynomial(table_torus(3)) == CountingPolynomial((-1, 3, -3, 1))
    with pytest.raises(DualityUnavailableError):
        e_polynomial(table_singular_case1())


# serialization


def test_json_round_trip():
    for t in (table_three_mutable(2, 3, 4), table_singular_case1(Variant.INTERSECTION_COHOMOLOGY)):
        assert MixedHodgeTable.from_json(t.dumps()) == t
        assert MixedHodgeTable.from_json(t.dumps()).dumps() == t.dumps()


def test_ascii_layout():
    text = table_three_mutable(1, 1, 1).ascii()
    rows = [line.split("|")[1].split() for line in text.splitlines()[2:]]
    assert rows == [["1", "0", "1", "1"], ["0", "0", "1"]]
    assert "IH^2" in table_singular_case1(Variant.INTERSECTION_COHOMOLOGY).ascii()


def test_csv():
    assert table_2d(2).to_csv().splitlines() == ["k,p,h", "0,0,1", "1,1,1", "2,1,1", "2,2,1"]


# classification


def test_classify_cases():
    assert classify(catalog.torus(3)).case is Case.TORUS
    assert classify(catalog.two_dim(3)).params == (3,)
    assert classify(catalog.two_dim_times_torus(2)).case is Case.PROD_2D_X_TORUS
    c = classify(catalog.two_mutable(2, 4, 6))
    assert (c.case, c.params) == (Case.TWO_MUTABLE, (2, 4, 6))
    assert classify(catalog.singular_case1()).case is Case.SINGULAR_CASE1_11
    assert classify(catalog.cyclic(2, 2, 2)).case is Case.NOT_FINITE_TYPE


@pytest.mark.parametrize("seed", [
    catalog.singular_case1(1, 2),
    catalog.singular_case1(2, 2),
    Seed.from_matrix([[0, 1, 0], [-1, 0, 1], [0, -1, 0]], 3),
])
def test_open_cases_are_unsupported(seed):
    cls = classify(seed)
    assert cls.case is Case.UNSUPPORTED and cls.reason
    with pytest.raises(UnsupportedCaseError):
        table_for(cls)


def test_classify_rejects_other_dimensions():
    with pytest.raises(UnsupportedDimensionError):
        classify(catalog.torus(4))


def test_classification_relabel_invariant():
    # same acyclic triangle with vertices listed in another order
    s = catalog.three_mutable(2, 3, 4)
    perm = (2, 0, 1)
    B = s.matrix.entries
    rows = [[B[perm[i]][perm[j]] for j in range(3)] for i in range(3)]
    t = Seed.from_matrix(rows, 3, [s.labels[p] for p in perm])
    assert table(t) == table(s)
    assert classify(t).roles == classify(s).roles


def test_cyclic_mutates_to_known_case():
    # oriented (1,1,2) cycle: one mutation gives an acyclic triangle
    cls = classify(catalog.cyclic(1, 1, 2))
    assert (cls.case, cls.params, cls.seed.history) == (Case.THREE_MUTABLE_ACYCLIC, (1, 1, 1), (1,))


def test_dead_vertex_is_frozen():
    # x with no edges at all contributes xx' = 2, a copy of C*
    s = Seed.from_matrix([[0, 0], [0, 0], [0, 3]], 2, "xyz")
    cls = classify(s)
    assert (cls.case, cls.params, cls.roles) == (Case.PROD_2D_X_TORUS, (3,), ("y", "z", "x"))
    assert table_for(cls) == kunneth(table_2d(3), table_torus(1))
