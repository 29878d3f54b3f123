import pytest
from hypothesis import given, settings, strategies as st

from acta.budget import Budget
from acta.errors import (BudgetExceeded, IndexOutOfRange, NotAssociative, NotASubmonoid,
                         NotIdentity, OrderExceedsCap)
from acta.monoid import (blocks, build_monoid, enumerate_cu, green, is_right_collapsible,
                         is_right_unitary, principal_ideal_poset, structure_predicates,
                         submonoid, submonoid_closure)
from acta.catalog import (canonical_form, enumerate_monoids, right_zero_adjoined,
                          small_monoids, trivial_monoid, u1, z2, z3)


def test_build_trivial():
    m = build_monoid(((0,),), 0)
    assert m.order == 1 and m.identity == 0


def test_build_semilattice():
    m = build_monoid(((0, 1), (1, 1)), 0)
    assert m.idempotents() == (0, 1)


def test_build_rejects_broken_identity():
    with pytest.raises(NotIdentity) as err:
        build_monoid(((0, 0), (1, 0)), 0)
    assert err.value.element == 1


def test_build_rejects_nonassociative():
    # x*y = x is associative; flip one entry of a left-zero table to break it
    with pytest.raises(NotAssociative) as err:
        build_monoid(((0, 1, 2), (1, 1, 1), (2, 2, 1)), 0)
    assert len(err.value.triple) == 3


def test_build_rejects_out_of_range():
    with pytest.raises(IndexOutOfRange):
        build_monoid(((0, 1), (1, 2)), 0)
    with pytest.raises(IndexOutOfRange):
        build_monoid(((0, 1), (1, 0)), 5)


def test_green_trivial():
    gs = green(trivial_monoid())
    assert gs.r == gs.l == gs.h == gs.d == gs.j == (0,)


def test_green_group_single_class():
    gs = green(z2())
    assert gs.r == (0, 0) and gs.l == (0, 0)
    assert gs.h == (0, 0) and gs.d == (0, 0) and gs.j == (0, 0)


def test_green_right_zero_adjoined():
    gs = green(right_zero_adjoined())
    assert blocks(gs.r) == ((0,), (1, 2))
    assert blocks(gs.l) == ((0,), (1,), (2,))


def test_predicates_z2():
    p = structure_predicates(z2())
    assert p.is_group and p.is_local
    assert p.is_left_cancellative and p.is_right_cancellative
    assert p.witnesses == ()


def test_predicates_u1():
    p = structure_predicates(u1())
    assert p.is_inverse and not p.is_group and p.is_local
    assert p.witness("is_group") == (1,)


def test_group_bound_everywhere():
    for m in small_monoids(3):
        assert structure_predicates(m).is_group_bound


def test_h_class_of_idempotent_is_group():
    for m in small_monoids(3):
        gs = green(m)
        for e in m.idempotents():
            cls = set(gs.h_class(e))
            assert all(m.mul[a][b] in cls for a in cls for b in cls)
            assert all(m.mul[e][a] == a == m.mul[a][e] for a in cls)
            assert all(any(m.mul[a][b] == e == m.mul[b][a] for b in cls) for a in cls)


def test_right_unitary_examples():
    m3 = right_zero_adjoined()
    assert is_right_unitary(m3, submonoid(m3, (0,)))
    assert not is_right_unitary(m3, submonoid(m3, (0, 1)))
    assert is_right_unitary(m3, submonoid(m3, (0, 1, 2)))


def test_right_unitary_rejects_nonsubmonoid():
    m = z2()
    with pytest.raises(NotASubmonoid):
        submonoid(m, (1,))


def test_right_collapsible_examples():
    m = u1()
    assert is_right_collapsible(m, submonoid(m, (0,)))
    assert is_right_collapsible(m, submonoid(m, (0, 1)))
    z = z2()
    assert not is_right_collapsible(z, submonoid(z, (0, 1)))


def test_enumerate_cu_groups():
    assert [s.members for s in enumerate_cu(z2())] == [(0,)]
    assert [s.members for s in enumerate_cu(z3())] == [(0,)]


def test_enumerate_cu_u1_and_right_zero():
    assert [s.members for s in enumerate_cu(u1())] == [(0,), (0, 1)]
    assert [s.members for s in enumerate_cu(right_zero_adjoined())] == [(0,), (0, 1, 2)]


def test_enumerate_cu_cap():
    with pytest.raises(OrderExceedsCap):
        enumerate_cu(u1(), cap=1)


def test_enumerate_cu_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_cu(right_zero_adjoined(), budget=Budget(1))


def test_cu_members_satisfy_both_predicates():
    for m in small_monoids(3):
        for sub in enumerate_cu(m):
            assert is_right_unitary(m, sub)
            assert is_right_collapsible(m, sub)


def _relabel(m, perm):
    inv = [0] * m.order
    for old, new in enumerate(perm):
        inv[new] = old
    table = tuple(tuple(perm[m.mul[inv[i]][inv[j]]] for j in range(m.order))
                  for i in range(m.order))
    return build_monoid(table, perm[m.identity])


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_enumerate_cu_stable_under_isomorphism(data):
    m = data.draw(st.sampled_from(small_monoids(3)))
    perm = tuple(data.draw(st.permutations(range(m.order))))
    m2 = _relabel(m, perm)
    cu1 = {frozenset(perm[x] for x in s.members) for s in enumerate_cu(m)}
    cu2 = {frozenset(s.members) for s in enumerate_cu(m2)}
    assert cu1 == cu2


def test_closure_examples():
    assert submonoid_closure(u1(), ()).members == (0,)
    assert submonoid_closure(z2(), (1,)).members == (0, 1)
    assert submonoid_closure(right_zero_adjoined(), (1,)).members == (0, 1)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_closure_idempotent_and_monotone(data):
    m = data.draw(st.sampled_from(small_monoids(3)))
    gens = data.draw(st.sets(st.integers(0, m.order - 1)))
    more = data.draw(st.sets(st.integers(0, m.order - 1)))
    c1 = submonoid_closure(m, gens)
    assert submonoid_closure(m, c1.members).members == c1.members
    c2 = submonoid_closure(m, gens | more)
    assert set(c1.members) <= set(c2.members)


def test_poset_examples():
    assert principal_ideal_poset(trivial_monoid(), "left").ideals == ((0,),)
    left = principal_ideal_poset(u1(), "left")
    assert left.ideals == ((1,), (0, 1))
    assert (0, 1) in left.leq and (1, 0) not in left.leq
    assert principal_ideal_poset(z2(), "left").ideals == ((0, 1),)
    with pytest.raises(ValueError):
        principal_ideal_poset(u1(), "sideways")


def test_poset_minimal_nodes():
    p = principal_ideal_poset(right_zero_adjoined(), "left")
    assert [p.ideals[i] for i in p.minimal] == [(1,), (2,)]


def test_enumeration_counts_match_census():
    assert [len(enumerate_monoids(n)) for n in range(1, 5)] == [1, 2, 7, 35]


def test_enumerated_monoids_are_canonical_and_distinct():
    seen = set()
    for m in enumerate_monoids(3):
        canon = canonical_form(m)
        assert canon == m.mul
        assert canon not in seen
        seen.add(canon)
