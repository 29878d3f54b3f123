import pytest

from acta.errors import (AssociativityActViolation, IdentityActViolation, OrderExceedsCap,
                         ValidationError)
from acta.monoid import green, normalize_partition
from acta.act import (act_congruence, act_of_monoid, build_act, build_morphism,
                      classify_free_projective, compose, congruence_closure,
                      connected_components, cyclic_iso, disjoint_union,
                      factor_through_quotient, left_congruences, one_element_act, orbit,
                      quotient, right_e_cancellable, subact)
from acta.catalog import (enumerate_acts, right_zero_adjoined, small_monoids,
                          trivial_monoid, u1, z2)


def test_build_act_regular():
    for m in (u1(), z2(), right_zero_adjoined()):
        assert act_of_monoid(m, "left").size == m.order
        assert act_of_monoid(m, "right").size == m.order


def test_build_act_one_element():
    assert one_element_act(z2()).size == 1


def test_build_act_identity_violation():
    with pytest.raises(IdentityActViolation):
        build_act(z2(), "left", ((1, 0), (0, 1)))


def test_build_act_associativity_violation():
    # g.(g.x) must equal x for an action of the two-element group
    with pytest.raises(AssociativityActViolation):
        build_act(z2(), "left", ((0, 1), (0, 0)))


def test_connected_components_examples():
    m = u1()
    s_act = act_of_monoid(m, "left")
    assert connected_components(s_act) == (0, 0)
    assert connected_components(disjoint_union(s_act, s_act)) == (0, 0, 1, 1)
    z = z2()
    both = disjoint_union(one_element_act(z), act_of_monoid(z, "left"))
    assert connected_components(both) == (0, 1, 1)


def test_congruence_closure_examples():
    s_act = act_of_monoid(u1(), "left")
    assert congruence_closure(s_act, []).classes == (0, 1)
    assert congruence_closure(s_act, [(0, 1)]).classes == (0, 0)
    z_act = act_of_monoid(z2(), "left")
    assert congruence_closure(z_act, [(0, 1)]).classes == (0, 0)


def _chain_oracle(act, pairs):
    """Connected components of the elementary-link graph (s.p, s.q)."""
    n = act.size
    adj = [set() for _ in range(n)]
    for s in range(act.monoid.order):
        for p, q in pairs:
            u, v = act.apply(s, p), act.apply(s, q)
            adj[u].add(v)
            adj[v].add(u)
    comp = [-1] * n
    nxt = 0
    for start in range(n):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = nxt
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if comp[y] < 0:
                    comp[y] = nxt
                    stack.append(y)
        nxt += 1
    return normalize_partition(comp)


def test_congruence_closure_matches_chain_oracle():
    for m in small_monoids(3):
        for size in (1, 2, 3):
            for act in enumerate_acts(m, size):
                pair_sets = [[(a, b)] for a in range(size) for b in range(a + 1, size)]
                pair_sets.append([(a, a + 1) for a in range(size - 1)])
                for pairs in pair_sets:
                    got = congruence_closure(act, pairs).classes
                    assert got == _chain_oracle(act, pairs)


def test_quotient_examples():
    s_act = act_of_monoid(u1(), "left")
    ident = congruence_closure(s_act, [])
    q, proj = quotient(s_act, ident)
    assert q.action == s_act.action and proj.map == (0, 1)
    universal = congruence_closure(s_act, [(0, 1)])
    q2, _ = quotient(s_act, universal)
    assert q2.size == 1
    split = act_congruence(s_act, (0, 1))
    q3, _ = quotient(s_act, split)
    assert q3.action == s_act.action


def test_act_congruence_rejects_incompatible():
    z_act = act_of_monoid(z2(), "left")
    act_congruence(z_act, (0, 0))  # universal is fine
    m3 = right_zero_adjoined()
    with pytest.raises(ValidationError):
        act_congruence(act_of_monoid(m3, "left"), (0, 0, 1))  # merges 1,a but not b=b.1~b.a=a


def test_cyclic_iso_examples():
    s_u1 = act_of_monoid(u1(), "left")
    assert cyclic_iso(s_u1, 0, s_u1, 0)
    z = z2()
    assert not cyclic_iso(act_of_monoid(z, "left"), 0, one_element_act(z), 0)
    se, _ = subact(s_u1, (1,))
    assert cyclic_iso(se, 0, one_element_act(u1()), 0)


def test_right_e_cancellable_examples():
    s_u1 = act_of_monoid(u1(), "left")
    assert right_e_cancellable(s_u1, 0, 0)
    se, _ = subact(s_u1, (1,))
    assert right_e_cancellable(se, 0, 1)
    assert not right_e_cancellable(one_element_act(z2()), 0, 0)


def test_classify_free_coproduct_of_regulars():
    for m in (u1(), z2(), right_zero_adjoined()):
        s_act = act_of_monoid(m, "left")
        for copies in (1, 2, 3):
            rep = classify_free_projective(disjoint_union(*[s_act] * copies))
            assert rep.is_free and rep.is_projective
            assert len(rep.components) == copies


def test_classify_theta_destroys_projectivity_over_group():
    z = z2()
    s_act = act_of_monoid(z, "left")
    rep = classify_free_projective(disjoint_union(s_act, one_element_act(z)))
    assert not rep.is_free and not rep.is_projective


def test_classify_se_projective_not_free():
    s_u1 = act_of_monoid(u1(), "left")
    se, _ = subact(s_u1, (1,))
    rep = classify_free_projective(se)
    assert rep.is_projective and not rep.is_free
    assert rep.components[0].generator == 0 and rep.components[0].idempotent == 1


def test_classify_theta_neither():
    rep = classify_free_projective(one_element_act(z2()))
    assert not rep.is_projective and not rep.is_free
    assert rep.components[0].idempotent is None


def test_se_projective_and_free_iff_identity():
    for m in small_monoids(4):
        s_act = act_of_monoid(m, "left")
        for e in m.idempotents():
            se, _ = subact(s_act, sorted(orbit(s_act, e)))
            rep = classify_free_projective(se)
            assert rep.is_projective
            assert rep.is_free == (e == m.identity)


def test_free_flag_matches_identity_certificates():
    for m in small_monoids(3):
        for act in enumerate_acts(m, 2):
            rep = classify_free_projective(act)
            assert rep.is_free == all(c.idempotent == m.identity for c in rep.components)
            if rep.is_free:
                assert rep.is_projective


def test_left_congruence_counts():
    assert len(left_congruences(trivial_monoid())) == 1
    assert len(left_congruences(z2())) == 2
    assert len(left_congruences(u1())) == 2
    assert len(left_congruences(right_zero_adjoined())) == 3


def test_left_congruences_cap():
    with pytest.raises(OrderExceedsCap):
        left_congruences(u1(), cap=1)


def test_morphism_composition_associative():
    m = u1()
    s_act = act_of_monoid(m, "left")
    f = build_morphism(s_act, s_act, tuple(m.mul[x][1] for x in range(m.order)))
    universal = congruence_closure(s_act, [(0, 1)])
    theta, proj = quotient(s_act, universal)
    g = proj
    h = build_morphism(theta, theta, (0,))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_quotient_factorisation_unique():
    m = u1()
    s_act = act_of_monoid(m, "left")
    universal = congruence_closure(s_act, [(0, 1)])
    theta, proj = quotient(s_act, universal)
    h = build_morphism(s_act, s_act, tuple(m.mul[x][1] for x in range(m.order)))
    q = factor_through_quotient(proj, h)
    assert compose(proj, q) == h
    ident = build_morphism(s_act, s_act, (0, 1))
    with pytest.raises(ValidationError):
        factor_through_quotient(proj, ident)
