import random

import pytest

from weylcoh.algebra import make_context
from weylcoh.weyl import (
    GroupElement, InternalInconsistency, act, build_group, closure, dihedral_phi, identity,
    quotient_by_sum,
)

GROUPS = ["SU3", "Sp2", "G2"]


def test_g2_generators_from_phi():
    phi = dihedral_phi()
    a = GroupElement(quotient_by_sum(phi["a"]))
    b = GroupElement(quotient_by_sum(phi["b"]))
    # columns are images: a: x1 -> x1 + x2, x2 -> -x1;  b: x1 -> x1, x2 -> -x1 - x2
    assert a.image(0) == (1, 1) and a.image(1) == (-1, 0)
    assert b.image(0) == (1, 0) and b.image(1) == (-1, -1)
    e = identity()
    assert a ** 6 == e and b ** 2 == e and a * b * a * b == e
    assert a ** 2 != e and a ** 3 != e


def test_quotient_needs_invariant_line():
    with pytest.raises(InternalInconsistency):
        quotient_by_sum(((1, 0, 0), (0, 2, 0), (0, 0, 1)))


@pytest.mark.parametrize("group, order", [("SU3", 6), ("Sp2", 8), ("G2", 12)])
def test_group_axioms(group, order):
    W = build_group(group)
    assert W.order == order
    e = identity()
    assert e in W
    for g in W:
        assert g.inverse() in W
        assert g * g.inverse() == e
        for h in W:
            assert g * h in W


def test_sp2_is_signed_permutations():
    mats = {g.matrix for g in build_group("Sp2")}
    expected = set()
    for s1 in (1, -1):
        for s2 in (1, -1):
            expected.add(((s1, 0), (0, s2)))
            expected.add(((0, s2), (s1, 0)))
    assert mats == expected


def test_closure_limit():
    with pytest.raises(InternalInconsistency):
        closure([GroupElement(((1, 1), (0, 1)))], limit=50)


def test_act_identity_and_transposition():
    ctx = make_context("SU3", 2)
    v = ctx.parse("x1*y1^1 + 3*x2^2*y2^1*y1^2")
    assert act(identity(), v) == v
    swap = GroupElement(((0, 1), (1, 0)))
    assert act(swap, ctx.parse("x1*y1^1")) == ctx.parse("x2*y2^1")


def test_act_rejects_foreign_element():
    ctx = make_context("SU3", 2)
    with pytest.raises(ValueError):
        act(GroupElement(((-1, 0), (0, 1))), ctx.x(1))


def test_g2_e2_and_e3_squared_invariant():
    ctx = make_context("G2", 1)
    e2 = ctx.parse("x1*x2 + x1*x3 + x2*x3")
    e3sq = ctx.parse("x1^2*x2^2*x3^2")
    for w in ctx.weyl:
        assert act(w, e2) == e2
        assert act(w, e3sq) == e3sq


def test_sp2_invariants():
    ctx = make_context("Sp2", 1)
    assert ctx.parse("x1^2 + x2^2") == 0
    q = ctx.parse("x1^2*x2^2")
    for w in ctx.weyl:
        assert act(w, q) == q


@pytest.mark.parametrize("group", GROUPS)
def test_action_is_homomorphism(group):
    ctx = make_context(group, 2)
    W = ctx.weyl.elements
    rng = random.Random(3)

    def rand(d):
        basis = ctx.basis_monomials(d)
        return sum((ctx.monomial(rng.choice(basis), rng.randint(-3, 3)) for _ in range(2)), ctx.zero())

    for _ in range(30):
        u, v = rand(rng.randint(0, 6)), rand(rng.randint(0, 6))
        w1, w2 = rng.choice(W), rng.choice(W)
        assert act(w1, u * v) == act(w1, u) * act(w1, v)
        assert act(w1 * w2, u) == act(w1, act(w2, u))
        assert act(w1, u).degrees() <= u.degrees()
