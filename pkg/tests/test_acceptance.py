"""Exit criteria.  Each test records one PASS/FAIL line shown in the terminal summary."""
import random
from fractions import Fraction

from conftest import ACCEPTANCE_LINES
from weylcoh.algebra import RawTerm, make_context, normal_form, poly_generating_function
from weylcoh.invariants import DEFAULT_MAX_DEGREE, is_invariant, poincare_series, reynolds
from weylcoh.presentation import (
    COMPLETED, STATED, PresentedAlgebra, build_generators, check_minimal_generation,
    check_relations,
)
from weylcoh.weyl import GroupElement, act, build_group, dihedral_phi, identity, quotient_by_sum

GROUPS = ["SU3", "Sp2", "G2"]
SEED = 20261016
CASES = 200

SERIES_M2 = {
    "SU3": [1, 0, 1, 2, 2, 4, 1, 2, 3],
    "Sp2": [1, 0, 1, 2, 1, 2, 2, 2, 0, 2, 3],
    "G2": [1, 0, 1, 2, 1, 2, 1, 0, 0, 0, 1, 2, 0, 2, 3],
}


def record(key, passed, detail):
    ACCEPTANCE_LINES.append((key, passed, detail))
    print(f"[{'PASS' if passed else 'FAIL'}] criterion {key}: {detail}")
    assert passed, detail


def test_1_poincare_series_m2():
    bad = []
    for g in GROUPS:
        expected = SERIES_M2[g] + [0, 0]
        got = poincare_series(make_context(g, 2), len(expected) - 1)
        if got != expected:
            bad.append(f"{g}: {got}")
    record(1, not bad, "m=2 series exact for SU3, Sp2, G2 (+2 zero degrees)" if not bad else "; ".join(bad))


def test_2_relation_suite():
    problems = []
    for g in GROUPS:
        gens = build_generators(make_context(g, 2))
        for c in check_relations(gens, STATED):
            if not c.passed:
                problems.append(f"{g} {c.name} {c.detail}")
    g2 = make_context("G2", 2)
    gens = build_generators(g2)
    witness = g2.parse("3*x1^4*x2*y1^1*y2^1*y2^2 + 3*x1*x2^4*y2^1*y1^1*y1^2")
    actual = gens.a(1, 1) * gens.b(2)
    if witness != actual:
        problems.append(f"G2 a1^1*b2 = {actual}, not the closed form {witness}")
    completed_ok = all(c.passed for g in GROUPS
                       for c in check_relations(build_generators(make_context(g, 2)), COMPLETED))
    detail = ("all relations and length-3 products vanish; witness reproduced" if not problems else
              " | ".join(problems) + f" | (completed relation set vanishes everywhere: {completed_ok})")
    record(2, not problems, detail)


def test_3_isomorphism_certification():
    bad = []
    for g in GROUPS:
        ctx = make_context(g, 2)
        top = DEFAULT_MAX_DEGREE[g]
        inv = poincare_series(ctx, top)
        pres = PresentedAlgebra.for_group(g, STATED).series(top)
        span = check_minimal_generation(build_generators(ctx), top)["span"]
        for d in range(top + 1):
            if not inv[d] == pres[d] == span[d]:
                bad.append(f"{g} deg {d}: invariant {inv[d]}, presented {pres[d]}, span {span[d]}")
    record(3, not bad, "dimension table agrees in every degree" if not bad else
           "; ".join(bad) + " (a2^1*a2^2 is not among the relations)")


def test_4_minimal_generation():
    bad = []
    for g in GROUPS:
        mg = check_minimal_generation(build_generators(make_context(g, 2)), 0)
        bad += [f"{g}:{n}" for n, ok in mg["generators"].items() if not ok]
    record(4, not bad, "all six generators indecomposable in all three groups" if not bad else ", ".join(bad))


def _basic_degrees(ctx):
    """Degrees d1 <= d2 with prod (1 - q^d)/(1 - q) equal to the coinvariant series in q = t^2."""
    target = poly_generating_function(ctx)[::2]
    for d1 in range(1, 13):
        for d2 in range(d1, 13):
            a = [1] * d1
            b = [1] * d2
            prod = [0] * (d1 + d2 - 1)
            for i, x in enumerate(a):
                for j, y in enumerate(b):
                    prod[i + j] += x * y
            if prod == target:
                return d1, d2
    return None


def test_5_solomon_m1():
    expected_odd = {"SU3": (3, 5), "Sp2": (3, 7), "G2": (3, 11)}
    bad = []
    for g in GROUPS:
        ctx = make_context(g, 1)
        series = poincare_series(ctx, ctx.top_degree)
        degs = _basic_degrees(ctx)
        odd = tuple(2 * d - 1 for d in degs)
        a, b = expected_odd[g]
        ext = [0] * (ctx.top_degree + 1)
        for d in (0, a, b, a + b):
            ext[d] += 1
        if odd != (a, b) or series != ext:
            bad.append(f"{g}: series {series}, basic degrees {degs}")
    record(5, not bad, "(1+t^3)(1+t^5), (1+t^3)(1+t^7), (1+t^3)(1+t^11)" if not bad else "; ".join(bad))


def test_6_coinvariant_structure():
    gf = poly_generating_function(make_context("G2", 1))
    counts = [len(make_context(g, 1).poly_monomials()) for g in GROUPS]
    orders = [build_group(g).order for g in GROUPS]
    ok = gf == [1, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 1] and counts == [6, 8, 12] == orders
    record(6, ok, f"G2 poly series {gf}; reduced basis sizes {counts}; |W| {orders}")


def _random_homogeneous(ctx, rng, degree):
    basis = ctx.basis_monomials(degree)
    if not basis:
        return ctx.zero()
    return sum((ctx.monomial(rng.choice(basis), Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
                for _ in range(rng.randint(1, 3))), ctx.zero())


def test_7_property_suites():
    rng = random.Random(SEED)
    counts = {"sign law": 0, "associativity": 0, "reynolds": 0, "confluence": 0, "closure": 0}
    failures = []
    for k in range(CASES):
        g = GROUPS[k % 3]
        ctx = make_context(g, 2)
        u, v, w = (_random_homogeneous(ctx, rng, rng.randint(0, 6)) for _ in range(3))
        if u and v and u * v != (-1) ** (u.degree * v.degree) * (v * u):
            failures.append(("sign law", g))
        counts["sign law"] += 1
        if (u * v) * w != u * (v * w):
            failures.append(("associativity", g))
        counts["associativity"] += 1
        r = reynolds(u)
        if reynolds(r) != r or not is_invariant(r):
            failures.append(("reynolds", g))
        counts["reynolds"] += 1
        n_raw = ctx.rewrite.n_raw
        raw = [RawTerm(Fraction(rng.randint(-5, 5)), tuple(rng.randint(0, 8) for _ in range(n_raw)),
                       tuple((rng.randrange(2), rng.randrange(n_raw)) for _ in range(rng.randint(0, 4))))
               for _ in range(3)]
        if normal_form(ctx, raw) != normal_form(ctx, raw, rng=random.Random(rng.random())):
            failures.append(("confluence", g))
        counts["confluence"] += 1
        W = build_group(g)
        a, b = rng.choice(W.elements), rng.choice(W.elements)
        if a * b not in W or a.inverse() not in W or act(a * b, u) != act(a, act(b, u)):
            failures.append(("closure", g))
        counts["closure"] += 1
    phi = dihedral_phi()
    a = GroupElement(quotient_by_sum(phi["a"]))
    b = GroupElement(quotient_by_sum(phi["b"]))
    e = identity()
    if not (a ** 6 == e and b ** 2 == e and a * b * a * b == e):
        failures.append(("D6 relations", "G2"))
    ok = not failures and all(c >= CASES for c in counts.values())
    record(7, ok, f"seed {SEED}: " + ", ".join(f"{k} x{c}" for k, c in counts.items())
           + "; D6 a^6=b^2=abab=1" + (f"; failures {failures[:5]}" if failures else ""))


def test_8_total_dimension():
    totals = {g: PresentedAlgebra.for_group(g, STATED).total_dimension for g in GROUPS}
    completed = {g: PresentedAlgebra.for_group(g, COMPLETED).total_dimension for g in GROUPS}
    invariant = {g: sum(poincare_series(make_context(g, 2))) for g in GROUPS}
    ok = all(t == 16 for t in totals.values())
    record(8, ok, f"presented totals {totals}; invariant totals {invariant}; "
                  f"with a2^1*a2^2 added {completed}")
