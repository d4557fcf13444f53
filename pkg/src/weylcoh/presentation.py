"""Generators a_i^j, b_i, the presented algebra, and presentation certificates.

The presented algebra is the free graded-commutative algebra on
a1^1, a2^1, a1^2, a2^2, b1, b2 modulo the cube of the augmentation ideal and
a list of quadratic relations.  Two relation lists are provided:

``STATED``
    the seven quadratic generators of the ideal I exactly as printed.
``COMPLETED``
    the same list with the sign of the mixed a*a relation flipped and
    a2^1*a2^2 added; this is what the invariant rings actually satisfy.

Certification works degreewise: relations vanish, products of generators
span every invariant subspace, and the presented algebra has the same
dimension as the invariant ring in every degree where either is nonzero.
Surjectivity plus equal dimensions gives the isomorphism.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .algebra import AlgebraContext, AlgebraElement, canonical_group, make_context
from .invariants import DEFAULT_MAX_DEGREE, invariant_basis, is_invariant, poincare_series, reynolds
from .linalg import nullspace, rank, row_reduce
from .weyl import InternalInconsistency, act

NAMES = ("a1^1", "a2^1", "a1^2", "a2^2", "b1", "b2")

# (x-power of a_i, x-power of b_i) as functions of i
_POWERS = {
    "SU3": (lambda i: i, lambda i: i - 1),
    "Sp2": (lambda i: 2 * i - 1, lambda i: 2 * i - 2),
    "G2": (lambda i: 4 * i - 3, lambda i: 4 * i - 4),
}

DECLARED_DEGREES = {
    "SU3": {"a1^1": 3, "a2^1": 5, "a1^2": 3, "a2^2": 5, "b1": 2, "b2": 4},
    "Sp2": {"a1^1": 3, "a2^1": 7, "a1^2": 3, "a2^2": 7, "b1": 2, "b2": 6},
    "G2": {"a1^1": 3, "a2^1": 11, "a1^2": 3, "a2^2": 11, "b1": 2, "b2": 10},
}

Word = Tuple[int, ...]
Relation = Tuple[str, Dict[Word, int]]


def _w(*names: str) -> Word:
    return tuple(NAMES.index(n) for n in names)


STATED: Tuple[Relation, ...] = (
    ("b1*b2", {_w("b1", "b2"): 1}),
    ("b2^2", {_w("b2", "b2"): 1}),
    ("a2^1*b2", {_w("a2^1", "b2"): 1}),
    ("a2^2*b2", {_w("a2^2", "b2"): 1}),
    ("a1^1*b2 + a2^1*b1", {_w("a1^1", "b2"): 1, _w("a2^1", "b1"): 1}),
    ("a1^2*b2 + a2^2*b1", {_w("a1^2", "b2"): 1, _w("a2^2", "b1"): 1}),
    ("a1^1*a2^2 + a1^2*a2^1", {_w("a1^1", "a2^2"): 1, _w("a1^2", "a2^1"): 1}),
)

COMPLETED: Tuple[Relation, ...] = STATED[:6] + (
    ("a1^1*a2^2 - a1^2*a2^1", {_w("a1^1", "a2^2"): 1, _w("a1^2", "a2^1"): -1}),
    ("a2^1*a2^2", {_w("a2^1", "a2^2"): 1}),
)

RELATION_SETS = {"stated": STATED, "completed": COMPLETED}


class GeneratorSet(NamedTuple):
    group: str
    elements: Dict[str, AlgebraElement]
    declared_degrees: Dict[str, int]

    def a(self, i: int, j: int) -> AlgebraElement:
        return self.elements[f"a{i}^{j}"]

    def b(self, i: int) -> AlgebraElement:
        return self.elements[f"b{i}"]

    def __getitem__(self, name: str) -> AlgebraElement:
        return self.elements[name]

    def ordered(self) -> List[AlgebraElement]:
        return [self.elements[n] for n in NAMES]


def build_generators(ctx: AlgebraContext) -> GeneratorSet:
    """a_i^j = sum_l x_l^p(i) y_l^j and b_i = sum_l x_l^q(i) y_l^1 y_l^2, summed over all l."""
    if ctx.m != 2:
        raise ValueError("generators are defined for m=2 only")
    p, q = _POWERS[ctx.group]
    letters = range(1, ctx.rewrite.n_raw + 1)
    x = {l: ctx.x(l) for l in letters}
    y = {(l, j): ctx.y(l, j) for l in letters for j in (1, 2)}
    elements = {}
    for i in (1, 2):
        for j in (1, 2):
            elements[f"a{i}^{j}"] = sum((x[l] ** p(i) * y[l, j] for l in letters), ctx.zero())
        elements[f"b{i}"] = sum((x[l] ** q(i) * y[l, 1] * y[l, 2] for l in letters), ctx.zero())
    declared = DECLARED_DEGREES[ctx.group]
    for name, g in elements.items():
        if not g or g.degree != declared[name]:
            raise InternalInconsistency(f"{ctx.group}: {name} has degrees {sorted(g.degrees())}")
        if not is_invariant(g):
            raise InternalInconsistency(f"{ctx.group}: {name} is not invariant")
    return GeneratorSet(ctx.group, {n: elements[n] for n in NAMES}, dict(declared))


# -- formal words -------------------------------------------------------------

def canonical_word(word: Sequence[int], parity: Sequence[int]) -> Tuple[int, Optional[Word]]:
    """Sort a word of generator indices; returns (sign, word), or (0, None) if it vanishes."""
    word = list(word)
    sign = 1
    for i in range(len(word)):
        for j in range(len(word) - 1 - i):
            a, b = word[j], word[j + 1]
            if a > b:
                word[j], word[j + 1] = b, a
                if parity[a] and parity[b]:
                    sign = -sign
    for a, b in zip(word, word[1:]):
        if a == b and parity[a]:
            return 0, None
    return sign, tuple(word)


def render_word(word: Word) -> str:
    return "*".join(NAMES[i] for i in word) or "1"


def render_combination(combo: Dict[Word, Fraction]) -> str:
    parts = []
    for w, c in sorted(combo.items()):
        if not c:
            continue
        mag = abs(c)
        body = render_word(w) if mag == 1 else f"{mag}*{render_word(w)}"
        parts.append(("- " if c < 0 else "+ ") + body)
    s = " ".join(parts) or "0"
    return s[2:] if s.startswith("+ ") else ("-" + s[2:] if s.startswith("- ") else s)


class PresentedAlgebra:
    """Free graded-commutative algebra on six generators mod (augmentation)^3 + relations."""

    def __init__(self, degrees: Dict[str, int], relations: Sequence[Relation] = STATED):
        self.degrees = [degrees[n] for n in NAMES]
        self.parity = [d % 2 for d in self.degrees]
        self.relations = []
        for name, combo in relations:
            canon: Dict[Word, Fraction] = {}
            for w, c in combo.items():
                s, cw = canonical_word(w, self.parity)
                if s:
                    canon[cw] = canon.get(cw, 0) + s * Fraction(c)
            self.relations.append((name, {w: c for w, c in canon.items() if c}))

    @classmethod
    def for_group(cls, group: str, relations: Sequence[Relation] = STATED) -> "PresentedAlgebra":
        return cls(DECLARED_DEGREES[canonical_group(group)], relations)

    def word_degree(self, word: Word) -> int:
        return sum(self.degrees[i] for i in word)

    def words(self, degree: int, max_length: int = 2) -> List[Word]:
        """Canonical nonvanishing words of length 0..max_length in one degree."""
        out = []
        for length in range(max_length + 1):
            for w in combinations_with_replacement(range(len(NAMES)), length):
                if self.word_degree(w) != degree:
                    continue
                if canonical_word(w, self.parity)[0]:
                    out.append(w)
        return out

    def relation_rows(self, degree: int, words: Sequence[Word]) -> List[List[Fraction]]:
        index = {w: k for k, w in enumerate(words)}
        rows = []
        for _, combo in self.relations:
            if combo and all(self.word_degree(w) == degree for w in combo):
                row = [Fraction(0)] * len(words)
                for w, c in combo.items():
                    row[index[w]] += c
                rows.append(row)
        return rows

    def dimension(self, degree: int) -> int:
        words = self.words(degree)
        return len(words) - rank(self.relation_rows(degree, words))

    @property
    def top_degree(self) -> int:
        return 2 * max(self.degrees)

    def series(self, max_degree: Optional[int] = None) -> List[int]:
        if max_degree is None:
            max_degree = self.top_degree
        return [self.dimension(d) for d in range(max_degree + 1)]

    @property
    def total_dimension(self) -> int:
        return sum(self.series())


def presented_series(pres: PresentedAlgebra, max_degree: Optional[int] = None) -> List[int]:
    return pres.series(max_degree)


# -- evaluation in the invariant ring ------------------------------------------

class _Evaluator:
    """Products of generators, memoized on canonical words."""

    def __init__(self, gens: GeneratorSet):
        self.ctx = next(iter(gens.elements.values())).ctx
        self.gens = gens.ordered()
        self.cache: Dict[Word, AlgebraElement] = {(): self.ctx.one()}

    def __call__(self, word: Word) -> AlgebraElement:
        hit = self.cache.get(word)
        if hit is None:
            hit = self(word[:-1]) * self.gens[word[-1]]
            self.cache[word] = hit
        return hit

    def combination(self, combo: Dict[Word, Fraction]) -> AlgebraElement:
        return sum((c * self(w) for w, c in combo.items()), self.ctx.zero())


def _all_words(degrees: Sequence[int], parity: Sequence[int], degree: int, min_length: int = 1) -> List[Word]:
    """Every canonical nonvanishing word of exactly ``degree`` with length >= min_length."""
    out = []

    def rec(start, remaining, word):
        if remaining == 0:
            if len(word) >= min_length:
                out.append(tuple(word))
            return
        for i in range(start, len(degrees)):
            if degrees[i] > remaining:
                continue
            if parity[i] and word and word[-1] == i:
                continue
            word.append(i)
            rec(i, remaining - degrees[i], word)
            word.pop()

    rec(0, degree, [])
    return out


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


def check_relations(gens: GeneratorSet, relations: Sequence[Relation] = STATED,
                    evaluator: Optional[_Evaluator] = None) -> List[Check]:
    """Evaluate each relation and every length-3 product in the invariant ring."""
    ev = evaluator or _Evaluator(gens)
    pres = PresentedAlgebra(gens.declared_degrees, relations)
    out = []
    for name, combo in pres.relations:
        value = ev.combination(combo)
        out.append(Check(f"relation {name}", not value, f"= {value}"))
    nonzero = []
    triples = list(combinations_with_replacement(range(len(NAMES)), 3))
    for w in triples:
        if ev(w):
            nonzero.append(render_word(w))
    detail = f"{len(triples)} products checked" + (f"; nonzero: {', '.join(nonzero)}" if nonzero else "")
    out.append(Check("cube: every length-3 product vanishes", not nonzero, detail))
    return out


def nonvanishing_witnesses(gens: GeneratorSet, evaluator: Optional[_Evaluator] = None) -> List[Tuple[str, bool]]:
    """Products that a spanning argument needs to be nonzero."""
    ev = evaluator or _Evaluator(gens)
    words = [_w("a1^1"), _w("a1^2"), _w("a1^1", "a1^2")]
    for j in (1, 2):
        words += [_w(f"a1^{j}", "b1"), _w(f"a1^{j}", "b2")]
    for i in (1, 2):
        for j in (1, 2):
            words.append(_w(f"a1^{i}", f"a2^{j}"))
    parity = [d % 2 for d in (gens.declared_degrees[n] for n in NAMES)]
    out = []
    for w in words:
        _, cw = canonical_word(w, parity)
        out.append((render_word(w), bool(ev(cw))))
    return out


def check_minimal_generation(gens: GeneratorSet, max_degree: int,
                             evaluator: Optional[_Evaluator] = None) -> Dict[str, object]:
    """Span and minimality per degree.

    Returns ``{"span": {d: dim}, "invariant": {d: dim}, "generators": {name: bool}}``
    where the generator flag is True when the generator is independent of the
    other generators of its degree together with all decomposable products.
    """
    ev = evaluator or _Evaluator(gens)
    ctx = ev.ctx
    degrees = [gens.declared_degrees[n] for n in NAMES]
    parity = [d % 2 for d in degrees]
    span, inv = {}, {}
    for d in range(max_degree + 1):
        basis = ctx.basis_monomials(d)
        inv[d] = invariant_basis(ctx, d).dimension if basis else 0
        if d == 0:
            span[d] = 1
            continue
        if not basis:
            span[d] = 0
            continue
        rows = [ev(w).to_vector(basis) for w in _all_words(degrees, parity, d)]
        span[d] = rank(rows)
    minimal = {}
    for k, name in enumerate(NAMES):
        d = degrees[k]
        basis = ctx.basis_monomials(d)
        others = [w for w in _all_words(degrees, parity, d) if w != (k,)]
        base_rows = [ev(w).to_vector(basis) for w in others]
        with_gen = base_rows + [ev((k,)).to_vector(basis)]
        minimal[name] = rank(with_gen) > rank(base_rows)
    return {"span": span, "invariant": inv, "generators": minimal}


def unexplained_kernel(gens: GeneratorSet, pres: PresentedAlgebra, degree: int,
                       evaluator: Optional[_Evaluator] = None) -> List[str]:
    """Linear combinations of words of length <= 2 that vanish in the invariant ring
    but are not consequences of the presented relations in this degree."""
    ev = evaluator or _Evaluator(gens)
    ctx = ev.ctx
    words = pres.words(degree)
    if not words:
        return []
    basis = ctx.basis_monomials(degree)
    # columns of the evaluation map are word images; kernel = null space of its transpose rows
    images = [ev(w).to_vector(basis) for w in words]
    cols = [[images[k][r] for k in range(len(words))] for r in range(len(basis))]
    kernel = nullspace(cols, len(words))
    rel_rows = pres.relation_rows(degree, words)
    current = rank(rel_rows)
    found = []
    acc = list(rel_rows)
    for vec in row_reduce(kernel).rows if kernel else []:
        if rank(acc + [vec]) > current:
            acc.append(vec)
            current += 1
            found.append(render_combination({w: c for w, c in zip(words, vec) if c}))
    return found


@dataclass
class PresentationReport:
    group: str
    m: int
    relation_set: str
    series: List[int]
    presented_series: List[int]
    checks: List[Check]
    nonvanishing_witnesses: List[Tuple[str, bool]]
    minimality: Dict[str, bool]
    dimension_table: List[Tuple[int, int, int, int]]
    unexplained_relations: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def relation_results(self) -> List[Check]:
        return [c for c in self.checks if c.name.startswith(("relation", "cube"))]

    def failed(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "m": self.m,
            "relations": self.relation_set,
            "series": self.series,
            "presented_series": self.presented_series,
            "checks": [c.to_dict() for c in self.checks],
            "dimension_table": [list(r) for r in self.dimension_table],
            "nonvanishing_witnesses": [[n, ok] for n, ok in self.nonvanishing_witnesses],
            "minimality": self.minimality,
            "unexplained_relations": [[d, s] for d, s in self.unexplained_relations],
            "verdict": self.verdict,
        }


def _sampled_properties(ctx: AlgebraContext, seed: int, samples: int = 20) -> Check:
    """Randomized homomorphism/sign-law spot checks on small homogeneous elements."""
    rng = random.Random(seed)
    group = ctx.weyl
    failures = 0
    for _ in range(samples):
        u = random_homogeneous(ctx, rng, rng.randint(0, 5))
        v = random_homogeneous(ctx, rng, rng.randint(0, 5))
        w = rng.choice(group.elements)
        if act(w, u * v) != act(w, u) * act(w, v):
            failures += 1
        if u and v and u * v != (-1) ** (u.degree * v.degree) * (v * u):
            failures += 1
        r = reynolds(u)
        if act(w, r) != r:
            failures += 1
    return Check(f"sampled properties (seed {seed})", failures == 0, f"{samples} samples, {failures} failures")


def random_homogeneous(ctx: AlgebraContext, rng: random.Random, degree: int, terms: int = 3) -> AlgebraElement:
    basis = ctx.basis_monomials(degree)
    if not basis:
        return ctx.zero()
    out = ctx.zero()
    for _ in range(terms):
        out = out + ctx.monomial(rng.choice(basis), Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
    return out


def verify_theorem(group: str, m: int = 2, max_degree: Optional[int] = None,
                   relations: str = "stated", seed: int = 0) -> PresentationReport:
    """Run every check for one group and assemble a report.

    The dimension table runs up to the largest of ``max_degree``, the top
    degree of the model ring and the top degree of the presented algebra, so
    classes of the presented algebra beyond the model ring are not missed.
    """
    group = canonical_group(group)
    if m != 2:
        raise ValueError("verification requires m=2")
    if relations not in RELATION_SETS:
        raise ValueError(f"unknown relation set {relations!r}")
    ctx = make_context(group, 2)
    if max_degree is None:
        max_degree = DEFAULT_MAX_DEGREE[group]
    gens = build_generators(ctx)
    ev = _Evaluator(gens)
    pres = PresentedAlgebra(gens.declared_degrees, RELATION_SETS[relations])
    window = max(max_degree, ctx.top_degree, pres.top_degree)

    checks = [Check("invariance: generators fixed by the Weyl group", True,
                    ", ".join(f"{n} (deg {gens.declared_degrees[n]})" for n in NAMES))]
    checks += check_relations(gens, RELATION_SETS[relations], ev)

    witnesses = nonvanishing_witnesses(gens, ev)
    zero = [n for n, ok in witnesses if not ok]
    checks.append(Check("nonvanishing witnesses", not zero,
                        f"{len(witnesses)} products" + (f"; zero: {', '.join(zero)}" if zero else "")))

    inv_series = poincare_series(ctx, window)
    pres_series = pres.series(window)
    mg = check_minimal_generation(gens, window, ev)
    table = [(d, inv_series[d], pres_series[d], mg["span"][d]) for d in range(window + 1)]

    bad_series = [d for d, i, p, _ in table if i != p]
    checks.append(Check("series: presented algebra matches invariants", not bad_series,
                        "all degrees agree" if not bad_series else
                        "mismatch in degrees " + ", ".join(f"{d} ({inv_series[d]} vs {pres_series[d]})"
                                                           for d in bad_series)))
    bad_span = [d for d, i, _, s in table if i != s]
    checks.append(Check("span: generator products span the invariants", not bad_span,
                        "all degrees spanned" if not bad_span else f"short in degrees {bad_span}"))
    not_min = [n for n, ok in mg["generators"].items() if not ok]
    checks.append(Check("minimality: no generator is decomposable", not not_min,
                        "all six indispensable" if not not_min else f"decomposable: {', '.join(not_min)}"))
    checks.append(_sampled_properties(ctx, seed))

    unexplained = []
    for d in range(window + 1):
        for s in unexplained_kernel(gens, pres, d, ev):
            unexplained.append((d, s))
    checks.append(Check("kernel: every vanishing quadratic combination is a relation", not unexplained,
                        "none missing" if not unexplained else
                        "; ".join(f"deg {d}: {s}" for d, s in unexplained)))

    return PresentationReport(
        group=group, m=2, relation_set=relations, series=inv_series,
        presented_series=pres_series, checks=checks, nonvanishing_witnesses=witnesses,
        minimality=mg["generators"], dimension_table=table, unexplained_relations=unexplained,
    )
