"""Exact graded-commutative algebra for coinvariants tensored with exterior factors.

An element lives in

    F[x1, x2] / (coinvariant ideal)  (x)  Lambda(y1^1, y2^1) (x) ... (x) Lambda(y1^m, y2^m)

with |x_i| = 2 and |y_i^j| = 1.  For SU3 and G2 the third variables are
eliminated on input (x3 = -x1 - x2, y3^j = -y1^j - y2^j), so every stored
monomial uses the two retained variables only.

Exterior monomials are written in a fixed global order: the y^1 block first,
then the y^2 block, and so on, each block ascending.  Products re-sort into
that order and pick up the Koszul sign.
"""
from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from math import comb
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

Rational = Fraction

Exps = Tuple[int, ...]
Ext = Tuple[Tuple[int, ...], ...]

GROUPS = ("SU3", "Sp2", "G2")
_GROUP_ALIASES = {
    "su3": "SU3", "su(3)": "SU3",
    "sp2": "Sp2", "sp(2)": "Sp2",
    "g2": "G2", "g_2": "G2",
}


def canonical_group(name: str) -> str:
    """Map user spellings like ``su3`` or ``Sp(2)`` to ``SU3``/``Sp2``/``G2``."""
    key = str(name).strip().lower()
    if key not in _GROUP_ALIASES:
        raise ValueError(f"unknown group {name!r}; expected one of su3, sp2, g2")
    return _GROUP_ALIASES[key]


class TensorMonomial(NamedTuple):
    """x-exponents together with one sorted index tuple per exterior factor."""
    poly: Exps
    ext: Ext

    @property
    def degree(self) -> int:
        return 2 * sum(self.poly) + sum(len(s) for s in self.ext)

    @property
    def exterior_degree(self) -> int:
        return sum(len(s) for s in self.ext)


class PowerRule(NamedTuple):
    var: int
    power: int
    # (exponents, coefficient) pairs of the polynomial replacing var**power
    replacement: Tuple[Tuple[Exps, int], ...]


class RawTerm(NamedTuple):
    """Unreduced input term.

    ``poly`` has one exponent per raw variable (three when an elimination is
    present).  ``word`` lists exterior generators ``(factor, index)`` in the
    order they are written; repeats and unsorted words are allowed.
    """
    coeff: Fraction
    poly: Exps
    word: Tuple[Tuple[int, int], ...] = ()


class RewriteSystem(NamedTuple):
    """Elimination plus top-reduction rules for one coinvariant ring.

    The leading terms of the power rules and the nilpotence rules are
    pairwise coprime, so the rules form a Groebner basis and normal forms do
    not depend on the order the rules are applied in.
    """
    n_vars: int
    # coefficients of the eliminated third variable in terms of the retained
    # ones, or None when nothing is eliminated
    elimination: Optional[Tuple[int, ...]]
    power_rules: Tuple[PowerRule, ...]
    top_nilpotence: Tuple[Tuple[int, int], ...]

    @property
    def n_raw(self) -> int:
        return self.n_vars + (self.elimination is not None)

    def bounds(self) -> Tuple[int, ...]:
        """Exclusive exponent bounds of reduced monomials, per variable."""
        bound = [None] * self.n_vars
        for rule in self.power_rules:
            bound[rule.var] = rule.power
        for var, power in self.top_nilpotence:
            bound[var] = power if bound[var] is None else min(bound[var], power)
        return tuple(bound)

    def applicable(self, exps: Exps) -> List[int]:
        """Indices of rules whose lead divides ``exps``; nilpotence rules follow power rules."""
        hits = [k for k, r in enumerate(self.power_rules) if exps[r.var] >= r.power]
        off = len(self.power_rules)
        hits += [off + k for k, (v, p) in enumerate(self.top_nilpotence) if exps[v] >= p]
        return hits

    def apply(self, rule_index: int, exps: Exps) -> List[Tuple[Exps, int]]:
        """Rewrite one monomial with one rule; returns its image as (exps, coeff) pairs."""
        if rule_index >= len(self.power_rules):
            return []
        rule = self.power_rules[rule_index]
        base = list(exps)
        base[rule.var] -= rule.power
        out = []
        for rexps, c in rule.replacement:
            out.append((tuple(b + r for b, r in zip(base, rexps)), c))
        return out

    def reduce(self, poly: Dict[Exps, Fraction],
               choose: Optional[Callable[[Sequence], object]] = None) -> Dict[Exps, Fraction]:
        """Reduce a polynomial on the retained variables to normal form.

        ``choose`` picks which pending monomial and which applicable rule to
        use at each step; the default always takes the first of each.
        """
        pending = {e: Fraction(c) for e, c in poly.items() if c}
        done: Dict[Exps, Fraction] = {}
        while pending:
            keys = sorted(pending)
            exps = choose(keys) if choose else keys[0]
            c = pending.pop(exps)
            rules = self.applicable(exps)
            if not rules:
                v = done.get(exps, 0) + c
                if v:
                    done[exps] = v
                else:
                    done.pop(exps, None)
                continue
            k = choose(rules) if choose else rules[0]
            for e, rc in self.apply(k, exps):
                if self.applicable(e):
                    v = pending.get(e, 0) + c * rc
                else:
                    # already reduced: merge straight into the result
                    v = done.get(e, 0) + c * rc
                    if v:
                        done[e] = v
                    else:
                        done.pop(e, None)
                    continue
                if v:
                    pending[e] = v
                else:
                    pending.pop(e, None)
        return done


_REWRITE = {
    # e1 = 0 eliminates x3; e2 = 0 gives x2^2 = -x1^2 - x1*x2; then e3 = x1^3
    "SU3": RewriteSystem(2, (-1, -1), (PowerRule(1, 2, (((2, 0), -1), ((1, 1), -1))),), ((0, 3),)),
    # ideal (x1^2 + x2^2, x1^2 x2^2) of signed-permutation invariants
    "Sp2": RewriteSystem(2, None, (PowerRule(1, 2, (((2, 0), -1),)),), ((0, 4),)),
    # (e1, e2, e3^2): same quadratic rule, e3^2 = x1^6
    "G2": RewriteSystem(2, (-1, -1), (PowerRule(1, 2, (((2, 0), -1), ((1, 1), -1))),), ((0, 6),)),
}


def _sort_word(word: Sequence[Tuple[int, int]]) -> Tuple[int, Optional[Tuple[Tuple[int, int], ...]]]:
    """Sign of the sorting permutation and the sorted word, or (0, None) on a repeat."""
    if len(set(word)) != len(word):
        return 0, None
    inversions = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return (-1) ** inversions, tuple(sorted(word))


class AlgebraContext:
    """One model ring: a group preset together with the number of exterior factors.

    Contexts are immutable and cached by :func:`make_context`; elements from
    the same (group, m) therefore share one context object.
    """

    def __init__(self, group: str, m: int):
        self.group = group
        self.m = m
        self.rewrite = _REWRITE[group]
        self.n_vars = self.rewrite.n_vars
        self._poly_cache: Dict[Exps, Tuple[Tuple[Exps, int], ...]] = {}
        self._ext_cache: Dict[Tuple[Ext, Ext], Tuple[int, Optional[Ext]]] = {}
        self._basis_cache: Dict[int, Tuple[TensorMonomial, ...]] = {}
        self._weyl = None

    def __repr__(self):
        return f"AlgebraContext({self.group!r}, m={self.m})"

    def __reduce__(self):
        return make_context, (self.group, self.m)

    # -- basis -------------------------------------------------------------

    def poly_monomials(self) -> List[Exps]:
        """Reduced polynomial monomials, in decreasing monomial order."""
        ranges = [range(b) for b in self.rewrite.bounds()]
        return sorted(cartesian(*ranges), reverse=True)

    def exterior_subsets(self) -> List[Ext]:
        subsets = [()] + [(i,) for i in range(self.n_vars)] + [tuple(range(self.n_vars))]
        if self.n_vars != 2:
            raise NotImplementedError("only rank-2 presets are supported")
        return sorted(cartesian(subsets, repeat=self.m), reverse=True)

    def basis_monomials(self, degree: int) -> Tuple[TensorMonomial, ...]:
        """All reduced monomials of total degree ``degree``, in decreasing order."""
        if degree not in self._basis_cache:
            out = []
            for p in self.poly_monomials():
                for e in self.exterior_subsets():
                    mono = TensorMonomial(p, e)
                    if mono.degree == degree:
                        out.append(mono)
            self._basis_cache[degree] = tuple(sorted(out, reverse=True))
        return self._basis_cache[degree]

    @property
    def top_degree(self) -> int:
        top_poly = 2 * sum(b - 1 for b in self.rewrite.bounds())
        return top_poly + self.n_vars * self.m

    @property
    def dimension(self) -> int:
        return len(self.poly_monomials()) * len(self.exterior_subsets())

    @property
    def weyl(self):
        if self._weyl is None:
            from .weyl import build_group
            self._weyl = build_group(self.group)
        return self._weyl

    # -- arithmetic kernels ------------------------------------------------

    def reduce_poly(self, exps: Exps) -> Tuple[Tuple[Exps, int], ...]:
        """Normal form of a single monomial in the retained variables (memoized)."""
        hit = self._poly_cache.get(exps)
        if hit is None:
            red = self.rewrite.reduce({exps: Fraction(1)})
            hit = tuple(sorted(((e, int(c)) for e, c in red.items()), reverse=True))
            self._poly_cache[exps] = hit
        return hit

    def ext_product(self, a: Ext, b: Ext) -> Tuple[int, Optional[Ext]]:
        key = (a, b)
        hit = self._ext_cache.get(key)
        if hit is None:
            word = [(j, i) for j, s in enumerate(a) for i in s] + [(j, i) for j, s in enumerate(b) for i in s]
            sign, srt = _sort_word(word)
            if not sign:
                hit = (0, None)
            else:
                blocks = [[] for _ in range(self.m)]
                for j, i in srt:
                    blocks[j].append(i)
                hit = (sign, tuple(tuple(bl) for bl in blocks))
            self._ext_cache[key] = hit
        return hit

    def monomial_product(self, u: TensorMonomial, v: TensorMonomial) -> List[Tuple[TensorMonomial, int]]:
        sign, ext = self.ext_product(u.ext, v.ext)
        if not sign:
            return []
        raw = tuple(a + b for a, b in zip(u.poly, v.poly))
        return [(TensorMonomial(e, ext), sign * c) for e, c in self.reduce_poly(raw)]

    # -- constructors ------------------------------------------------------

    def element(self, terms: Dict[TensorMonomial, object]) -> "AlgebraElement":
        """Wrap a dict of already-reduced monomials."""
        return AlgebraElement(self, {k: Fraction(v) for k, v in terms.items() if v})

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return self.monomial(TensorMonomial((0,) * self.n_vars, ((),) * self.m))

    def monomial(self, mono: TensorMonomial, coeff=1) -> "AlgebraElement":
        return self.element({mono: coeff})

    def x(self, i: int) -> "AlgebraElement":
        """Polynomial generator x_i (1-based; x3 allowed when it is eliminated)."""
        exps = [0] * self.rewrite.n_raw
        exps[i - 1] = 1
        return normal_form(self, [RawTerm(Fraction(1), tuple(exps))])

    def y(self, i: int, j: int) -> "AlgebraElement":
        """Exterior generator y_i^j of factor j (both 1-based)."""
        if not 1 <= j <= self.m:
            raise ValueError(f"factor {j} out of range for m={self.m}")
        return normal_form(self, [RawTerm(Fraction(1), (0,) * self.rewrite.n_raw, ((j - 1, i - 1),))])

    def parse(self, text: str) -> "AlgebraElement":
        """Parse a sum like ``3*x1^4*x2*y1^1*y2^1*y2^2 - 1/2*x3``.

        ``x1^k`` is a power; ``y1^j`` names the generator of factor j.
        Exterior generators are multiplied in the order written.
        """
        return normal_form(self, _parse_raw(text, self.rewrite.n_raw))


def make_context(group: str, m: int = 2) -> AlgebraContext:
    group = canonical_group(group)
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    return _context(group, m)


@lru_cache(maxsize=None)
def _context(group: str, m: int) -> AlgebraContext:
    return AlgebraContext(group, m)


class AlgebraElement:
    """Finite sum of reduced tensor monomials with rational coefficients."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: Dict[TensorMonomial, Fraction]):
        self.ctx = ctx
        self.terms = dict(sorted(terms.items(), reverse=True))

    def _check(self, other: "AlgebraElement"):
        if other.ctx is not self.ctx:
            raise ValueError(f"context mismatch: {self.ctx!r} vs {other.ctx!r}")

    def _coerce(self, other) -> Optional["AlgebraElement"]:
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.one() * Fraction(other) if other else self.ctx.zero()
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return AlgebraElement(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return self.ctx.zero()
            return AlgebraElement(self.ctx, {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        return self * (1 / Fraction(other))

    def __pow__(self, n: int):
        out = self.ctx.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ctx is other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.ctx), frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"<{self.ctx.group} m={self.ctx.m}: {render(self)}>"

    def __str__(self):
        return render(self)

    def degrees(self) -> set:
        return {k.degree for k in self.terms}

    @property
    def degree(self) -> int:
        """Degree of a homogeneous nonzero element."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"element is not homogeneous of a single degree: {sorted(degs)}")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, mono: TensorMonomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def to_vector(self, basis: Sequence[TensorMonomial]) -> List[Fraction]:
        return [self.terms.get(b, Fraction(0)) for b in basis]

    def to_raw(self) -> List[RawTerm]:
        """Express the element as raw input terms (no eliminated variables used)."""
        ctx = self.ctx
        pad = ctx.rewrite.n_raw - ctx.n_vars
        return [
            RawTerm(c, k.poly + (0,) * pad, tuple((j, i) for j, s in enumerate(k.ext) for i in s))
            for k, c in self.terms.items()
        ]


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Graded-commutative product, returned in normal form."""
    a._check(b)
    ctx = a.ctx
    out: Dict[TensorMonomial, Fraction] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            for w, s in ctx.monomial_product(u, v):
                val = out.get(w, 0) + cu * cv * s
                if val:
                    out[w] = val
                else:
                    out.pop(w, None)
    return AlgebraElement(ctx, out)


def _expand_poly(ctx: AlgebraContext, exps: Exps) -> Dict[Exps, int]:
    """Substitute the eliminated variable and return a polynomial in retained variables."""
    elim = ctx.rewrite.elimination
    n = ctx.n_vars
    base = tuple(exps[:n])
    if elim is None:
        return {base: 1}
    if len(exps) != n + 1:
        raise ValueError(f"expected {n + 1} raw exponents, got {exps}")
    k = exps[n]
    if n != 2:
        raise NotImplementedError
    # (c0*x1 + c1*x2)^k by the binomial theorem
    out: Dict[Exps, int] = {}
    for t in range(k + 1):
        c = comb(k, t) * elim[0] ** t * elim[1] ** (k - t)
        e = (base[0] + t, base[1] + k - t)
        out[e] = out.get(e, 0) + c
    return out


def _expand_word(ctx: AlgebraContext, word) -> List[Tuple[int, Tuple[Tuple[int, int], ...]]]:
    """Substitute y3^j = sum of retained y's in a word; returns signed-free expansions."""
    elim = ctx.rewrite.elimination
    n = ctx.n_vars
    choices = []
    for j, i in word:
        if not 0 <= j < ctx.m:
            raise ValueError(f"exterior factor {j + 1} out of range for m={ctx.m}")
        if i < n:
            choices.append([(1, (j, i))])
        elif elim is not None and i == n:
            choices.append([(elim[r], (j, r)) for r in range(n) if elim[r]])
        else:
            raise ValueError(f"exterior index {i + 1} out of range")
    out = []
    for combo in cartesian(*choices):
        c = 1
        for f, _ in combo:
            c *= f
        out.append((c, tuple(g for _, g in combo)))
    return out


def normal_form(ctx: AlgebraContext, raw: Iterable[RawTerm],
                rng: Optional[random.Random] = None) -> AlgebraElement:
    """Reduce a formal sum of raw terms to a canonical :class:`AlgebraElement`.

    With ``rng`` the rewrite rules are applied in a random admissible order
    and without memoization; the result must not change.
    """
    poly_acc: Dict[Ext, Dict[Exps, Fraction]] = {}
    for term in raw:
        coeff = Fraction(term.coeff)
        if not coeff:
            continue
        poly = _expand_poly(ctx, tuple(term.poly))
        for cw, w in _expand_word(ctx, term.word):
            sign, srt = _sort_word(w)
            if not sign:
                continue
            blocks = [[] for _ in range(ctx.m)]
            for j, i in srt:
                blocks[j].append(i)
            ext = tuple(tuple(b) for b in blocks)
            acc = poly_acc.setdefault(ext, {})
            for e, cp in poly.items():
                acc[e] = acc.get(e, 0) + coeff * cw * sign * cp
    out: Dict[TensorMonomial, Fraction] = {}
    for ext, poly in poly_acc.items():
        if rng is None:
            red: Dict[Exps, Fraction] = {}
            for e, c in poly.items():
                if not c:
                    continue
                for re_, rc in ctx.reduce_poly(e):
                    red[re_] = red.get(re_, 0) + c * rc
        else:
            red = ctx.rewrite.reduce(poly, choose=rng.choice)
        for e, c in red.items():
            if c:
                out[TensorMonomial(e, ext)] = c
    return AlgebraElement(ctx, out)


def basis_monomials(ctx: AlgebraContext, degree: int) -> Tuple[TensorMonomial, ...]:
    return ctx.basis_monomials(degree)


def poly_generating_function(ctx: AlgebraContext) -> List[int]:
    """Coefficients (by cohomological degree) of the reduced polynomial basis."""
    top = 2 * max(sum(p) for p in ctx.poly_monomials())
    coeffs = [0] * (top + 1)
    for p in ctx.poly_monomials():
        coeffs[2 * sum(p)] += 1
    return coeffs


# -- text rendering and parsing -------------------------------------------

def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_monomial(mono: TensorMonomial) -> str:
    xs = []
    for i, e in enumerate(mono.poly):
        if e == 1:
            xs.append(f"x{i + 1}")
        elif e > 1:
            xs.append(f"x{i + 1}^{e}")
    poly = "*".join(xs)
    if not mono.exterior_degree:
        return poly or "1"
    blocks = " | ".join("".join(f"y{i + 1}^{j + 1}" for i in s) or "1" for j, s in enumerate(mono.ext))
    return f"{poly} {blocks}" if poly else blocks


def render(v: AlgebraElement) -> str:
    """Deterministic text form, e.g. ``-1/2*x1^3*x2 y1^1y2^1 | y2^2``."""
    if not v.terms:
        return "0"
    parts = []
    for k, c in v.terms.items():
        mono = render_monomial(k)
        mag = abs(c)
        body = mono if mag == 1 else (_fmt_coeff(mag) if mono == "1" else f"{_fmt_coeff(mag)}*{mono}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"(x)(\d+)(?:\^(\d+))?|(y)(\d+)\^(\d+)|(\d+(?:/\d+)?)")


def _parse_raw(text: str, n_raw: int) -> List[RawTerm]:
    """Parse a sum of terms; accepts the output of :func:`render` as well."""
    text = text.strip()
    if text in ("", "0"):
        return []
    terms = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse {text!r} at offset {pos}")
        pos = mt.end()
        coeff = Fraction(-1 if mt.group(1) == "-" else 1)
        exps = [0] * n_raw
        word = []
        body = mt.group(2)
        leftover = _FACTOR.sub("", body)
        if leftover.strip(" *|"):
            raise ValueError(f"bad term {body.strip()!r} in {text!r}")
        for mf in _FACTOR.finditer(body):
            if mf.group(1):
                i = int(mf.group(2))
                if not 1 <= i <= n_raw:
                    raise ValueError(f"variable x{i} out of range")
                exps[i - 1] += int(mf.group(3) or 1)
            elif mf.group(4):
                word.append((int(mf.group(6)) - 1, int(mf.group(5)) - 1))
            else:
                coeff *= Fraction(mf.group(7))
        terms.append(RawTerm(coeff, tuple(exps), tuple(word)))
    return terms
