"""Invariant subspaces by Reynolds averaging and exact row reduction."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional

from .algebra import AlgebraContext, AlgebraElement, TensorMonomial
from .linalg import row_reduce
from .weyl import act, act_monomial

DEFAULT_MAX_DEGREE = {"SU3": 10, "Sp2": 12, "G2": 16}


class InvariantBasis(NamedTuple):
    degree: int
    vectors: List[AlgebraElement]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def reynolds(v: AlgebraElement) -> AlgebraElement:
    """Average of ``v`` over the Weyl group of its context."""
    ctx = v.ctx
    group = ctx.weyl
    out: Dict[TensorMonomial, Fraction] = {}
    for w in group:
        for mono, c in v.terms.items():
            for k, ck in act_monomial(ctx, w, mono).terms.items():
                val = out.get(k, 0) + c * ck
                if val:
                    out[k] = val
                else:
                    out.pop(k, None)
    n = group.order
    return AlgebraElement(ctx, {k: c / n for k, c in out.items()})


def is_invariant(v: AlgebraElement) -> bool:
    return all(act(w, v) == v for w in v.ctx.weyl)


def invariant_basis(ctx: AlgebraContext, degree: int, order: Optional[List[int]] = None) -> InvariantBasis:
    """Echelonized basis of the invariants in one degree.

    ``order`` optionally permutes the spanning set of Reynolds images; the
    echelon form, and hence the result, does not depend on it.
    """
    basis = ctx.basis_monomials(degree)
    monos = list(basis) if order is None else [basis[i] for i in order]
    rows = [reynolds(ctx.monomial(b)).to_vector(basis) for b in monos]
    ech = row_reduce(rows)
    vectors = [ctx.element(dict(zip(basis, row))) for row in ech.rows]
    return InvariantBasis(degree, vectors)


def poincare_series(ctx: AlgebraContext, max_degree: Optional[int] = None, workers: int = 1) -> List[int]:
    """Dimensions of the invariant subspaces in degrees 0..max_degree."""
    if max_degree is None:
        max_degree = DEFAULT_MAX_DEGREE[ctx.group]
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    degrees = range(max_degree + 1)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(lambda d: invariant_basis(ctx, d).dimension, degrees))
    return [invariant_basis(ctx, d).dimension for d in degrees]


def series_string(coeffs: List[int]) -> str:
    """Render coefficients as ``1 + t^2 + 2t^3 ...``."""
    parts = []
    for d, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
        if not mono:
            parts.append(str(c))
        else:
            parts.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(parts) or "0"
