"""The three rank-2 Weyl groups as 2x2 integer matrix groups, and their action.

Matrices use the column convention: column k holds the coordinates of the
image of x_{k+1} (equivalently of y_{k+1}^j, for every factor j) in the
retained basis.  With that convention ``w1 * w2`` is the matrix product and
``act(w1 * w2, v) == act(w1, act(w2, v))``.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, NamedTuple, Tuple

from .algebra import AlgebraContext, AlgebraElement, TensorMonomial, canonical_group

Matrix = Tuple[Tuple[int, ...], ...]

ORDERS = {"SU3": 6, "Sp2": 8, "G2": 12}


class InternalInconsistency(RuntimeError):
    """A construction produced something that contradicts a known fact."""


class GroupElement(NamedTuple):
    matrix: Matrix

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        a, b = self.matrix, other.matrix
        n = len(a)
        return GroupElement(tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
        ))

    def __pow__(self, k: int) -> "GroupElement":
        out = identity(len(self.matrix))
        for _ in range(k):
            out = out * self
        return out

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def inverse(self) -> "GroupElement":
        (a, b), (c, d) = self.matrix
        det = self.det
        if det not in (1, -1):
            raise InternalInconsistency(f"matrix {self.matrix} is not invertible over Z")
        return GroupElement(((d * det, -b * det), (-c * det, a * det)))

    def image(self, k: int) -> Tuple[int, ...]:
        """Coordinates of the image of basis vector k."""
        return tuple(row[k] for row in self.matrix)


def identity(n: int = 2) -> GroupElement:
    return GroupElement(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


class WeylGroup(NamedTuple):
    name: str
    elements: Tuple[GroupElement, ...]
    generators: Tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w) -> bool:
        return w in self.elements


# -- the dihedral representation on <z1, z2, z3> and its quotient ----------

def dihedral_phi() -> Dict[str, Matrix]:
    """3x3 matrices of phi_a and phi_b in the basis z1, z2, z3 (column convention).

    phi_a: z1 -> -z3, z2 -> -z1, z3 -> -z2;  phi_b: z1 -> z1, z2 -> z3, z3 -> z2.
    """
    def from_images(images):
        return tuple(tuple(images[k][i] for k in range(3)) for i in range(3))
    phi_a = from_images([(0, 0, -1), (-1, 0, 0), (0, -1, 0)])
    phi_b = from_images([(1, 0, 0), (0, 0, 1), (0, 1, 0)])
    return {"a": phi_a, "b": phi_b}


def quotient_by_sum(mat3: Matrix) -> Matrix:
    """Induced 2x2 matrix on <z1, z2, z3 | z1 + z2 + z3 = 0> in the basis z1, z2.

    Requires z1 + z2 + z3 to span an invariant line.
    """
    total = tuple(sum(mat3[i][k] for k in range(3)) for i in range(3))
    if len(set(total)) != 1:
        raise InternalInconsistency("z1 + z2 + z3 is not an eigenvector")
    cols = []
    for k in range(2):
        c = [mat3[i][k] for i in range(3)]
        # z3 = -z1 - z2
        cols.append((c[0] - c[2], c[1] - c[2]))
    return tuple(tuple(cols[k][i] for k in range(2)) for i in range(2))


def _generators(group: str) -> Tuple[GroupElement, ...]:
    if group == "SU3":
        # transpositions (1 2) and (2 3) of x1, x2, x3 with x3 = -x1 - x2
        return (GroupElement(((0, 1), (1, 0))), GroupElement(((1, -1), (0, -1))))
    if group == "Sp2":
        # swap, and the sign change x1 -> -x1
        return (GroupElement(((0, 1), (1, 0))), GroupElement(((-1, 0), (0, 1))))
    if group == "G2":
        phi = dihedral_phi()
        return (GroupElement(quotient_by_sum(phi["a"])), GroupElement(quotient_by_sum(phi["b"])))
    raise ValueError(group)


def closure(gens, limit: int = 10_000) -> Tuple[GroupElement, ...]:
    """Breadth-first closure of ``gens`` under multiplication."""
    e = identity(len(gens[0].matrix))
    seen = {e: None}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g * s
            if h not in seen:
                seen[h] = None
                queue.append(h)
                if len(seen) > limit:
                    raise InternalInconsistency("group closure did not terminate")
    return tuple(seen)


@lru_cache(maxsize=None)
def build_group(group: str) -> WeylGroup:
    group = canonical_group(group)
    gens = _generators(group)
    elements = closure(gens)
    if len(elements) != ORDERS[group]:
        raise InternalInconsistency(f"{group}: closure has order {len(elements)}, expected {ORDERS[group]}")
    return WeylGroup(group, elements, gens)


# -- action on algebra elements ---------------------------------------------

_ACT_CACHE: Dict[Tuple[int, Matrix, TensorMonomial], AlgebraElement] = {}


def _linear_images(ctx: AlgebraContext, w: GroupElement):
    xs = [ctx.x(l + 1) for l in range(ctx.n_vars)]
    ximg = [sum((c * xs[l] for l, c in enumerate(w.image(k)) if c), ctx.zero()) for k in range(ctx.n_vars)]
    yimg = []
    for j in range(ctx.m):
        ys = [ctx.y(l + 1, j + 1) for l in range(ctx.n_vars)]
        yimg.append([sum((c * ys[l] for l, c in enumerate(w.image(k)) if c), ctx.zero())
                     for k in range(ctx.n_vars)])
    return ximg, yimg


def act_monomial(ctx: AlgebraContext, w: GroupElement, mono: TensorMonomial) -> AlgebraElement:
    key = (id(ctx), w.matrix, mono)
    hit = _ACT_CACHE.get(key)
    if hit is None:
        ximg, yimg = _linear_images(ctx, w)
        out = ctx.one()
        for k, e in enumerate(mono.poly):
            for _ in range(e):
                out = out * ximg[k]
        for j, s in enumerate(mono.ext):
            for i in s:
                out = out * yimg[j][i]
        _ACT_CACHE[key] = hit = out
    return hit


def act(w: GroupElement, v: AlgebraElement) -> AlgebraElement:
    """Apply the substitution x -> w.x, y^j -> w.y^j to every generator of ``v``."""
    ctx = v.ctx
    if w not in ctx.weyl:
        raise ValueError(f"{w.matrix} is not an element of W({ctx.group})")
    out: Dict[TensorMonomial, Fraction] = {}
    for mono, c in v.terms.items():
        for k, ck in act_monomial(ctx, w, mono).terms.items():
            val = out.get(k, 0) + c * ck
            if val:
                out[k] = val
            else:
                out.pop(k, None)
    return AlgebraElement(ctx, out)


def action_matrix(ctx: AlgebraContext, w: GroupElement, degree: int) -> List[List[Fraction]]:
    """Matrix of ``w`` on the degree-``degree`` block; row r is the image of basis monomial r."""
    basis = ctx.basis_monomials(degree)
    return [act_monomial(ctx, w, b).to_vector(basis) for b in basis]
