"""Cohomology of spaces of commuting pairs in SU(3), Sp(2) and G2 via Weyl invariants.

The ring H*(Hom(Z^m, G)) is modelled as the Weyl-invariant part of
(coinvariant algebra) (x) (exterior algebra)^(x)m and computed with exact
rational arithmetic.
"""
from .algebra import (
    AlgebraContext,
    AlgebraElement,
    RawTerm,
    RewriteSystem,
    TensorMonomial,
    basis_monomials,
    make_context,
    multiply,
    normal_form,
    render,
)
from .invariants import InvariantBasis, invariant_basis, poincare_series, reynolds
from .linalg import row_reduce
from .presentation import (
    COMPLETED,
    STATED,
    GeneratorSet,
    PresentationReport,
    PresentedAlgebra,
    build_generators,
    check_minimal_generation,
    check_relations,
    presented_series,
    verify_theorem,
)
from .weyl import GroupElement, WeylGroup, act, build_group

__version__ = "0.1.0"
