"""Small reference algebras shared by the test suite, demos and CLI corpus.

``g4a`` and ``g2a`` are the twisted examples with the scalar parameter ``a``.
Their Nijenhuis / Rota-Baxter operators satisfy the operator identities for
every ``a``, but the brackets themselves fail multiplicativity whenever
``a != 0`` (the twist negates [e1, e2] while scaling it should fix it);
``verify_structure`` reports this with witness pair (0, 1) instead of
suppressing it.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    CompatibleHomLieAlgebra,
    HomLieAlgebra,
    LinearOperator,
    NIJENHUIS,
    ROTA_BAXTER,
    Representation,
    induced_bracket,
)
from .linalg import Matrix, frac


def ab1() -> HomLieAlgebra:
    """Dimension 1, zero bracket, identity twist."""
    return HomLieAlgebra.from_brackets(1, Matrix.identity(1), {})


def compatible_ab1() -> CompatibleHomLieAlgebra:
    return CompatibleHomLieAlgebra.from_brackets(1, Matrix.identity(1), {}, {})


def g4a(a=1) -> HomLieAlgebra:
    """4-dimensional twisted example: [e1,e2] = a e1 + a e2,
    alpha swaps e1/e2, kills e3 and shifts e4 to e3."""
    a = frac(a)
    alpha = Matrix.from_rows([
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 0, 0],
    ])
    return HomLieAlgebra.from_brackets(4, alpha, {(0, 1): [a, a, 0, 0]})


def g4a_nijenhuis() -> LinearOperator:
    """Swap e1/e2, fix e3 and e4: a Nijenhuis operator on g4a for every a."""
    return LinearOperator(
        Matrix.from_rows([
            [0, 1, 0, 0],
            [1, 0, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ]),
        NIJENHUIS,
    )


def g2a(a=1) -> HomLieAlgebra:
    """2-dimensional twisted example: [e1,e2] = a e1 + a e2, alpha swaps e1/e2."""
    a = frac(a)
    alpha = Matrix.from_rows([[0, 1], [1, 0]])
    return HomLieAlgebra.from_brackets(2, alpha, {(0, 1): [a, a]})


def g2a_rota_baxter() -> LinearOperator:
    """R = alpha on g2a, a Rota-Baxter operator of weight -1."""
    return LinearOperator(Matrix.from_rows([[0, 1], [1, 0]]), ROTA_BAXTER, Fraction(-1))


def d2() -> CompatibleHomLieAlgebra:
    """Dimension 2, identity twist, [e1,e2]_1 = e1 and [e1,e2]_2 = e2."""
    return CompatibleHomLieAlgebra.from_brackets(
        2, Matrix.identity(2), {(0, 1): [1, 0]}, {(0, 1): [0, 1]}
    )


def d2_nijenhuis() -> LinearOperator:
    """diag(1, 2): a Nijenhuis operator for both brackets of d2."""
    return LinearOperator(Matrix.diagonal([1, 2]), NIJENHUIS)


def d2_extension_rep() -> Representation:
    """A 2-dimensional representation of d2 with nonzero degree-2 cohomology.

    The two coordinates carry independent one-dimensional actions
    (e2 .1 v = s v and e1 .2 v = -s v with s = -1 resp. s = 0), which gives
    cocycles in distinct classes as well as nonzero coboundaries.
    """
    base = d2()
    zero = Matrix.zero(2, 2)
    act1 = (zero, Matrix.diagonal([-1, 0]))
    act2 = (Matrix.diagonal([1, 0]), zero)
    return Representation(base, 2, Matrix.identity(2), (act1, act2))


def h3() -> HomLieAlgebra:
    """Heisenberg algebra: [e1,e2] = e3, identity twist."""
    return HomLieAlgebra.from_brackets(3, Matrix.identity(3), {(0, 1): [0, 0, 1]})


def h3_nijenhuis() -> LinearOperator:
    """diag(2, 1, 1), a Nijenhuis operator on h3."""
    return LinearOperator(Matrix.diagonal([2, 1, 1]), NIJENHUIS)


def compatible_h3() -> CompatibleHomLieAlgebra:
    """h3 paired with its Nijenhuis-deformed bracket (here 2.[.,.])."""
    base = h3()
    deformed = induced_bracket(base, h3_nijenhuis())
    return CompatibleHomLieAlgebra(base.dim, base.alpha, base.bracket, deformed.bracket)


def twisted_h3() -> HomLieAlgebra:
    """Heisenberg bracket with the unipotent twist e2 -> e2 + e3.

    The twist is a bracket endomorphism, so the structure is a valid twisted
    algebra with a twist that is not the identity: equivariant cochain
    spaces are proper subspaces and the twist powers in the coboundary do
    real work.
    """
    alpha = Matrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 1, 1]])
    return HomLieAlgebra.from_brackets(3, alpha, {(0, 1): [0, 0, 1]})


def twisted_compatible_h3() -> CompatibleHomLieAlgebra:
    """twisted_h3 paired with its Nijenhuis-deformed bracket (diag(2,1,1))."""
    base = twisted_h3()
    deformed = induced_bracket(base, h3_nijenhuis())
    return CompatibleHomLieAlgebra(base.dim, base.alpha, base.bracket, deformed.bracket)
