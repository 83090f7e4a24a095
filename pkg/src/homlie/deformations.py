"""Linear, infinitesimal and finite-order deformations of a compatible pair.

A generator (w1, w2) deforms the brackets to ([.,.]_1 + t w1, [.,.]_2 + t w2).
It generates a one-parameter family of compatible structures exactly when six
bracket conditions hold: the three mixing the base brackets with the
generator (the 2-cocycle condition of the two-bracket complex) and the three
among the generator components (the Maurer-Cartan condition).

An order-p deformation keeps both brackets as degree-p polynomials in t with
equivariant arity-2 coefficients and constant terms equal to the base.  Its
defining identities are checked both as the stated per-order system and as
the coefficientwise vanishing of the truncated brackets; the two evaluations
are compared exactly.  The degree-3 obstruction cochain of an order-p
deformation is closed, and the deformation extends one order further exactly
when that cochain is a coboundary; the extension coefficients are produced
by an exact linear solve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    CheckResult,
    CompatibleHomLieAlgebra,
    LinearOperator,
    NIJENHUIS,
    adjoint_representation,
    induced_bracket,
    verify_structure,
)
from .cochains import (
    Cochain,
    hom_cochain_basis,
    increasing_tuples,
    is_equivariant,
    is_mc_pair,
    nr_bracket,
)
from .cohomology import (
    COMPATIBLE,
    CompatibleCochain,
    ce_coboundary,
    class_coordinates,
    cohomology_dimensions,
    compatible_coboundary,
)
from .errors import ContractError, PreconditionError, UsageError
from .linalg import Matrix, basis_vector, solve, vec_is_zero, vec_sub

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LinearGenerator:
    """A pair of arity-2 cochains deforming the two brackets linearly in t."""

    omega1: Cochain
    omega2: Cochain

    def __post_init__(self):
        for w in (self.omega1, self.omega2):
            if w.arity != 2 or w.source_dim != w.target_dim:
                raise UsageError("generator components must be arity-2 endomorphism cochains")
        if self.omega1.source_dim != self.omega2.source_dim:
            raise UsageError("generator components must share the carrier")


@dataclass(frozen=True)
class GeneratorReport:
    residuals: tuple  # ([m1,w1], [m2,w2], [m1,w2]+[m2,w1], [w1,w1], [w2,w2], [w1,w2])

    @property
    def is_cocycle(self) -> bool:
        return all(r.is_zero() for r in self.residuals[:3])

    @property
    def is_compatible_structure(self) -> bool:
        return all(r.is_zero() for r in self.residuals[3:])

    @property
    def generates(self) -> bool:
        return self.is_cocycle and self.is_compatible_structure


def _require_valid(c: CompatibleHomLieAlgebra):
    report = verify_structure(c)
    if not report.passed:
        raise PreconditionError("base algebra is invalid", report)


def _require_equivariant(c: CompatibleHomLieAlgebra, *cochains):
    for f in cochains:
        if not is_equivariant(f, c.alpha, c.alpha):
            raise PreconditionError("cochain is not twist-equivariant")


def check_linear_generator(c: CompatibleHomLieAlgebra, g: LinearGenerator) -> GeneratorReport:
    """Evaluate the six bracket conditions for a linear generator.

    The first three vanish exactly when (w1, w2) is a 2-cocycle of the
    two-bracket complex (cross-checked against the coboundary), the last
    three exactly when (w1, w2) is itself a compatible structure
    (the Maurer-Cartan test).
    """
    _require_valid(c)
    _require_equivariant(c, g.omega1, g.omega2)
    alpha = c.alpha
    mu1 = c.bracket_cochain(1)
    mu2 = c.bracket_cochain(2)
    r1 = nr_bracket(mu1, g.omega1, alpha)
    r2 = nr_bracket(mu2, g.omega2, alpha)
    r3 = nr_bracket(mu1, g.omega2, alpha) + nr_bracket(mu2, g.omega1, alpha)
    mc = is_mc_pair(g.omega1, g.omega2, alpha)
    # Independent route: d(w1, w2) must equal (-r1, -r3, -r2) componentwise.
    delta = compatible_coboundary(
        c, adjoint_representation(c), CompatibleCochain(2, (g.omega1, g.omega2)), check=False
    )
    expected = (-r1, -r3, -r2)
    for got, want in zip(delta.components, expected):
        if got.flatten() != want.flatten():
            raise ContractError("coboundary route disagrees with the bracket route")
    return GeneratorReport((r1, r2, r3) + mc.residuals)


def trivial_deformation_from_nijenhuis(c: CompatibleHomLieAlgebra,
                                       n_op: LinearOperator) -> LinearGenerator:
    """The generator w_i(x,y) = [Nx,y]_i + [x,Ny]_i - N[x,y]_i of a Nijenhuis
    operator; it always generates, and the deformation it generates is
    equivalent to the undeformed structure through id + tN."""
    if n_op.kind != NIJENHUIS:
        raise UsageError("a Nijenhuis operator is required")
    deformed = induced_bracket(c, n_op)  # enforces the operator identity
    return LinearGenerator(deformed.bracket_cochain(1), deformed.bracket_cochain(2))


@dataclass(frozen=True)
class EquivalenceReport:
    checks: tuple  # CheckResult entries from the three identity families
    coboundary_shift: bool  # whether (w) - (w') equals the coboundary of N

    @property
    def equivalent(self) -> bool:
        return all(c.passed for c in self.checks)


def check_linear_equivalence(c: CompatibleHomLieAlgebra, g: LinearGenerator,
                             g_prime: LinearGenerator, n_matrix: Matrix) -> EquivalenceReport:
    """Decide whether id + tN carries the deformation of g onto that of g'.

    Matching powers of t in the morphism property gives three identity
    families per bracket; all are evaluated on every basis pair.
    """
    _require_valid(c)
    _require_equivariant(c, g.omega1, g.omega2, g_prime.omega1, g_prime.omega2)
    if c.alpha @ n_matrix != n_matrix @ c.alpha:
        raise PreconditionError("operator does not commute with the twist")
    dim = c.dim
    checks = []
    for b in (1, 2):
        omega = (g.omega1, g.omega2)[b - 1]
        omega_p = (g_prime.omega1, g_prime.omega2)[b - 1]
        w_order1 = []
        w_order2 = []
        w_order3 = []
        for (i, j) in increasing_tuples(dim, 2):
            ei = basis_vector(dim, i)
            ej = basis_vector(dim, j)
            ni = n_matrix.col(i)
            nj = n_matrix.col(j)
            shift = vec_sub(
                tuple(
                    a + bb
                    for a, bb in zip(c.bracket_of(b, ei, nj), c.bracket_of(b, ni, ej))
                ),
                n_matrix.apply(c.bracket_of(b, ei, ej)),
            )
            d1 = vec_sub(vec_sub(omega.column((i, j)), omega_p.column((i, j))), shift)
            if not vec_is_zero(d1):
                w_order1.append(((i, j), d1))
            lhs = n_matrix.apply(omega.column((i, j)))
            rhs = tuple(
                a + bb + cc
                for a, bb, cc in zip(
                    omega_p.evaluate([ei, nj]),
                    omega_p.evaluate([ni, ej]),
                    c.bracket_of(b, ni, nj),
                )
            )
            d2 = vec_sub(lhs, rhs)
            if not vec_is_zero(d2):
                w_order2.append(((i, j), d2))
            d3 = omega_p.evaluate([ni, nj])
            if not vec_is_zero(d3):
                w_order3.append(((i, j), d3))
        checks.append(CheckResult(f"order1_identity[{b}]", tuple(w_order1)))
        checks.append(CheckResult(f"order2_identity[{b}]", tuple(w_order2)))
        checks.append(CheckResult(f"order3_identity[{b}]", tuple(w_order3)))
    n_cochain = Cochain(1, dim, dim, n_matrix)
    delta_n = compatible_coboundary(
        c, adjoint_representation(c), CompatibleCochain(1, (n_cochain,)), check=False
    )
    difference = CompatibleCochain(
        2, (g.omega1 - g_prime.omega1, g.omega2 - g_prime.omega2)
    )
    shift_holds = difference.flatten() == delta_n.flatten()
    return EquivalenceReport(tuple(checks), shift_holds)


def infinitesimal_class(c: CompatibleHomLieAlgebra, g: LinearGenerator) -> tuple:
    """Coordinates of the generator's class in degree-2 cohomology of the
    adjoint coefficients.  Generators differing by the coboundary of a
    twist-commuting operator receive identical coordinates."""
    report = check_linear_generator(c, g)
    if not report.is_cocycle:
        raise PreconditionError("generator is not a 2-cocycle")
    h2 = cohomology_dimensions(c, adjoint_representation(c), 2, COMPATIBLE)
    return class_coordinates(h2, CompatibleCochain(2, (g.omega1, g.omega2)))


@dataclass(frozen=True)
class OrderPDeformation:
    """Truncated polynomial families of both brackets.

    ``coeffs1[k]`` and ``coeffs2[k]`` are the arity-2 coefficient cochains of
    t^k; index 0 must equal the base brackets and every coefficient must be
    twist-equivariant.
    """

    base: CompatibleHomLieAlgebra
    coeffs1: tuple
    coeffs2: tuple

    def __post_init__(self):
        if len(self.coeffs1) != len(self.coeffs2) or not self.coeffs1:
            raise UsageError("coefficient lists must be non-empty and of equal length")
        for f in self.coeffs1 + self.coeffs2:
            if not isinstance(f, Cochain) or f.arity != 2 or f.source_dim != self.base.dim \
                    or f.target_dim != self.base.dim:
                raise UsageError("coefficients must be arity-2 endomorphism cochains on the base")
        if self.coeffs1[0].flatten() != self.base.bracket_cochain(1).flatten() or \
                self.coeffs2[0].flatten() != self.base.bracket_cochain(2).flatten():
            raise UsageError("order-0 coefficients must equal the base brackets")
        for f in self.coeffs1[1:] + self.coeffs2[1:]:
            if not is_equivariant(f, self.base.alpha, self.base.alpha):
                raise PreconditionError("deformation coefficient is not twist-equivariant")

    @property
    def order(self) -> int:
        return len(self.coeffs1) - 1

    @classmethod
    def from_generator(cls, c: CompatibleHomLieAlgebra, g: LinearGenerator) -> "OrderPDeformation":
        return cls(c, (c.bracket_cochain(1), g.omega1), (c.bracket_cochain(2), g.omega2))

    def truncate(self, p: int) -> "OrderPDeformation":
        if not 0 <= p <= self.order:
            raise UsageError("truncation order out of range")
        return OrderPDeformation(self.base, self.coeffs1[: p + 1], self.coeffs2[: p + 1])

    def extended(self, mu1_top: Cochain, mu2_top: Cochain) -> "OrderPDeformation":
        return OrderPDeformation(
            self.base, self.coeffs1 + (mu1_top,), self.coeffs2 + (mu2_top,)
        )


@dataclass(frozen=True)
class OrderReport:
    residuals: tuple  # per order n: (r1_n, r2_n, r3_n)

    @property
    def passed(self) -> bool:
        return all(r.is_zero() for triple in self.residuals for r in triple)

    def failures(self):
        return [
            (n, triple)
            for n, triple in enumerate(self.residuals)
            if not all(r.is_zero() for r in triple)
        ]


def _adjoint_parts(c: CompatibleHomLieAlgebra):
    rep = adjoint_representation(c)
    return (c.part(1), rep.part(1)), (c.part(2), rep.part(2))


def verify_order_p(d: OrderPDeformation) -> OrderReport:
    """Check the per-order system of identities for n = 0..p.

    For each order the three residuals are

        r1_n = d1(m1_n) - 1/2 sum_(i+j=n, i,j>=1) [m1_i, m1_j]
        r2_n = d2(m2_n) - 1/2 sum_(i+j=n, i,j>=1) [m2_i, m2_j]
        r3_n = d1(m2_n) + d2(m1_n) - sum_(i+j=n, i,j>=1) [m1_i, m2_j]

    (order 0 reduces to validity of the base).  The same conditions are
    recomputed as coefficients of the truncated brackets and the two routes
    are compared exactly; disagreement raises ContractError.
    """
    c = d.base
    alpha = c.alpha
    (l1, v1), (l2, v2) = _adjoint_parts(c)
    p = d.order
    m1, m2 = d.coeffs1, d.coeffs2
    residuals = []
    for n in range(p + 1):
        quad11 = _convolution(m1, m1, n, alpha)
        quad22 = _convolution(m2, m2, n, alpha)
        quad12 = _convolution(m1, m2, n, alpha)
        r1 = ce_coboundary(l1, v1, m1[n], check=False) - quad11.scale(HALF)
        r2 = ce_coboundary(l2, v2, m2[n], check=False) - quad22.scale(HALF)
        r3 = (
            ce_coboundary(l1, v1, m2[n], check=False)
            + ce_coboundary(l2, v2, m1[n], check=False)
            - quad12
        )
        # Truncated-bracket route: full convolutions including order 0.
        t11 = _convolution(m1, m1, n, alpha, low=0)
        t22 = _convolution(m2, m2, n, alpha, low=0)
        t12 = _convolution(m1, m2, n, alpha, low=0)
        if n == 0:
            expect = (r1.scale(-1), r2.scale(-1), r3.scale(-HALF))
        else:
            expect = (r1.scale(-2), r2.scale(-2), r3.scale(-1))
        for got, want in zip((t11, t22, t12), expect):
            if got.flatten() != want.flatten():
                raise ContractError("truncated-bracket route disagrees with the identity route")
        residuals.append((r1, r2, r3))
    return OrderReport(tuple(residuals))


def _convolution(left, right, n: int, alpha: Matrix, low: int = 1) -> Cochain:
    top = len(left) - 1
    total = None
    for i in range(low, n - low + 1):
        j = n - i
        if i > top or j > top:
            continue
        term = nr_bracket(left[i], right[j], alpha)
        total = term if total is None else total + term
    if total is None:
        d = left[0].source_dim
        return Cochain.zero(3, d, d)
    return total


@dataclass(frozen=True)
class ObstructionCochain:
    """Degree-3 compatible cochain blocking the next extension order; closed
    by construction (verified when built)."""

    cochain: CompatibleCochain

    def is_trivial_cocycle(self) -> bool:
        return self.cochain.is_zero()


def obstruction(d: OrderPDeformation) -> ObstructionCochain:
    """The degree-3 cochain whose class must vanish for the deformation to
    extend one order; closedness is asserted exactly."""
    order_report = verify_order_p(d)
    if not order_report.passed:
        raise PreconditionError("not a valid order-p deformation")
    c = d.base
    alpha = c.alpha
    n = d.order + 1
    o1 = _convolution(d.coeffs1, d.coeffs1, n, alpha).scale(HALF)
    o2 = _convolution(d.coeffs1, d.coeffs2, n, alpha)
    o3 = _convolution(d.coeffs2, d.coeffs2, n, alpha).scale(HALF)
    cochain = CompatibleCochain(3, (o1, o2, o3))
    closed = compatible_coboundary(c, adjoint_representation(c), cochain, check=False)
    if not closed.is_zero():
        raise ContractError("obstruction cochain is not closed")
    return ObstructionCochain(cochain)


def is_extensible(d: OrderPDeformation):
    """Solve the coboundary equation for the next coefficients.

    Returns one exact solution pair (any solution) or None when the
    obstruction class is nonzero.  A returned pair is re-verified: appending
    it yields a deformation of order p+1 passing verify_order_p.
    """
    ob = obstruction(d).cochain
    c = d.base
    singles = hom_cochain_basis(c.alpha, c.alpha, 2)
    basis = []
    for slot in range(2):
        for f in singles:
            comps = [Cochain.zero(2, c.dim, c.dim), Cochain.zero(2, c.dim, c.dim)]
            comps[slot] = f
            basis.append(CompatibleCochain(2, tuple(comps)))
    rep = adjoint_representation(c)
    rhs = ob.flatten()
    if not basis:
        if ob.is_zero():
            pair = (Cochain.zero(2, c.dim, c.dim), Cochain.zero(2, c.dim, c.dim))
        else:
            return None
    else:
        columns = [
            compatible_coboundary(c, rep, item, check=False).flatten() for item in basis
        ]
        system = Matrix.from_columns(columns, len(rhs))
        x = solve(system, rhs)
        if x is None:
            return None
        top1 = Cochain.zero(2, c.dim, c.dim)
        top2 = Cochain.zero(2, c.dim, c.dim)
        for coord, item in zip(x, basis):
            if coord:
                top1 = top1 + item.components[0].scale(coord)
                top2 = top2 + item.components[1].scale(coord)
        pair = (top1, top2)
    extended = d.extended(*pair)
    if not verify_order_p(extended).passed:
        raise ContractError("extension coefficients fail the order-(p+1) identities")
    return pair
