"""Alternating multilinear cochains and the Nijenhuis-Richardson bracket.

An arity-n cochain from a d-dimensional space into a t-dimensional space is
stored as a t x C(d,n) coefficient matrix: column k holds the value on the
k-th strictly increasing basis tuple (i1 < ... < in) in lexicographic order.
Values on arbitrary arguments follow by multilinear alternating extension.

The twist-equivariant subspace of arity-n cochains consists of those f with
beta o f = f o alpha^(wedge n); a basis is computed exactly by solving the
linear constraint  beta . M = M . compound_n(alpha).

For endomorphism cochains (source = target) the shifted graded space of
equivariant cochains carries a graded Lie bracket

    [P, Q] = P <> Q - (-1)^(mn) Q <> P,      deg P = m = arity(P) - 1,

    (P <> Q)(x_1, ..., x_(m+n+1)) =
        sum over (n+1, m)-shuffles s of sign(s) *
        P(Q(x_s(1), ..., x_s(n+1)), alpha^n x_s(n+2), ..., alpha^n x_s(m+n+1)),

whose Maurer-Cartan elements in arity 2 are exactly the twisted Lie
brackets on the space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import PreconditionError, UsageError
from .linalg import (
    Matrix,
    ZERO,
    determinant_of,
    kernel_basis,
    vec_add,
    vec_is_zero,
    vec_scale,
    vector,
    zero_vector,
)


@lru_cache(maxsize=None)
def increasing_tuples(d: int, n: int):
    """All strictly increasing n-tuples from range(d), lexicographically ordered."""
    return tuple(itertools.combinations(range(d), n))


@lru_cache(maxsize=None)
def tuple_position(d: int, n: int):
    return {t: k for k, t in enumerate(increasing_tuples(d, n))}


@dataclass(frozen=True)
class ZeroCochain:
    """A degree-0 cochain: a plain coefficient vector.

    Membership in the twist-fixed subspace (beta(v) = v) is a property the
    verifiers check, not a structural invariant.
    """

    vector: tuple

    @property
    def target_dim(self) -> int:
        return len(self.vector)

    def is_zero(self) -> bool:
        return vec_is_zero(self.vector)

    def __add__(self, other: "ZeroCochain") -> "ZeroCochain":
        return ZeroCochain(vec_add(self.vector, other.vector))

    def scale(self, c) -> "ZeroCochain":
        return ZeroCochain(vec_scale(Fraction(c), self.vector))


@dataclass(frozen=True)
class Cochain:
    """Alternating multilinear map of arity >= 1, by basis coefficients."""

    arity: int
    source_dim: int
    target_dim: int
    coeffs: Matrix

    def __post_init__(self):
        if self.arity < 1:
            raise UsageError("cochain arity must be >= 1")
        expected = comb(self.source_dim, self.arity)
        if self.coeffs.rows != self.target_dim or self.coeffs.cols != expected:
            raise UsageError(
                f"coefficient matrix must be {self.target_dim}x{expected}, "
                f"got {self.coeffs.rows}x{self.coeffs.cols}"
            )

    @classmethod
    def zero(cls, arity: int, source_dim: int, target_dim: int) -> "Cochain":
        return cls(arity, source_dim, target_dim, Matrix.zero(target_dim, comb(source_dim, arity)))

    @classmethod
    def from_values(cls, arity: int, source_dim: int, target_dim: int, values: dict) -> "Cochain":
        """Build from a sparse {increasing index tuple: value vector} mapping."""
        columns = [zero_vector(target_dim)] * comb(source_dim, arity)
        pos = tuple_position(source_dim, arity)
        for tup, val in values.items():
            tup = tuple(tup)
            if tup not in pos:
                raise UsageError(f"not a strictly increasing tuple in range: {tup}")
            columns[pos[tup]] = vector(val)
        return cls(arity, source_dim, target_dim, Matrix.from_columns(columns, target_dim))

    @classmethod
    def from_flat(cls, arity: int, source_dim: int, target_dim: int, flat) -> "Cochain":
        return cls(arity, source_dim, target_dim,
                   Matrix(target_dim, comb(source_dim, arity), tuple(flat)))

    def column(self, tup) -> tuple:
        return self.coeffs.col(tuple_position(self.source_dim, self.arity)[tuple(tup)])

    def flatten(self) -> tuple:
        return self.coeffs.entries

    def evaluate(self, args) -> tuple:
        """Value on arbitrary argument vectors by alternating extension.

        The coefficient of basis column (i1 < ... < in) is the n x n minor of
        the argument rows at those positions, so the result is multilinear
        and swaps of two arguments flip the overall sign.
        """
        if len(args) != self.arity:
            raise UsageError(f"expected {self.arity} arguments, got {len(args)}")
        for a in args:
            if len(a) != self.source_dim:
                raise UsageError(f"argument length {len(a)} != source dim {self.source_dim}")
        result = list(zero_vector(self.target_dim))
        for k, tup in enumerate(increasing_tuples(self.source_dim, self.arity)):
            minor = determinant_of([[arg[i] for i in tup] for arg in args])
            if minor:
                for t in range(self.target_dim):
                    c = self.coeffs.entry(t, k)
                    if c:
                        result[t] += minor * c
        return tuple(result)

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(self.arity, self.source_dim, self.target_dim, self.coeffs + other.coeffs)

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(self.arity, self.source_dim, self.target_dim, self.coeffs - other.coeffs)

    def __neg__(self) -> "Cochain":
        return Cochain(self.arity, self.source_dim, self.target_dim, -self.coeffs)

    def scale(self, c) -> "Cochain":
        return Cochain(self.arity, self.source_dim, self.target_dim, self.coeffs.scale(c))

    def is_zero(self) -> bool:
        return self.coeffs.is_zero()

    def _compatible(self, other: "Cochain"):
        if (self.arity, self.source_dim, self.target_dim) != (
            other.arity, other.source_dim, other.target_dim
        ):
            raise UsageError("cochain shape mismatch")


def exterior_power_matrix(alpha: Matrix, n: int) -> Matrix:
    """Compound matrix of n x n minors: the action induced on the n-th
    exterior power, in the lexicographic increasing-tuple basis."""
    if not alpha.is_square():
        raise UsageError("twist must be square")
    d = alpha.rows
    if not 1 <= n <= d:
        raise UsageError(f"exterior power {n} out of range 1..{d}")
    tuples = increasing_tuples(d, n)
    rows = []
    for I in tuples:
        row = []
        for J in tuples:
            row.append(determinant_of([[alpha.entry(i, j) for j in J] for i in I]))
        rows.append(row)
    return Matrix.from_rows(rows)


def is_equivariant(f, alpha: Matrix, beta: Matrix) -> bool:
    """Membership test for the twist-equivariant cochain space."""
    if isinstance(f, ZeroCochain):
        return beta.apply(f.vector) == f.vector
    if f.arity > f.source_dim:
        return True
    return (beta @ f.coeffs) == (f.coeffs @ exterior_power_matrix(alpha, f.arity))


def hom_cochain_basis(alpha: Matrix, beta: Matrix, n: int):
    """Exact basis of the equivariant arity-n cochains from the alpha-space
    into the beta-space.

    n = 0 returns ZeroCochains spanning the beta-fixed subspace; n >= 1 solves
    beta . M = M . compound_n(alpha) for the coefficient matrix M.  Arities
    above the source dimension give the empty basis.
    """
    if n < 0:
        raise UsageError("negative arity")
    d = alpha.rows
    t = beta.rows
    if n == 0:
        return [ZeroCochain(v) for v in kernel_basis(beta - Matrix.identity(t))]
    ncols = comb(d, n)
    if ncols == 0:
        return []
    compound = exterior_power_matrix(alpha, n)
    unknowns = t * ncols
    constraint_rows = []
    # Entry (r, c) of beta.M - M.compound, as a linear form in the entries of M.
    for r in range(t):
        for c in range(ncols):
            row = [ZERO] * unknowns
            for k in range(t):
                row[k * ncols + c] += beta.entry(r, k)
            for k in range(ncols):
                row[r * ncols + k] -= compound.entry(k, c)
            constraint_rows.append(row)
    basis = []
    for flat in kernel_basis(Matrix.from_rows(constraint_rows)):
        basis.append(Cochain.from_flat(n, d, t, flat))
    return basis


def _shuffle_sign(positions) -> int:
    # Sign of the permutation placing `positions` (sorted) first, rest after.
    return -1 if sum(p - k for k, p in enumerate(positions)) % 2 else 1


def nr_diamond(p: Cochain, q: Cochain, alpha: Matrix) -> Cochain:
    """The insertion product P <> Q over all (arity(Q), deg P)-shuffles."""
    d = p.source_dim
    if p.target_dim != d or q.source_dim != d or q.target_dim != d:
        raise UsageError("insertion product needs endomorphism cochains on one space")
    if alpha.rows != d or alpha.cols != d:
        raise UsageError("twist dimension mismatch")
    m = p.arity - 1
    n = q.arity - 1
    out_arity = m + n + 1
    result_cols = comb(d, out_arity)
    if result_cols == 0:
        return Cochain.zero(out_arity, d, d)
    alpha_n = alpha.power(n)
    alpha_cols = [alpha_n.col(j) for j in range(d)]
    columns = []
    for X in increasing_tuples(d, out_arity):
        total = list(zero_vector(d))
        for S in itertools.combinations(range(out_arity), q.arity):
            sign = _shuffle_sign(S)
            inner = q.column(tuple(X[s] for s in S))
            rest = [alpha_cols[X[t]] for t in range(out_arity) if t not in S]
            val = p.evaluate([inner] + rest)
            if sign == 1:
                total = [a + b for a, b in zip(total, val)]
            else:
                total = [a - b for a, b in zip(total, val)]
        columns.append(tuple(total))
    return Cochain(out_arity, d, d, Matrix.from_columns(columns, d))


def nr_bracket(p: Cochain, q: Cochain, alpha: Matrix) -> Cochain:
    """Graded Lie bracket [P, Q] = P <> Q - (-1)^(mn) Q <> P on shifted degrees."""
    m = p.arity - 1
    n = q.arity - 1
    first = nr_diamond(p, q, alpha)
    second = nr_diamond(q, p, alpha)
    if (m * n) % 2:
        return first + second
    return first - second


def lift_to_product(f: Cochain, g_dim: int, v_dim: int) -> Cochain:
    """Lift a cochain on the g-factor with values in the v-factor to an
    endomorphism cochain on the direct sum: it vanishes whenever an argument
    lies in the v-slot and lands entirely in the v-slot."""
    if f.source_dim != g_dim or f.target_dim != v_dim:
        raise UsageError("cochain shape does not match the product factors")
    total = g_dim + v_dim
    n = f.arity
    columns = []
    for X in increasing_tuples(total, n):
        if X and X[-1] < g_dim:
            value = f.column(X)
            columns.append(zero_vector(g_dim) + value)
        else:
            columns.append(zero_vector(total))
    return Cochain(n, total, total, Matrix.from_columns(columns, total))


@dataclass(frozen=True)
class MaurerCartanCheck:
    """Residuals of the two square equations and the mixed equation.

    The pair is Maurer-Cartan exactly when all three residual cochains
    vanish.
    """

    residual1: Cochain
    residual2: Cochain
    residual_mixed: Cochain

    @property
    def is_mc(self) -> bool:
        return self.residual1.is_zero() and self.residual2.is_zero() and self.residual_mixed.is_zero()

    @property
    def residuals(self):
        return (self.residual1, self.residual2, self.residual_mixed)


def is_mc_pair(mu1: Cochain, mu2: Cochain, alpha: Matrix, base=None) -> MaurerCartanCheck:
    """Maurer-Cartan test for a pair of arity-2 equivariant cochains.

    Without a base the residuals are [m1,m1], [m2,m2] and [m1,m2].  With a
    base pair (t1, t2), itself required to be Maurer-Cartan, the test runs
    in the twisted structure with differentials [t1,-] and [t2,-], giving
    residuals 2[t1,m1]+[m1,m1],  2[t2,m2]+[m2,m2]  and
    [t1,m2]+[t2,m1]+[m1,m2].
    """
    for c in (mu1, mu2):
        if c.arity != 2:
            raise UsageError("Maurer-Cartan test expects arity-2 cochains")
        if not is_equivariant(c, alpha, alpha):
            raise PreconditionError("cochain is not twist-equivariant")
    if base is None:
        return MaurerCartanCheck(
            nr_bracket(mu1, mu1, alpha),
            nr_bracket(mu2, mu2, alpha),
            nr_bracket(mu1, mu2, alpha),
        )
    theta1, theta2 = base
    for c in (theta1, theta2):
        if c.arity != 2:
            raise UsageError("base must be a pair of arity-2 cochains")
        if not is_equivariant(c, alpha, alpha):
            raise PreconditionError("base cochain is not twist-equivariant")
    if not is_mc_pair(theta1, theta2, alpha).is_mc:
        raise PreconditionError("base pair is not Maurer-Cartan")
    r1 = nr_bracket(theta1, mu1, alpha).scale(2) + nr_bracket(mu1, mu1, alpha)
    r2 = nr_bracket(theta2, mu2, alpha).scale(2) + nr_bracket(mu2, mu2, alpha)
    rm = nr_bracket(theta1, mu2, alpha) + nr_bracket(theta2, mu1, alpha) + nr_bracket(mu1, mu2, alpha)
    return MaurerCartanCheck(r1, r2, rm)
