"""Finite-dimensional Hom-Lie algebras presented by structure constants.

An algebra of dimension d keeps its bracket as a d x C(d,2) matrix whose
column for the pair (i < j) is the coordinate vector of [e_i, e_j]; values
for i > j follow by skew-symmetry and the diagonal is zero by construction,
so skewness can never be violated by input data.

Validity is deliberately not a type invariant.  The defining identities
(multiplicativity of the twist, the twisted Jacobi identity, the six-term
mixed identity for a pair of brackets, and the representation identities)
are evaluated on all basis tuples by ``verify_structure`` and reported with
explicit witnesses, so that defective inputs are diagnosed rather than
rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cochains import Cochain, increasing_tuples, tuple_position
from .errors import PreconditionError, UsageError
from .linalg import (
    Matrix,
    basis_vector,
    frac,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vector,
    zero_vector,
)


@dataclass(frozen=True)
class HomLieAlgebra:
    dim: int
    alpha: Matrix
    bracket: Matrix  # dim x C(dim, 2), column (i < j) = [e_i, e_j]

    def __post_init__(self):
        _check_twist(self.alpha, self.dim)
        _check_bracket_matrix(self.bracket, self.dim)

    @classmethod
    def from_brackets(cls, dim: int, alpha: Matrix, brackets: dict) -> "HomLieAlgebra":
        """Build from a sparse {(i, j): value vector} table with i < j."""
        return cls(dim, alpha, _bracket_matrix(dim, brackets))

    def bracket_cochain(self) -> Cochain:
        return Cochain(2, self.dim, self.dim, self.bracket)

    def bracket_of(self, u, v) -> tuple:
        return _bracket_apply(self.bracket, self.dim, u, v)

    @property
    def brackets(self):
        return (self.bracket,)


@dataclass(frozen=True)
class CompatibleHomLieAlgebra:
    """One carrier and twist, two brackets."""

    dim: int
    alpha: Matrix
    bracket1: Matrix
    bracket2: Matrix

    def __post_init__(self):
        _check_twist(self.alpha, self.dim)
        _check_bracket_matrix(self.bracket1, self.dim)
        _check_bracket_matrix(self.bracket2, self.dim)

    @classmethod
    def from_brackets(cls, dim: int, alpha: Matrix, brackets1: dict, brackets2: dict):
        return cls(dim, alpha, _bracket_matrix(dim, brackets1), _bracket_matrix(dim, brackets2))

    def part(self, which: int) -> HomLieAlgebra:
        """The underlying single-bracket algebra (which = 1 or 2)."""
        return HomLieAlgebra(self.dim, self.alpha, self._bracket(which))

    def bracket_cochain(self, which: int) -> Cochain:
        return Cochain(2, self.dim, self.dim, self._bracket(which))

    def bracket_of(self, which: int, u, v) -> tuple:
        return _bracket_apply(self._bracket(which), self.dim, u, v)

    @property
    def brackets(self):
        return (self.bracket1, self.bracket2)

    def _bracket(self, which: int) -> Matrix:
        if which == 1:
            return self.bracket1
        if which == 2:
            return self.bracket2
        raise UsageError("bracket index must be 1 or 2")


@dataclass(frozen=True)
class Representation:
    """A module over a (compatible) Hom-Lie algebra.

    ``actions`` holds one table per bracket of the base; table entry i is the
    vdim x vdim matrix of the action of the basis element e_i.
    """

    base: object
    vdim: int
    beta: Matrix
    actions: tuple  # tuple of tables; table = tuple of Matrix, one per basis element

    def __post_init__(self):
        if self.beta.rows != self.vdim or self.beta.cols != self.vdim:
            raise UsageError("beta must be vdim x vdim")
        expected = len(self.base.brackets)
        if len(self.actions) != expected:
            raise UsageError(f"need {expected} action table(s), got {len(self.actions)}")
        for table in self.actions:
            if len(table) != self.base.dim:
                raise UsageError("action table must have one matrix per basis element")
            for a in table:
                if a.rows != self.vdim or a.cols != self.vdim:
                    raise UsageError("action matrices must be vdim x vdim")

    def action_matrix(self, which: int, i: int) -> Matrix:
        return self.actions[which - 1][i]

    def act(self, which: int, x, v) -> tuple:
        """x . v for an arbitrary coordinate vector x of the base."""
        table = self.actions[which - 1]
        out = zero_vector(self.vdim)
        for i, xi in enumerate(x):
            if xi:
                out = vec_add(out, vec_scale(xi, table[i].apply(v)))
        return out

    def part(self, which: int) -> "Representation":
        """Single-action representation over the corresponding bracket."""
        if len(self.actions) == 1:
            if which != 1:
                raise UsageError("plain representation has a single action")
            return self
        return Representation(self.base.part(which), self.vdim, self.beta,
                              (self.actions[which - 1],))


NIJENHUIS = "nijenhuis"
ROTA_BAXTER = "rota_baxter"


@dataclass(frozen=True)
class LinearOperator:
    """An endomorphism of the algebra carrier with a declared kind."""

    matrix: Matrix
    kind: str
    weight: Fraction | None = None

    def __post_init__(self):
        if self.kind not in (NIJENHUIS, ROTA_BAXTER):
            raise UsageError(f"unknown operator kind {self.kind!r}")
        if self.kind == ROTA_BAXTER and self.weight is None:
            raise UsageError("a Rota-Baxter operator needs a weight")
        if self.kind == NIJENHUIS and self.weight is not None:
            raise UsageError("a Nijenhuis operator has no weight")
        if not self.matrix.is_square():
            raise UsageError("operator matrix must be square")


@dataclass(frozen=True)
class CheckResult:
    name: str
    witnesses: tuple  # ((basis indices...), defect vector) in lexicographic order

    @property
    def passed(self) -> bool:
        return not self.witnesses


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            status = "ok" if c.passed else f"FAIL ({len(c.witnesses)} witnesses)"
            lines.append(f"{c.name}: {status}")
        return "\n".join(lines)


def _check_twist(alpha: Matrix, dim: int):
    if alpha.rows != dim or alpha.cols != dim:
        raise UsageError("twist must be dim x dim")


def _check_bracket_matrix(bracket: Matrix, dim: int):
    if bracket.rows != dim or bracket.cols != comb(dim, 2):
        raise UsageError("bracket matrix must be dim x C(dim, 2)")


def _bracket_matrix(dim: int, brackets: dict) -> Matrix:
    columns = [zero_vector(dim)] * comb(dim, 2)
    pos = tuple_position(dim, 2)
    for (i, j), val in brackets.items():
        if not 0 <= i < j < dim:
            raise UsageError(f"bracket pair ({i}, {j}) must satisfy 0 <= i < j < dim")
        columns[pos[(i, j)]] = vector(val)
    return Matrix.from_columns(columns, dim)


def _bracket_apply(bracket: Matrix, dim: int, u, v) -> tuple:
    if len(u) != dim or len(v) != dim:
        raise UsageError("bracket arguments must have the algebra dimension")
    out = zero_vector(dim)
    for k, (i, j) in enumerate(increasing_tuples(dim, 2)):
        c = u[i] * v[j] - u[j] * v[i]
        if c:
            out = vec_add(out, vec_scale(c, bracket.col(k)))
    return out


def _column_bracket(bracket: Matrix, dim: int, i: int, j: int) -> tuple:
    if i == j:
        return zero_vector(dim)
    if i < j:
        return bracket.col(tuple_position(dim, 2)[(i, j)])
    return vec_scale(Fraction(-1), bracket.col(tuple_position(dim, 2)[(j, i)]))


def _labels(count: int):
    if count == 1:
        return [""]
    return [f"[{b}]" for b in range(1, count + 1)]


def verify_structure(s) -> ValidationReport:
    """Evaluate every defining identity of s on all basis tuples.

    Failing checks carry all violating tuples together with the nonzero
    defect vector, in lexicographic tuple order.  Invalid structures yield
    failing reports, never exceptions.
    """
    if isinstance(s, HomLieAlgebra):
        return ValidationReport(tuple(_algebra_checks(s.dim, s.alpha, s.brackets)))
    if isinstance(s, CompatibleHomLieAlgebra):
        checks = _algebra_checks(s.dim, s.alpha, s.brackets)
        checks.append(_compatibility_check(s))
        return ValidationReport(tuple(checks))
    if isinstance(s, Representation):
        return ValidationReport(tuple(_representation_checks(s)))
    raise UsageError(f"cannot verify objects of type {type(s).__name__}")


def _algebra_checks(dim: int, alpha: Matrix, brackets):
    checks = []
    labels = _labels(len(brackets))
    for label, bracket in zip(labels, brackets):
        witnesses = []
        for (i, j) in increasing_tuples(dim, 2):
            lhs = alpha.apply(_column_bracket(bracket, dim, i, j))
            rhs = _bracket_apply(bracket, dim, alpha.col(i), alpha.col(j))
            defect = vec_sub(lhs, rhs)
            if not vec_is_zero(defect):
                witnesses.append(((i, j), defect))
        checks.append(CheckResult(f"multiplicativity{label}", tuple(witnesses)))
    for label, bracket in zip(labels, brackets):
        witnesses = []
        for (i, j, k) in increasing_tuples(dim, 3):
            defect = _jacobiator(dim, alpha, bracket, bracket, i, j, k)
            if not vec_is_zero(defect):
                witnesses.append(((i, j, k), defect))
        checks.append(CheckResult(f"hom_jacobi{label}", tuple(witnesses)))
    return checks


def _jacobiator(dim, alpha, outer, inner, i, j, k) -> tuple:
    # [[e_i,e_j]_inner, alpha e_k]_outer + cyclic
    total = zero_vector(dim)
    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
        total = vec_add(
            total,
            _bracket_apply(outer, dim, _column_bracket(inner, dim, a, b), alpha.col(c)),
        )
    return total


def _compatibility_check(s: CompatibleHomLieAlgebra) -> CheckResult:
    # Six-term mixed identity: the (1,2) and (2,1) Jacobiators cancel.
    witnesses = []
    for (i, j, k) in increasing_tuples(s.dim, 3):
        defect = vec_add(
            _jacobiator(s.dim, s.alpha, s.bracket2, s.bracket1, i, j, k),
            _jacobiator(s.dim, s.alpha, s.bracket1, s.bracket2, i, j, k),
        )
        if not vec_is_zero(defect):
            witnesses.append(((i, j, k), defect))
    return CheckResult("compatibility", tuple(witnesses))


def _representation_checks(v: Representation):
    base = v.base
    dim = base.dim
    checks = []
    labels = _labels(len(v.actions))
    for which0, label in enumerate(labels):
        b = which0 + 1
        bracket = base.brackets[which0]
        twist_witnesses = []
        module_witnesses = []
        for i in range(dim):
            for a in range(v.vdim):
                va = basis_vector(v.vdim, a)
                lhs = v.beta.apply(v.act(b, basis_vector(dim, i), va))
                rhs = v.act(b, base.alpha.col(i), v.beta.apply(va))
                defect = vec_sub(lhs, rhs)
                if not vec_is_zero(defect):
                    twist_witnesses.append(((i, a), defect))
        for (i, j) in increasing_tuples(dim, 2):
            for a in range(v.vdim):
                va = basis_vector(v.vdim, a)
                ei = basis_vector(dim, i)
                ej = basis_vector(dim, j)
                lhs = v.act(b, _column_bracket(bracket, dim, i, j), v.beta.apply(va))
                rhs = vec_sub(
                    v.act(b, base.alpha.col(i), v.act(b, ej, va)),
                    v.act(b, base.alpha.col(j), v.act(b, ei, va)),
                )
                defect = vec_sub(lhs, rhs)
                if not vec_is_zero(defect):
                    module_witnesses.append(((i, j, a), defect))
        checks.append(CheckResult(f"action_twist{label}", tuple(twist_witnesses)))
        checks.append(CheckResult(f"action_module{label}", tuple(module_witnesses)))
    if len(v.actions) == 2:
        witnesses = []
        for (i, j) in increasing_tuples(dim, 2):
            for a in range(v.vdim):
                va = basis_vector(v.vdim, a)
                ei = basis_vector(dim, i)
                ej = basis_vector(dim, j)
                ai = base.alpha.col(i)
                aj = base.alpha.col(j)
                lhs = vec_add(
                    v.act(2, _column_bracket(base.bracket1, dim, i, j), v.beta.apply(va)),
                    v.act(1, _column_bracket(base.bracket2, dim, i, j), v.beta.apply(va)),
                )
                rhs = vec_sub(v.act(1, ai, v.act(2, ej, va)), v.act(2, aj, v.act(1, ei, va)))
                rhs = vec_add(rhs, vec_sub(v.act(2, ai, v.act(1, ej, va)), v.act(1, aj, v.act(2, ei, va))))
                defect = vec_sub(lhs, rhs)
                if not vec_is_zero(defect):
                    witnesses.append(((i, j, a), defect))
        checks.append(CheckResult("action_mixed", tuple(witnesses)))
    return checks


def adjoint_representation(s) -> Representation:
    """The algebra acting on itself by its own bracket(s)."""
    tables = []
    for bracket in s.brackets:
        table = []
        for i in range(s.dim):
            cols = [_column_bracket(bracket, s.dim, i, j) for j in range(s.dim)]
            table.append(Matrix.from_columns(cols, s.dim))
        tables.append(tuple(table))
    return Representation(s, s.dim, s.alpha, tuple(tables))


def sum_bracket(c: CompatibleHomLieAlgebra, lam, eta) -> HomLieAlgebra:
    """The single bracket lam*[.,.]_1 + eta*[.,.]_2 on the same carrier and twist."""
    lam = frac(lam)
    eta = frac(eta)
    return HomLieAlgebra(c.dim, c.alpha, c.bracket1.scale(lam) + c.bracket2.scale(eta))


def sum_representation(v: Representation, lam=1, eta=1) -> Representation:
    """The action lam*act_1 + eta*act_2, a representation of the sum-bracket algebra."""
    if len(v.actions) != 2:
        raise UsageError("sum representation needs a two-action representation")
    lam = frac(lam)
    eta = frac(eta)
    base = sum_bracket(v.base, lam, eta)
    table = tuple(
        a1.scale(lam) + a2.scale(eta) for a1, a2 in zip(v.actions[0], v.actions[1])
    )
    return Representation(base, v.vdim, v.beta, (table,))


def derived_structure(s, n: int):
    """Compose every bracket with the n-th twist power; the twist becomes alpha^(n+1)."""
    if n < 0:
        raise UsageError("derived structure needs n >= 0")
    alpha_n = s.alpha.power(n)
    new_twist = s.alpha.power(n + 1)
    if isinstance(s, HomLieAlgebra):
        return HomLieAlgebra(s.dim, new_twist, alpha_n @ s.bracket)
    if isinstance(s, CompatibleHomLieAlgebra):
        return CompatibleHomLieAlgebra(s.dim, new_twist, alpha_n @ s.bracket1, alpha_n @ s.bracket2)
    raise UsageError(f"cannot derive objects of type {type(s).__name__}")


def _semidirect_bracket(bracket: Matrix, action_table, g_dim: int, v_dim: int) -> Matrix:
    total = g_dim + v_dim
    columns = []
    for (i, j) in increasing_tuples(total, 2):
        if j < g_dim:
            col = _column_bracket(bracket, g_dim, i, j) + zero_vector(v_dim)
        elif i < g_dim <= j:
            col = zero_vector(g_dim) + action_table[i].col(j - g_dim)
        else:
            col = zero_vector(total)
        columns.append(col)
    return Matrix.from_columns(columns, total)


def semidirect_product(c: CompatibleHomLieAlgebra, v: Representation) -> CompatibleHomLieAlgebra:
    """Compatible structure on carrier + module with brackets
    [(x,u),(y,w)]_i = ([x,y]_i, x._i w - y._i u) and twist alpha (+) beta."""
    report_c = verify_structure(c)
    if not report_c.passed:
        raise PreconditionError("invalid algebra for semidirect product", report_c)
    report_v = verify_structure(v)
    if not report_v.passed:
        raise PreconditionError("invalid representation for semidirect product", report_v)
    if v.base != c:
        raise UsageError("representation is not over the given algebra")
    b1 = _semidirect_bracket(c.bracket1, v.actions[0], c.dim, v.vdim)
    b2 = _semidirect_bracket(c.bracket2, v.actions[1], c.dim, v.vdim)
    return CompatibleHomLieAlgebra(c.dim + v.vdim, c.alpha.block_diag(v.beta), b1, b2)


def twisted_semidirect(l: HomLieAlgebra, v: Representation, f: Cochain) -> HomLieAlgebra:
    """Semidirect bracket shifted by a 2-cocycle f with values in the module:
    [(x,u),(y,w)] = ([x,y], x.w - y.u + f(x,y))."""
    from .cohomology import ce_coboundary

    if f.arity != 2 or f.source_dim != l.dim or f.target_dim != v.vdim:
        raise UsageError("twisting cochain must be arity 2 from the algebra into the module")
    if not ce_coboundary(l, v, f).is_zero():
        raise PreconditionError("twisting cochain is not a 2-cocycle")
    bracket = _semidirect_bracket(l.bracket, v.actions[0], l.dim, v.vdim)
    pos = tuple_position(l.dim + v.vdim, 2)
    columns = [bracket.col(k) for k in range(bracket.cols)]
    for (i, j) in increasing_tuples(l.dim, 2):
        k = pos[(i, j)]
        columns[k] = vec_add(columns[k], zero_vector(l.dim) + f.column((i, j)))
    twisted = Matrix.from_columns(columns, l.dim + v.vdim)
    return HomLieAlgebra(l.dim + v.vdim, l.alpha.block_diag(v.beta), twisted)


def _operator_checks(s, op_matrix: Matrix, identity_name: str, rhs_weight, label: str = ""):
    """Shared evaluator for the Nijenhuis / Rota-Baxter defining identities."""
    dim = s.dim
    checks = []
    commut = s.alpha @ op_matrix - op_matrix @ s.alpha
    witnesses = tuple(
        ((i,), commut.col(i)) for i in range(dim) if not vec_is_zero(commut.col(i))
    )
    checks.append(CheckResult(f"twist_commutation{label}", witnesses))
    labels = _labels(len(s.brackets))
    for blabel, bracket in zip(labels, s.brackets):
        witnesses = []
        for (i, j) in increasing_tuples(dim, 2):
            ni = op_matrix.col(i)
            nj = op_matrix.col(j)
            lhs = _bracket_apply(bracket, dim, ni, nj)
            inner = vec_add(
                _bracket_apply(bracket, dim, ni, basis_vector(dim, j)),
                _bracket_apply(bracket, dim, basis_vector(dim, i), nj),
            )
            if rhs_weight is None:
                inner = vec_sub(inner, op_matrix.apply(_column_bracket(bracket, dim, i, j)))
            else:
                inner = vec_add(inner, vec_scale(rhs_weight, _column_bracket(bracket, dim, i, j)))
            defect = vec_sub(lhs, op_matrix.apply(inner))
            if not vec_is_zero(defect):
                witnesses.append(((i, j), defect))
        checks.append(CheckResult(f"{identity_name}{blabel}{label}", tuple(witnesses)))
    return checks


def verify_operator(s, op: LinearOperator) -> ValidationReport:
    """Check twist commutation and the kind-specific identity on all basis
    pairs, for every bracket of the carrier."""
    if op.matrix.rows != s.dim:
        raise UsageError("operator dimension mismatch")
    if op.kind == NIJENHUIS:
        checks = _operator_checks(s, op.matrix, "nijenhuis_identity", None)
    else:
        checks = _operator_checks(s, op.matrix, "rota_baxter_identity", op.weight)
    return ValidationReport(tuple(checks))


def induced_bracket(l, op: LinearOperator):
    """The deformed bracket [x,y]_N = [Nx,y] + [x,Ny] - N[x,y] of a Nijenhuis
    operator, or [x,y]_R = [Rx,y] + [x,Ry] + weight*[x,y] of a Rota-Baxter
    operator, on the same carrier and twist.  Applied to each bracket of a
    compatible carrier."""
    report = verify_operator(l, op)
    if not report.passed:
        raise PreconditionError("operator fails its defining identity", report)
    mats = [_induced_matrix(bracket, l.dim, op) for bracket in l.brackets]
    if isinstance(l, HomLieAlgebra):
        return HomLieAlgebra(l.dim, l.alpha, mats[0])
    return CompatibleHomLieAlgebra(l.dim, l.alpha, mats[0], mats[1])


def _induced_matrix(bracket: Matrix, dim: int, op: LinearOperator) -> Matrix:
    columns = []
    for (i, j) in increasing_tuples(dim, 2):
        ni = op.matrix.col(i)
        nj = op.matrix.col(j)
        col = vec_add(
            _bracket_apply(bracket, dim, ni, basis_vector(dim, j)),
            _bracket_apply(bracket, dim, basis_vector(dim, i), nj),
        )
        base = _column_bracket(bracket, dim, i, j)
        if op.kind == NIJENHUIS:
            col = vec_sub(col, op.matrix.apply(base))
        else:
            col = vec_add(col, vec_scale(op.weight, base))
        columns.append(col)
    return Matrix.from_columns(columns, dim)


def rb_pair(l: HomLieAlgebra, r: LinearOperator, s: LinearOperator):
    """Joint report for two Rota-Baxter operators of equal weight plus their
    pair-compatibility identity; when everything passes, also the compatible
    algebra formed by the two induced brackets."""
    if r.kind != ROTA_BAXTER or s.kind != ROTA_BAXTER:
        raise UsageError("rb_pair needs two Rota-Baxter operators")
    if r.weight != s.weight:
        raise UsageError("Rota-Baxter operators must share the weight")
    checks = _operator_checks(l, r.matrix, "rota_baxter_identity", r.weight, label="[R]")
    checks += _operator_checks(l, s.matrix, "rota_baxter_identity", s.weight, label="[S]")
    witnesses = []
    dim = l.dim
    for (i, j) in increasing_tuples(dim, 2):
        ei = basis_vector(dim, i)
        ej = basis_vector(dim, j)
        ri, rj = r.matrix.col(i), r.matrix.col(j)
        si, sj = s.matrix.col(i), s.matrix.col(j)
        lhs = vec_add(l.bracket_of(ri, sj), l.bracket_of(si, rj))
        rhs = vec_add(
            r.matrix.apply(vec_add(l.bracket_of(si, ej), l.bracket_of(ei, sj))),
            s.matrix.apply(vec_add(l.bracket_of(ri, ej), l.bracket_of(ei, rj))),
        )
        defect = vec_sub(lhs, rhs)
        if not vec_is_zero(defect):
            witnesses.append(((i, j), defect))
    checks.append(CheckResult("pair_compatibility", tuple(witnesses)))
    report = ValidationReport(tuple(checks))
    if not report.passed:
        return report, None
    induced = CompatibleHomLieAlgebra(
        l.dim, l.alpha, _induced_matrix(l.bracket, l.dim, r), _induced_matrix(l.bracket, l.dim, s)
    )
    return report, induced


def rb_companion(r: LinearOperator) -> LinearOperator:
    """-weight*id - R, a Rota-Baxter operator of the same weight whenever R is."""
    if r.kind != ROTA_BAXTER:
        raise UsageError("companion is defined for Rota-Baxter operators")
    n = r.matrix.rows
    return LinearOperator(
        Matrix.identity(n).scale(-r.weight) - r.matrix, ROTA_BAXTER, r.weight
    )
