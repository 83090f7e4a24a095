"""Twisted Chevalley-Eilenberg cohomology and the two-bracket complex.

For a single bracket with coefficients in a module the coboundary is

    (d f)(x_1, ..., x_(n+1)) =
        sum_i (-1)^(i+1) alpha^(n-1)(x_i) . f(..., x_i omitted, ...)
      + sum_(i<j) (-1)^(i+j) f([x_i, x_j], alpha x_1, ..., omit i and j, ...,
                               alpha x_(n+1)),

with (d v)(x) = x . v in degree 0 on the twist-fixed vectors.

For a compatible pair the degree-n group is the n-fold direct sum of the
equivariant cochain space, with differential

    d(f_1, ..., f_n) = (d1 f_1, ..., d1 f_i + d2 f_(i-1), ..., d2 f_n)

built from the two single-bracket coboundaries d1 and d2; these
anticommute, which makes the square zero.  Degree 0 consists of the
twist-fixed vectors on which both actions agree, with d(v) = x .1 v.

Dimension reports assemble the coboundary matrices column by column on
exact bases and compute kernels, images and quotients by exact rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import (
    CompatibleHomLieAlgebra,
    HomLieAlgebra,
    Representation,
    verify_structure,
)
from .cochains import (
    Cochain,
    ZeroCochain,
    hom_cochain_basis,
    increasing_tuples,
    is_equivariant,
    tuple_position,
)
from .errors import ContractError, PreconditionError, UsageError
from .linalg import (
    Matrix,
    ZERO,
    basis_vector,
    kernel_basis,
    quotient_dimension,
    rref,
    solve,
    span_rank,
    vec_is_zero,
    vstack,
    zero_vector,
)

PLAIN = "plain"
COMPATIBLE = "compatible"


@dataclass(frozen=True)
class CompatibleCochain:
    """Element of the two-bracket complex: n components of arity n (n >= 1),
    or a single coefficient vector in degree 0."""

    degree: int
    components: tuple

    def __post_init__(self):
        if self.degree < 0:
            raise UsageError("negative degree")
        if self.degree == 0:
            if len(self.components) != 1 or not isinstance(self.components[0], ZeroCochain):
                raise UsageError("degree 0 needs exactly one coefficient vector")
            return
        if len(self.components) != self.degree:
            raise UsageError(f"degree {self.degree} needs {self.degree} components")
        for f in self.components:
            if not isinstance(f, Cochain) or f.arity != self.degree:
                raise UsageError("components must be cochains of arity equal to the degree")
        dims = {(f.source_dim, f.target_dim) for f in self.components}
        if len(dims) > 1:
            raise UsageError("components must share source and target dimensions")

    @classmethod
    def zero(cls, degree: int, source_dim: int, target_dim: int) -> "CompatibleCochain":
        if degree == 0:
            return cls(0, (ZeroCochain(zero_vector(target_dim)),))
        return cls(degree, tuple(Cochain.zero(degree, source_dim, target_dim) for _ in range(degree)))

    def flatten(self) -> tuple:
        if self.degree == 0:
            return self.components[0].vector
        out = ()
        for f in self.components:
            out += f.flatten()
        return out

    def is_zero(self) -> bool:
        if self.degree == 0:
            return self.components[0].is_zero()
        return all(f.is_zero() for f in self.components)

    def __add__(self, other: "CompatibleCochain") -> "CompatibleCochain":
        if self.degree != other.degree:
            raise UsageError("degree mismatch")
        return CompatibleCochain(
            self.degree, tuple(a + b for a, b in zip(self.components, other.components))
        )

    def __sub__(self, other: "CompatibleCochain") -> "CompatibleCochain":
        return self + other.scale(-1)

    def scale(self, c) -> "CompatibleCochain":
        return CompatibleCochain(self.degree, tuple(f.scale(c) for f in self.components))


@dataclass(frozen=True)
class CohomologyReport:
    """Exact dimensions and bases at one degree of one complex."""

    degree: int
    flavor: str
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int
    cocycle_basis: tuple
    coboundary_basis: tuple
    cohomology_basis: tuple  # cocycle representatives completing the coboundaries
    source_dim: int
    target_dim: int


def _validate_structures(struct, rep: Representation):
    report = verify_structure(struct)
    if not report.passed:
        raise PreconditionError("invalid algebra", report)
    rep_report = verify_structure(rep)
    if not rep_report.passed:
        raise PreconditionError("invalid representation", rep_report)
    if rep.base != struct:
        raise UsageError("representation is not over the given structure")


def ce_coboundary(l: HomLieAlgebra, v: Representation, f, check: bool = True):
    """Apply the single-bracket coboundary to an equivariant cochain.

    Degree 0 input is a twist-fixed vector; the output is the arity-1
    cochain x -> x . v.  With check=True the preconditions (equivariance of
    f, validity of l and v) are enforced.
    """
    if len(v.actions) != 1:
        raise UsageError("single-bracket coboundary needs a single-action representation")
    if check:
        _validate_structures(l, v)
        if not is_equivariant(f, l.alpha, v.beta):
            raise PreconditionError("cochain is not twist-equivariant")
    return _ce_apply(l.dim, l.alpha, l.bracket_cochain(), v, 1, f)


def _ce_apply(dim: int, alpha: Matrix, bracket: Cochain, v: Representation, which: int, f):
    if isinstance(f, ZeroCochain):
        cols = [v.act(which, basis_vector(dim, i), f.vector) for i in range(dim)]
        return Cochain(1, dim, v.vdim, Matrix.from_columns(cols, v.vdim))
    n = f.arity
    out_cols = comb(dim, n + 1)
    alpha_prev = alpha.power(n - 1)
    columns = []
    for X in increasing_tuples(dim, n + 1):
        total = list(zero_vector(v.vdim))
        for pos in range(n + 1):
            inner = f.column(X[:pos] + X[pos + 1 :])
            if vec_is_zero(inner):
                continue
            term = v.act(which, alpha_prev.col(X[pos]), inner)
            if pos % 2 == 0:
                total = [a + b for a, b in zip(total, term)]
            else:
                total = [a - b for a, b in zip(total, term)]
        for pi in range(n + 1):
            for pj in range(pi + 1, n + 1):
                first = bracket.column((X[pi], X[pj]))
                rest = [alpha.col(X[k]) for k in range(n + 1) if k not in (pi, pj)]
                term = f.evaluate([first] + rest)
                if vec_is_zero(term):
                    continue
                if (pi + pj) % 2 == 0:
                    total = [a + b for a, b in zip(total, term)]
                else:
                    total = [a - b for a, b in zip(total, term)]
        columns.append(tuple(total))
    assert len(columns) == out_cols
    return Cochain(n + 1, dim, v.vdim, Matrix.from_columns(columns, v.vdim))


def _c0_compatible_basis(c: CompatibleHomLieAlgebra, v: Representation):
    """Vectors fixed by beta on which the two actions of every basis element agree."""
    blocks = [v.beta - Matrix.identity(v.vdim)]
    for i in range(c.dim):
        blocks.append(v.actions[0][i] - v.actions[1][i])
    return [ZeroCochain(w) for w in kernel_basis(vstack(blocks))]


def _in_c0_compatible(c, v, z: ZeroCochain) -> bool:
    if v.beta.apply(z.vector) != z.vector:
        return False
    for i in range(c.dim):
        if v.actions[0][i].apply(z.vector) != v.actions[1][i].apply(z.vector):
            return False
    return True


def compatible_coboundary(c: CompatibleHomLieAlgebra, v: Representation,
                          f: CompatibleCochain, check: bool = True) -> CompatibleCochain:
    """Interleaved coboundary of the two-bracket complex."""
    if len(v.actions) != 2:
        raise UsageError("compatible coboundary needs a two-action representation")
    if check:
        _validate_structures(c, v)
        if f.degree == 0:
            if not _in_c0_compatible(c, v, f.components[0]):
                raise PreconditionError(
                    "vector is not in the degree-0 group (twist-fixed with agreeing actions)"
                )
        else:
            for comp in f.components:
                if not is_equivariant(comp, c.alpha, v.beta):
                    raise PreconditionError("component is not twist-equivariant")
    if f.degree == 0:
        out = _ce_apply(c.dim, c.alpha, c.bracket_cochain(1), v, 1, f.components[0])
        return CompatibleCochain(1, (out,))
    d1 = [_ce_apply(c.dim, c.alpha, c.bracket_cochain(1), v, 1, comp) for comp in f.components]
    d2 = [_ce_apply(c.dim, c.alpha, c.bracket_cochain(2), v, 2, comp) for comp in f.components]
    n = f.degree
    parts = [d1[0]]
    for i in range(1, n):
        parts.append(d1[i] + d2[i - 1])
    parts.append(d2[n - 1])
    return CompatibleCochain(n + 1, tuple(parts))


def _space_basis(struct, v: Representation, degree: int, flavor: str):
    if flavor == PLAIN:
        return hom_cochain_basis(struct.alpha, v.beta, degree)
    if degree == 0:
        return _c0_compatible_basis(struct, v)
    single = hom_cochain_basis(struct.alpha, v.beta, degree)
    basis = []
    for slot in range(degree):
        for f in single:
            comps = [Cochain.zero(degree, struct.dim, v.vdim) for _ in range(degree)]
            comps[slot] = f
            basis.append(CompatibleCochain(degree, tuple(comps)))
    return basis


def _flatten_item(item) -> tuple:
    if isinstance(item, ZeroCochain):
        return item.vector
    if isinstance(item, Cochain):
        return item.flatten()
    return item.flatten()


def _ambient_dim(dim: int, vdim: int, degree: int, flavor: str) -> int:
    if degree == 0:
        return vdim
    per = vdim * comb(dim, degree)
    return per if flavor == PLAIN else degree * per


def _combine(basis, coords):
    out = None
    for x, item in zip(coords, basis):
        if x == 0:
            continue
        piece = item.scale(x)
        out = piece if out is None else out + piece
    if out is None:
        template = basis[0]
        if isinstance(template, ZeroCochain):
            return ZeroCochain(zero_vector(template.target_dim))
        if isinstance(template, Cochain):
            return Cochain.zero(template.arity, template.source_dim, template.target_dim)
        return CompatibleCochain.zero(template.degree,
                                      template.components[0].source_dim
                                      if template.degree else len(template.components[0].vector),
                                      _item_target(template))
    return out


def _item_target(item):
    if isinstance(item, ZeroCochain):
        return item.target_dim
    if isinstance(item, Cochain):
        return item.target_dim
    comp = item.components[0]
    return comp.target_dim if isinstance(comp, Cochain) else comp.target_dim


def _unflatten(flat, dim: int, vdim: int, degree: int, flavor: str):
    if degree == 0:
        return ZeroCochain(tuple(flat))
    per = vdim * comb(dim, degree)
    if flavor == PLAIN:
        return Cochain.from_flat(degree, dim, vdim, flat)
    comps = tuple(
        Cochain.from_flat(degree, dim, vdim, flat[k * per : (k + 1) * per])
        for k in range(degree)
    )
    return CompatibleCochain(degree, comps)


def cohomology_dimensions(struct, v: Representation, n: int, flavor: str = None) -> CohomologyReport:
    """Cocycle, coboundary and cohomology dimensions at degree n, with exact bases.

    The coboundary matrices are assembled column by column from the defining
    formulas on the equivariant bases; the quotient dimension asserts that
    coboundaries really land among cocycles and raises ContractError
    otherwise.
    """
    if n < 0:
        raise UsageError("negative degree")
    if flavor is None:
        flavor = COMPATIBLE if isinstance(struct, CompatibleHomLieAlgebra) else PLAIN
    if flavor == PLAIN and not isinstance(struct, HomLieAlgebra):
        raise UsageError("plain flavor needs a single-bracket algebra")
    if flavor == COMPATIBLE and not isinstance(struct, CompatibleHomLieAlgebra):
        raise UsageError("compatible flavor needs a two-bracket algebra")
    _validate_structures(struct, v)

    def apply_delta(item):
        if flavor == PLAIN:
            return ce_coboundary(struct, v, item, check=False)
        if isinstance(item, ZeroCochain):
            item = CompatibleCochain(0, (item,))
        return compatible_coboundary(struct, v, item, check=False)

    basis_n = _space_basis(struct, v, n, flavor)
    dim_cochains = len(basis_n)
    ambient_next = _ambient_dim(struct.dim, v.vdim, n + 1, flavor)
    delta_cols = [_flatten_item(apply_delta(item)) for item in basis_n]
    delta_matrix = (
        Matrix.from_columns(delta_cols, ambient_next)
        if delta_cols
        else Matrix.zero(ambient_next, 0)
    )
    kernel = kernel_basis(delta_matrix)
    cocycle_vectors = []
    cocycle_items = []
    for kv in kernel:
        cocycle_items.append(_combine(basis_n, kv))
        cocycle_vectors.append(_flatten_item(cocycle_items[-1]))

    boundary_vectors = []
    if n >= 1:
        basis_prev = _space_basis(struct, v, n - 1, flavor)
        ambient_here = _ambient_dim(struct.dim, v.vdim, n, flavor)
        images = [_flatten_item(apply_delta(item)) for item in basis_prev]
        if images:
            reduced, pivots = rref(Matrix.from_rows(images))
            boundary_vectors = [reduced.row(i) for i in range(len(pivots))]
    coboundary_items = [
        _unflatten(w, struct.dim, v.vdim, n, flavor) for w in boundary_vectors
    ]

    dim_cocycles = len(cocycle_vectors)
    dim_coboundaries = len(boundary_vectors)
    if dim_cocycles:
        dim_cohomology = quotient_dimension(cocycle_vectors, boundary_vectors)
    else:
        if dim_coboundaries:
            raise ContractError("coboundaries exist but cocycles do not")
        dim_cohomology = 0

    representatives = []
    rep_rows = list(boundary_vectors)
    current = span_rank(rep_rows)
    for item, w in zip(cocycle_items, cocycle_vectors):
        if len(representatives) == dim_cohomology:
            break
        r = span_rank(rep_rows + [w])
        if r > current:
            representatives.append(item)
            rep_rows.append(w)
            current = r

    return CohomologyReport(
        degree=n,
        flavor=flavor,
        dim_cochains=dim_cochains,
        dim_cocycles=dim_cocycles,
        dim_coboundaries=dim_coboundaries,
        dim_cohomology=dim_cohomology,
        cocycle_basis=tuple(cocycle_items),
        coboundary_basis=tuple(coboundary_items),
        cohomology_basis=tuple(representatives),
        source_dim=struct.dim,
        target_dim=v.vdim,
    )


def class_coordinates(report: CohomologyReport, item) -> tuple:
    """Coordinates of a cocycle's class in the report's cohomology basis.

    Cohomologous inputs give identical coordinates; inputs outside the
    cocycle space are rejected.
    """
    w = _flatten_item(item)
    columns = [_flatten_item(b) for b in report.coboundary_basis]
    columns += [_flatten_item(h) for h in report.cohomology_basis]
    if not columns:
        if vec_is_zero(w):
            return ()
        raise PreconditionError("not a cocycle for this report")
    m = Matrix.from_columns(columns, len(w))
    x = solve(m, w)
    if x is None:
        raise PreconditionError("not a cocycle for this report")
    return tuple(x[report.dim_coboundaries :])


@dataclass(frozen=True)
class DerivationReport:
    derivations: tuple  # arity-1 cochains
    inner: tuple
    outer_dim: int


def derivation_space(c: CompatibleHomLieAlgebra, v: Representation) -> DerivationReport:
    """Derivations (twist-equivariant, Leibniz for both brackets), the inner
    ones induced by degree-0 vectors, and the outer dimension."""
    if len(v.actions) != 2:
        raise UsageError("derivation space needs a two-action representation")
    _validate_structures(c, v)
    dim, vdim = c.dim, v.vdim
    unknowns = vdim * dim  # D as a vdim x dim matrix, row-major

    def entry_index(r, col):
        return r * dim + col

    rows = []
    # beta D - D alpha = 0
    for r in range(vdim):
        for col in range(dim):
            row = [ZERO] * unknowns
            for k in range(vdim):
                row[entry_index(k, col)] += v.beta.entry(r, k)
            for k in range(dim):
                row[entry_index(r, k)] -= c.alpha.entry(k, col)
            rows.append(row)
    # D[e_i,e_j]_b - e_i .b D e_j + e_j .b D e_i = 0
    for b in (1, 2):
        bracket = c.brackets[b - 1]
        for (i, j) in increasing_tuples(dim, 2):
            cij = bracket.col(tuple_position(dim, 2)[(i, j)])
            for r in range(vdim):
                row = [ZERO] * unknowns
                for k in range(dim):
                    if cij[k]:
                        row[entry_index(r, k)] += cij[k]
                ai = v.actions[b - 1][i]
                aj = v.actions[b - 1][j]
                for k in range(vdim):
                    row[entry_index(k, j)] -= ai.entry(r, k)
                    row[entry_index(k, i)] += aj.entry(r, k)
                rows.append(row)
    system = Matrix.from_rows(rows) if rows else Matrix.zero(0, unknowns)
    derivations = [
        Cochain.from_flat(1, dim, vdim, flat) for flat in kernel_basis(system)
    ]
    inner_all = []
    for z in _c0_compatible_basis(c, v):
        cols = [v.actions[0][i].apply(z.vector) for i in range(dim)]
        inner_all.append(Cochain(1, dim, vdim, Matrix.from_columns(cols, vdim)))
    inner_rows = [f.flatten() for f in inner_all if not f.is_zero()]
    inner = []
    if inner_rows:
        reduced, pivots = rref(Matrix.from_rows(inner_rows))
        inner = [
            Cochain.from_flat(1, dim, vdim, reduced.row(i)) for i in range(len(pivots))
        ]
    outer = quotient_dimension(
        [f.flatten() for f in derivations], [f.flatten() for f in inner]
    )
    return DerivationReport(tuple(derivations), tuple(inner), outer)


def comparison_map(f: CompatibleCochain):
    """Collapse a two-bracket cochain into the sum-bracket complex:
    half the vector in degree 0, the sum of the components otherwise."""
    if f.degree == 0:
        return f.components[0].scale(Fraction(1, 2))
    out = f.components[0]
    for comp in f.components[1:]:
        out = out + comp
    return out
