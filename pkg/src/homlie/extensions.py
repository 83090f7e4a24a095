"""Abelian extensions of a compatible pair and their degree-2 classification.

An extension is kept in split coordinates: the total space is the direct sum
of the base and the fiber together with inclusion, projection and a
twist-compatible splitting as explicit matrices.  Construction validates the
whole package (exactness, morphism properties, the abelian fiber, and the
splitting condition twist_total o s = s o twist_base) and rejects violations
with a diagnostic; a twist-compatible splitting is genuine extra data, it
need not exist for an arbitrary projection.

Extensions of a fixed base by a fixed module are classified by degree-2
cohomology of the two-bracket complex: building from a cocycle and reading
the cocycle back off a splitting are mutually inverse, equivalences
correspond to coboundary shifts, and the class is independent of the chosen
splitting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    CompatibleHomLieAlgebra,
    Representation,
    _semidirect_bracket,
    verify_structure,
)
from .cochains import Cochain, hom_cochain_basis, increasing_tuples, is_equivariant, tuple_position
from .cohomology import (
    COMPATIBLE,
    CompatibleCochain,
    class_coordinates,
    cohomology_dimensions,
    compatible_coboundary,
)
from .errors import ContractError, PreconditionError, UsageError
from .linalg import (
    Matrix,
    basis_vector,
    rank,
    solve,
    vec_add,
    vec_is_zero,
    vec_sub,
    zero_vector,
)


@dataclass(frozen=True)
class ExtensionCocycle:
    """Pair of arity-2 cochains from the base into the fiber; cocycle
    membership is enforced where the pair is consumed, not structurally."""

    f1: Cochain
    f2: Cochain

    def __post_init__(self):
        for f in (self.f1, self.f2):
            if f.arity != 2:
                raise UsageError("extension cocycle components must have arity 2")
        if (self.f1.source_dim, self.f1.target_dim) != (self.f2.source_dim, self.f2.target_dim):
            raise UsageError("cocycle components must share source and target")

    def as_compatible(self) -> CompatibleCochain:
        return CompatibleCochain(2, (self.f1, self.f2))


@dataclass(frozen=True)
class AbelianExtension:
    base: CompatibleHomLieAlgebra
    fiber_dim: int
    fiber_beta: Matrix
    total: CompatibleHomLieAlgebra
    inclusion: Matrix  # (g+v) x v
    projection: Matrix  # g x (g+v)
    splitting: Matrix  # (g+v) x g

    def __post_init__(self):
        g = self.base.dim
        v = self.fiber_dim
        h = self.total.dim
        if h != g + v:
            raise UsageError("total dimension must be base + fiber")
        if (self.inclusion.rows, self.inclusion.cols) != (h, v):
            raise UsageError("inclusion must be (g+v) x v")
        if (self.projection.rows, self.projection.cols) != (g, h):
            raise UsageError("projection must be g x (g+v)")
        if (self.splitting.rows, self.splitting.cols) != (h, g):
            raise UsageError("splitting must be (g+v) x g")
        if (self.fiber_beta.rows, self.fiber_beta.cols) != (v, v):
            raise UsageError("fiber twist must be v x v")
        self._validate()

    def _validate(self):
        g, v = self.base.dim, self.fiber_dim
        i, j, s = self.inclusion, self.projection, self.splitting
        if not (j @ i).is_zero():
            raise PreconditionError("projection does not annihilate the fiber")
        if (j @ s) != Matrix.identity(g):
            raise PreconditionError("splitting is not a section of the projection")
        if rank(i) != v:
            raise PreconditionError("inclusion is not injective")
        if rank(j) != g:
            raise PreconditionError("projection is not surjective")
        if (self.total.alpha @ s) != (s @ self.base.alpha):
            raise PreconditionError("splitting does not intertwine the twists")
        if (self.total.alpha @ i) != (i @ self.fiber_beta):
            raise PreconditionError("inclusion does not intertwine the twists")
        if (self.base.alpha @ j) != (j @ self.total.alpha):
            raise PreconditionError("projection does not intertwine the twists")
        for b in (1, 2):
            for (a, c) in increasing_tuples(v, 2):
                if not vec_is_zero(self.total.bracket_of(b, i.col(a), i.col(c))):
                    raise PreconditionError("fiber is not abelian inside the total algebra")
            for p in range(self.total.dim):
                for q in range(p + 1, self.total.dim):
                    lhs = j.apply(
                        self.total.bracket_of(b, basis_vector(self.total.dim, p),
                                              basis_vector(self.total.dim, q))
                    )
                    rhs = self.base.bracket_of(b, j.col(p), j.col(q))
                    if lhs != rhs:
                        raise PreconditionError("projection is not a bracket morphism")
        report = verify_structure(self.total)
        if not report.passed:
            raise PreconditionError("total structure fails verification", report)
        base_report = verify_structure(self.base)
        if not base_report.passed:
            raise PreconditionError("base structure fails verification", base_report)

    def fiber_component(self, w) -> tuple:
        """Coordinates in the fiber of a total vector lying in ker(projection)."""
        u = solve(self.inclusion, w)
        if u is None:
            raise UsageError("vector does not lie in the image of the inclusion")
        return u


def build_extension(c: CompatibleHomLieAlgebra, rep: Representation,
                    z: ExtensionCocycle) -> AbelianExtension:
    """Total structure on base + module with brackets
    ([x,y]_i, x ._i w - y ._i u + f_i(x,y)) and block-diagonal twist."""
    if rep.base != c:
        raise UsageError("representation is not over the given base")
    if len(rep.actions) != 2:
        raise UsageError("extension needs a two-action representation")
    if z.f1.source_dim != c.dim or z.f1.target_dim != rep.vdim:
        raise UsageError("cocycle shape does not match base and fiber")
    rep_report = verify_structure(rep)
    if not rep_report.passed:
        raise PreconditionError("invalid representation", rep_report)
    delta = compatible_coboundary(c, rep, z.as_compatible())
    if not delta.is_zero():
        raise PreconditionError("extension datum is not a 2-cocycle")
    g, v = c.dim, rep.vdim
    brackets = []
    pos = tuple_position(g + v, 2)
    for b in (1, 2):
        mat = _semidirect_bracket(c.brackets[b - 1], rep.actions[b - 1], g, v)
        columns = [mat.col(k) for k in range(mat.cols)]
        f = (z.f1, z.f2)[b - 1]
        for (i, j) in increasing_tuples(g, 2):
            k = pos[(i, j)]
            columns[k] = vec_add(columns[k], zero_vector(g) + f.column((i, j)))
        brackets.append(Matrix.from_columns(columns, g + v))
    total = CompatibleHomLieAlgebra(g + v, c.alpha.block_diag(rep.beta), brackets[0], brackets[1])
    inclusion = Matrix.from_rows([[0] * v for _ in range(g)] + [r for r in _identity_rows(v)])
    projection = Matrix.from_rows([list(r) + [0] * v for r in _identity_rows(g)])
    splitting = Matrix.from_rows([list(r) for r in _identity_rows(g)] + [[0] * g for _ in range(v)])
    return AbelianExtension(c, v, rep.beta, total, inclusion, projection, splitting)


def _identity_rows(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def extract_cocycle(e: AbelianExtension):
    """Induced representation and the 2-cocycle read off the splitting.

    The action is x ._b w = fiber part of [s(x), i(w)]_b; the cocycle is the
    fiber part of [s(x), s(y)]_b - s([x, y]_b).  The action does not depend
    on the splitting; the cocycle moves by a coboundary when the splitting
    changes.
    """
    g, v = e.base.dim, e.fiber_dim
    tables = []
    for b in (1, 2):
        table = []
        for p in range(g):
            cols = []
            for a in range(v):
                w = e.total.bracket_of(b, e.splitting.col(p), e.inclusion.col(a))
                cols.append(e.fiber_component(w))
            table.append(Matrix.from_columns(cols, v))
        tables.append(tuple(table))
    rep = Representation(e.base, v, e.fiber_beta, tuple(tables))
    rep_report = verify_structure(rep)
    if not rep_report.passed:
        raise ContractError("induced representation fails verification")
    cochains = []
    for b in (1, 2):
        columns = []
        for (p, q) in increasing_tuples(g, 2):
            w = vec_sub(
                e.total.bracket_of(b, e.splitting.col(p), e.splitting.col(q)),
                e.splitting.apply(e.base.bracket_of(b, basis_vector(g, p), basis_vector(g, q))),
            )
            columns.append(e.fiber_component(w))
        cochains.append(Cochain(2, g, v, Matrix.from_columns(columns, v)))
    z = ExtensionCocycle(cochains[0], cochains[1])
    delta = compatible_coboundary(e.base, rep, z.as_compatible(), check=False)
    if not delta.is_zero():
        raise ContractError("extracted pair is not a 2-cocycle")
    return rep, z


def alternate_splitting(e: AbelianExtension, tau: Cochain) -> AbelianExtension:
    """The same extension re-read through s + i o tau, for twist-equivariant tau."""
    if tau.arity != 1 or tau.source_dim != e.base.dim or tau.target_dim != e.fiber_dim:
        raise UsageError("splitting shift must be an arity-1 cochain from base to fiber")
    if not is_equivariant(tau, e.base.alpha, e.fiber_beta):
        raise PreconditionError("splitting shift is not twist-equivariant")
    new_splitting = e.splitting + (e.inclusion @ tau.coeffs)
    return AbelianExtension(
        e.base, e.fiber_dim, e.fiber_beta, e.total, e.inclusion, e.projection, new_splitting
    )


def _same_setting(e: AbelianExtension, e2: AbelianExtension):
    if e.base != e2.base:
        raise UsageError("extensions have different bases")
    if e.fiber_dim != e2.fiber_dim or e.fiber_beta != e2.fiber_beta:
        raise UsageError("extensions have different fibers")
    rep1, z1 = extract_cocycle(e)
    rep2, z2 = extract_cocycle(e2)
    if rep1 != rep2:
        raise UsageError("extensions induce different representations")
    return rep1, z1, z2


def check_equivalence(e: AbelianExtension, e2: AbelianExtension):
    """Morphism of extensions from e to e2, or None when inequivalent.

    The commuting requirements pin the morphism to identity-plus-fiber-shift
    in split coordinates, so equivalence reduces to an exact linear solve of
    the coboundary equation  z - z2 = d(tau)  over equivariant tau; a found
    morphism is re-verified against all of its requirements.
    """
    rep, z1, z2 = _same_setting(e, e2)
    c = e.base
    g, v = c.dim, e.fiber_dim
    tau_basis = hom_cochain_basis(c.alpha, e.fiber_beta, 1)
    difference = (z1.as_compatible() - z2.as_compatible()).flatten()
    if not tau_basis:
        if not vec_is_zero(difference):
            return None
        tau = Cochain.zero(1, g, v)
    else:
        columns = [
            compatible_coboundary(c, rep, CompatibleCochain(1, (t,)), check=False).flatten()
            for t in tau_basis
        ]
        x = solve(Matrix.from_columns(columns, len(difference)), difference)
        if x is None:
            return None
        tau = Cochain.zero(1, g, v)
        for coord, t in zip(x, tau_basis):
            if coord:
                tau = tau + t.scale(coord)
    # phi = s2 o j + i2 o (fiber_part + tau o j)
    h = e.total.dim
    fiber_part_cols = []
    id_minus_sj = Matrix.identity(h) - (e.splitting @ e.projection)
    for p in range(h):
        fiber_part_cols.append(e.fiber_component(id_minus_sj.col(p)))
    fiber_part = Matrix.from_columns(fiber_part_cols, v)
    phi = (e2.splitting @ e.projection) + (
        e2.inclusion @ (fiber_part + (tau.coeffs @ e.projection))
    )
    _verify_morphism(e, e2, phi)
    return phi


def _verify_morphism(e: AbelianExtension, e2: AbelianExtension, phi: Matrix):
    h = e.total.dim
    if (phi @ e.inclusion) != e2.inclusion:
        raise ContractError("morphism does not restrict to the fiber identity")
    if (e2.projection @ phi) != e.projection:
        raise ContractError("morphism does not cover the base identity")
    if (phi @ e.total.alpha) != (e2.total.alpha @ phi):
        raise ContractError("morphism does not intertwine the twists")
    for b in (1, 2):
        for (p, q) in increasing_tuples(h, 2):
            lhs = phi.apply(
                e.total.bracket_of(b, basis_vector(h, p), basis_vector(h, q))
            )
            rhs = e2.total.bracket_of(b, phi.col(p), phi.col(q))
            if lhs != rhs:
                raise ContractError("morphism does not preserve the brackets")


def ext_class(e: AbelianExtension) -> tuple:
    """Coordinates of the extension's class in degree-2 cohomology of the
    induced representation.  Equivalent extensions and alternate splittings
    of one extension give identical coordinates."""
    rep, z = extract_cocycle(e)
    report = cohomology_dimensions(e.base, rep, 2, COMPATIBLE)
    return class_coordinates(report, z.as_compatible())
