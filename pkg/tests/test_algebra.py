import random
from fractions import Fraction

import pytest

from homlie import (
    Cochain,
    CompatibleHomLieAlgebra,
    HomLieAlgebra,
    LinearOperator,
    Matrix,
    NIJENHUIS,
    PreconditionError,
    ROTA_BAXTER,
    Representation,
    UsageError,
    adjoint_representation,
    ce_coboundary,
    derived_structure,
    induced_bracket,
    rb_companion,
    rb_pair,
    semidirect_product,
    sum_bracket,
    twisted_semidirect,
    verify_operator,
    verify_structure,
)
from homlie import fixtures
from homlie.linalg import basis_vector

from helpers import rand_frac

F = Fraction


# ---------------------------------------------------------------------------
# structural skew-symmetry
# ---------------------------------------------------------------------------

def test_bracket_is_skew_by_construction():
    rng = random.Random(17)
    for alg in (fixtures.h3(), fixtures.g4a(1)):
        d = alg.dim
        for i in range(d):
            for j in range(d):
                ei, ej = basis_vector(d, i), basis_vector(d, j)
                lhs = alg.bracket_of(ei, ej)
                rhs = tuple(-x for x in alg.bracket_of(ej, ei))
                assert lhs == rhs
        u = tuple(rand_frac(rng) for _ in range(d))
        assert all(x == 0 for x in alg.bracket_of(u, u))


# ---------------------------------------------------------------------------
# verify_structure
# ---------------------------------------------------------------------------

def test_ab1_valid():
    report = verify_structure(fixtures.ab1())
    assert report.passed


def test_g4a_multiplicativity_witness():
    report = verify_structure(fixtures.g4a(1))
    mult = report.check("multiplicativity")
    assert not mult.passed
    assert mult.witnesses == (((0, 1), (F(2), F(2), F(0), F(0))),)
    assert report.check("hom_jacobi").passed


def test_g4a_defect_scales_with_parameter():
    for a in (0, 1, 2):
        report = verify_structure(fixtures.g4a(a))
        mult = report.check("multiplicativity")
        if a == 0:
            assert report.passed
        else:
            ((pair, defect),) = mult.witnesses
            assert pair == (0, 1)
            assert defect == (F(2 * a), F(2 * a), F(0), F(0))


def test_g2a_flags_multiplicativity_only():
    report = verify_structure(fixtures.g2a(1))
    assert not report.check("multiplicativity").passed
    assert report.check("hom_jacobi").passed


def test_d2_compatible_valid():
    report = verify_structure(fixtures.d2())
    assert report.passed
    names = [c.name for c in report.checks]
    assert "compatibility" in names


def test_witnesses_reevaluate_to_stated_defect():
    alg = fixtures.g4a(2)
    report = verify_structure(alg)
    ((pair, defect),) = report.check("multiplicativity").witnesses
    i, j = pair
    lhs = alg.alpha.apply(alg.bracket_of(basis_vector(4, i), basis_vector(4, j)))
    rhs = alg.bracket_of(alg.alpha.col(i), alg.alpha.col(j))
    assert tuple(a - b for a, b in zip(lhs, rhs)) == defect


def test_adjoint_representation_valid_on_valid_fixtures():
    for alg in (fixtures.h3(), fixtures.d2(), fixtures.compatible_h3(),
                fixtures.twisted_h3(), fixtures.twisted_compatible_h3()):
        assert verify_structure(adjoint_representation(alg)).passed


def test_invalid_representation_reported():
    # e3 acting nontrivially breaks the module identity: [e1,e2] = e3 must
    # act as the commutator of the e1 and e2 actions, which is zero here.
    h3 = fixtures.h3()
    bad = Representation(
        h3, 1, Matrix.identity(1),
        ((Matrix.zero(1, 1), Matrix.zero(1, 1), Matrix.from_rows([[1]])),),
    )
    report = verify_structure(bad)
    assert not report.check("action_module").passed


# ---------------------------------------------------------------------------
# sum_bracket / derived_structure
# ---------------------------------------------------------------------------

def test_sum_bracket_projections():
    c = fixtures.d2()
    assert sum_bracket(c, 1, 0).bracket == c.bracket1
    assert sum_bracket(c, 0, 0).bracket.is_zero()
    both = sum_bracket(c, 1, 1)
    assert both.bracket.col(0) == (F(1), F(1))
    assert verify_structure(both).passed


def test_sum_bracket_random_combinations_stay_valid():
    rng = random.Random(3)
    for c in (fixtures.d2(), fixtures.compatible_h3(), fixtures.twisted_compatible_h3()):
        for _ in range(10):
            lam, eta = rand_frac(rng), rand_frac(rng)
            assert verify_structure(sum_bracket(c, lam, eta)).passed


def test_derived_structure_basics():
    h3 = fixtures.h3()
    d0 = derived_structure(h3, 0)
    assert d0.bracket == h3.bracket and d0.alpha == h3.alpha

    ab = fixtures.ab1()
    assert derived_structure(ab, 5) == ab

    g4 = fixtures.g4a(1)
    d1 = derived_structure(g4, 1)
    # alpha([e1,e2]) = a e2 + a e1; twist becomes alpha^2
    assert d1.bracket.col(0) == (F(1), F(1), F(0), F(0))
    assert d1.alpha == g4.alpha.power(2)


def test_composition_induced_structures_verify():
    # Composing a bracket with one of its endomorphisms and twisting by the
    # same map yields a valid structure; diag(a, b, ab) is a bracket
    # endomorphism of the Heisenberg algebra.
    h3 = fixtures.h3()
    alpha = Matrix.diagonal([2, 3, 6])
    composed = HomLieAlgebra(3, alpha, alpha @ h3.bracket)
    assert composed.bracket.col(0) == (F(0), F(0), F(6))
    assert verify_structure(composed).passed

    pair = fixtures.compatible_h3()  # both brackets are multiples of the same one
    composed_pair = CompatibleHomLieAlgebra(
        3, alpha, alpha @ pair.bracket1, alpha @ pair.bracket2
    )
    assert verify_structure(composed_pair).passed


def test_derived_structure_preserves_validity():
    for s in (fixtures.h3(), fixtures.d2(), fixtures.g4a(0),
              fixtures.twisted_h3(), fixtures.twisted_compatible_h3()):
        for n in (0, 1, 2):
            assert verify_structure(derived_structure(s, n)).passed


# ---------------------------------------------------------------------------
# semidirect products
# ---------------------------------------------------------------------------

def test_semidirect_zero_everything_is_abelian():
    c = CompatibleHomLieAlgebra.from_brackets(2, Matrix.identity(2), {}, {})
    zero = Matrix.zero(2, 2)
    rep = Representation(c, 2, Matrix.identity(2), ((zero, zero), (zero, zero)))
    total = semidirect_product(c, rep)
    assert total.dim == 4
    assert total.bracket1.is_zero() and total.bracket2.is_zero()


def test_semidirect_with_adjoint_is_valid():
    c = fixtures.d2()
    total = semidirect_product(c, adjoint_representation(c))
    assert total.dim == 4
    assert verify_structure(total).passed


def test_semidirect_trivial_rep_extends_by_zero():
    c = fixtures.d2()
    zero = Matrix.zero(1, 1)
    rep = Representation(c, 1, Matrix.identity(1), ((zero, zero), (zero, zero)))
    total = semidirect_product(c, rep)
    # g x V and V x V columns vanish; g x g columns reproduce the base.
    assert total.bracket1.col(0) == (F(1), F(0), F(0))
    for k in range(1, total.bracket1.cols):
        assert all(x == 0 for x in total.bracket1.col(k))


def test_semidirect_rejects_invalid_inputs():
    g4 = fixtures.g4a(1)
    pair = CompatibleHomLieAlgebra(4, g4.alpha, g4.bracket, g4.bracket)
    with pytest.raises(PreconditionError) as err:
        semidirect_product(pair, adjoint_representation(pair))
    assert err.value.report is not None


def test_twisted_semidirect_zero_cochain_is_plain():
    h3 = fixtures.h3()
    rep = adjoint_representation(h3)
    twisted = twisted_semidirect(h3, rep, Cochain.zero(2, 3, 3))
    semi = semidirect_product(
        CompatibleHomLieAlgebra(3, h3.alpha, h3.bracket, h3.bracket),
        adjoint_representation(CompatibleHomLieAlgebra(3, h3.alpha, h3.bracket, h3.bracket)),
    )
    assert twisted.bracket == semi.bracket1


def test_twisted_semidirect_by_coboundary():
    rng = random.Random(5)
    d2 = fixtures.d2()
    l = d2.part(1)
    rep = adjoint_representation(l)
    tau = Cochain(1, 2, 2, Matrix.from_rows([[rand_frac(rng) for _ in range(2)] for _ in range(2)]))
    f = ce_coboundary(l, rep, tau)
    twisted = twisted_semidirect(l, rep, f)
    assert verify_structure(twisted).passed
    untwisted = twisted_semidirect(l, rep, Cochain.zero(2, 2, 2))
    pair = CompatibleHomLieAlgebra(4, twisted.alpha, untwisted.bracket, twisted.bracket)
    assert verify_structure(pair).passed


def test_twisted_semidirect_rejects_non_cocycle():
    h3 = fixtures.h3()
    rep = adjoint_representation(h3)
    f = Cochain.from_values(2, 3, 3, {(0, 2): [1, 0, 0]})
    assert not ce_coboundary(h3, rep, f).is_zero()
    with pytest.raises(PreconditionError):
        twisted_semidirect(h3, rep, f)


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------

def test_g4a_nijenhuis_operator_all_parameters():
    for a in (0, 1, 2):
        report = verify_operator(fixtures.g4a(a), fixtures.g4a_nijenhuis())
        assert report.passed


def test_identity_operator_is_nijenhuis_everywhere():
    for alg in (fixtures.h3(), fixtures.g4a(1), fixtures.d2()):
        op = LinearOperator(Matrix.identity(alg.dim), NIJENHUIS)
        assert verify_operator(alg, op).passed


def test_g2a_rota_baxter():
    report = verify_operator(fixtures.g2a(1), fixtures.g2a_rota_baxter())
    assert report.passed


def test_induced_bracket_cases():
    d2 = fixtures.d2()
    zero = LinearOperator(Matrix.zero(2, 2), NIJENHUIS)
    assert induced_bracket(d2, zero).bracket1.is_zero()
    ident = LinearOperator(Matrix.identity(2), NIJENHUIS)
    deformed = induced_bracket(d2, ident)
    assert deformed.bracket1 == d2.bracket1 and deformed.bracket2 == d2.bracket2

    g2 = fixtures.g2a(1)
    rb = induced_bracket(g2, fixtures.g2a_rota_baxter())
    assert rb.bracket.col(0) == (F(-1), F(-1))


def test_induced_bracket_requires_valid_operator():
    h3 = fixtures.h3()
    bad = LinearOperator(Matrix.diagonal([1, 1, 2]), NIJENHUIS)
    assert not verify_operator(h3, bad).passed
    with pytest.raises(PreconditionError):
        induced_bracket(h3, bad)


def test_nijenhuis_induced_pair_is_compatible():
    for alg, op in (
        (fixtures.h3(), fixtures.h3_nijenhuis()),
        (fixtures.d2().part(1), LinearOperator(Matrix.diagonal([1, 2]), NIJENHUIS)),
    ):
        deformed = induced_bracket(alg, op)
        pair = CompatibleHomLieAlgebra(alg.dim, alg.alpha, alg.bracket, deformed.bracket)
        assert verify_structure(pair).passed


def test_rb_pair_g2a_example():
    g2 = fixtures.g2a(1)
    r = fixtures.g2a_rota_baxter()
    s = rb_companion(r)
    assert s.matrix == Matrix.identity(2) - g2.alpha
    report, induced = rb_pair(g2, r, s)
    assert report.passed
    assert induced is not None
    # Only the operator identities hold for a != 0; the induced brackets
    # inherit the multiplicativity defect of the base bracket.
    sr = verify_structure(induced)
    assert sr.check("hom_jacobi[1]").passed
    assert sr.check("compatibility").passed


def test_rb_pair_same_operator_weight_zero():
    # With R = S the pair identity differs from the operator identity by
    # 2*weight*R[x,y], so it reduces to it exactly at weight 0.
    h3 = fixtures.h3()
    r = LinearOperator(Matrix.diagonal([2, 2, 1]), ROTA_BAXTER, F(0))
    assert verify_operator(h3, r).passed
    report, induced = rb_pair(h3, r, r)
    assert report.passed
    assert induced is not None


def test_rb_pair_same_operator_nonzero_weight_defect():
    g2 = fixtures.g2a(1)
    r = fixtures.g2a_rota_baxter()
    report, induced = rb_pair(g2, r, r)
    ((pair, defect),) = report.check("pair_compatibility").witnesses
    assert pair == (0, 1)
    lam = r.weight
    expected = tuple(2 * lam * x for x in r.matrix.apply(g2.bracket_of((F(1), F(0)), (F(0), F(1)))))
    assert defect == expected
    assert induced is None


def test_rb_pair_zero_operators():
    g2 = fixtures.g2a(1)
    zero1 = LinearOperator(Matrix.zero(2, 2), ROTA_BAXTER, F(0))
    zero2 = LinearOperator(Matrix.zero(2, 2), ROTA_BAXTER, F(0))
    report, induced = rb_pair(g2, zero1, zero2)
    assert report.passed
    assert induced.bracket1.is_zero() and induced.bracket2.is_zero()


def test_rb_pair_weight_mismatch():
    g2 = fixtures.g2a(1)
    r = fixtures.g2a_rota_baxter()
    other = LinearOperator(r.matrix, ROTA_BAXTER, F(0))
    with pytest.raises(UsageError):
        rb_pair(g2, r, other)


def test_rb_companion_cases():
    r0 = LinearOperator(Matrix.diagonal([1, 2]), ROTA_BAXTER, F(0))
    assert rb_companion(r0).matrix == -r0.matrix
    r = fixtures.g2a_rota_baxter()
    assert rb_companion(rb_companion(r)) == r
    with pytest.raises(UsageError):
        rb_companion(fixtures.g4a_nijenhuis())


def test_rb_pair_with_companion_passes_when_rb_does():
    for a in (0, 1, 2):
        g2 = fixtures.g2a(a)
        r = fixtures.g2a_rota_baxter()
        assert verify_operator(g2, r).passed
        report, _ = rb_pair(g2, r, rb_companion(r))
        assert report.passed
    h3 = fixtures.h3()
    r0 = LinearOperator(Matrix.diagonal([2, 2, 1]), ROTA_BAXTER, F(0))
    report, induced = rb_pair(h3, r0, rb_companion(r0))
    assert report.passed
    assert verify_structure(induced).passed


def test_random_nondiagonal_nijenhuis_family_on_h3():
    # On the Heisenberg bracket the Nijenhuis condition pins the last column
    # to a multiple of e3 and relates the upper-left minor to the trace:
    # det2(N) = (n11 + n22) n33 - n33^2, with the third row otherwise free.
    rng = random.Random(23)
    h3 = fixtures.h3()
    built = 0
    while built < 5:
        n12, n21, n22, n33 = (rand_frac(rng) for _ in range(4))
        if n22 == n33:
            continue
        n11 = (n12 * n21 + n22 * n33 - n33 * n33) / (n22 - n33)
        n31, n32 = rand_frac(rng), rand_frac(rng)
        matrix = Matrix.from_rows([[n11, n12, 0], [n21, n22, 0], [n31, n32, n33]])
        op = LinearOperator(matrix, NIJENHUIS)
        assert verify_operator(h3, op).passed
        deformed = induced_bracket(h3, op)
        pair = CompatibleHomLieAlgebra(3, h3.alpha, h3.bracket, deformed.bracket)
        assert verify_structure(pair).passed
        built += 1


def test_operator_on_compatible_carrier_checks_both_brackets():
    d2 = fixtures.d2()
    report = verify_operator(d2, fixtures.d2_nijenhuis())
    names = [c.name for c in report.checks]
    assert "nijenhuis_identity[1]" in names and "nijenhuis_identity[2]" in names
    assert report.passed
