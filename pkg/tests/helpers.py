"""Shared test utilities: seeded random data and naive reference oracles.

The naive oracles deliberately use different algorithms from the library
(factorial permutation enumeration instead of shuffle combinations, direct
cyclic sums instead of coefficient tables) so that agreement is meaningful.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from homlie import Cochain, HomLieAlgebra, Matrix, hom_cochain_basis
from homlie.cochains import increasing_tuples
from homlie.linalg import basis_vector, vec_add, vec_scale, zero_vector


def rand_frac(rng, span=3):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_vector(rng, n, span=3):
    return tuple(rand_frac(rng, span) for _ in range(n))


def rand_matrix(rng, rows, cols, span=3):
    return Matrix.from_rows([[rand_frac(rng, span) for _ in range(cols)] for _ in range(rows)])


def rand_skew_bracket(rng, dim, span=2):
    cols = [rand_vector(rng, dim, span) for _ in range(comb(dim, 2))]
    return Matrix.from_columns(cols, dim)


def rand_equivariant_cochain(rng, alpha, beta, arity):
    """Random rational combination of a basis of the equivariant space."""
    basis = hom_cochain_basis(alpha, beta, arity)
    if not basis:
        return None
    out = basis[0].scale(0) if not isinstance(basis[0], Cochain) else Cochain.zero(
        arity, alpha.rows, beta.rows
    )
    for item in basis:
        out = out + item.scale(rand_frac(rng))
    return out


def naive_jacobiator_defects(alg: HomLieAlgebra):
    """Cyclic Jacobi defects on all basis triples, by direct evaluation."""
    out = []
    d = alg.dim
    for (i, j, k) in increasing_tuples(d, 3):
        total = zero_vector(d)
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            inner = alg.bracket_of(basis_vector(d, a), basis_vector(d, b))
            total = vec_add(total, alg.bracket_of(inner, alg.alpha.col(c)))
        out.append(((i, j, k), total))
    return out


def perm_sign(perm) -> int:
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    return -1 if inversions % 2 else 1


def naive_nr_diamond(p: Cochain, q: Cochain, alpha: Matrix) -> Cochain:
    """Insertion product by filtering all permutations for the shuffle shape."""
    d = p.source_dim
    m = p.arity - 1
    n = q.arity - 1
    r = m + n + 1
    alpha_n = alpha.power(n)
    columns = []
    for X in increasing_tuples(d, r):
        args = [basis_vector(d, x) for x in X]
        total = zero_vector(d)
        for perm in itertools.permutations(range(r)):
            head, tail = perm[: n + 1], perm[n + 1 :]
            if any(head[a] > head[a + 1] for a in range(len(head) - 1)):
                continue
            if any(tail[a] > tail[a + 1] for a in range(len(tail) - 1)):
                continue
            inner = q.evaluate([args[t] for t in head])
            rest = [alpha_n.apply(args[t]) for t in tail]
            value = p.evaluate([inner] + rest)
            total = vec_add(total, vec_scale(Fraction(perm_sign(perm)), value))
        columns.append(total)
    return Cochain(r, d, d, Matrix.from_columns(columns, d))


def naive_nr_bracket(p: Cochain, q: Cochain, alpha: Matrix) -> Cochain:
    m = p.arity - 1
    n = q.arity - 1
    first = naive_nr_diamond(p, q, alpha)
    second = naive_nr_diamond(q, p, alpha)
    if (m * n) % 2:
        return first + second
    return first - second
