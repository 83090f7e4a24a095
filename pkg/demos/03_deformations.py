"""Deformation theory end to end: generators, triviality, obstructions.

A pair of arity-2 cochains deforms both brackets linearly in t.  Six exact
bracket conditions decide whether the deformed family stays compatible; a
Nijenhuis operator manufactures generators that always pass and whose
deformations are equivalent to the undeformed structure through id + tN.
Order-p families are checked per order, their obstruction cochain is closed,
and extending one more order is an exact linear solve.
"""

from homlie import (
    Cochain,
    LinearGenerator,
    OrderPDeformation,
    check_linear_equivalence,
    check_linear_generator,
    infinitesimal_class,
    is_extensible,
    obstruction,
    trivial_deformation_from_nijenhuis,
    verify_order_p,
)
from homlie import fixtures

c = fixtures.compatible_h3()
n_op = fixtures.h3_nijenhuis()
print(f"carrier dimension {c.dim}; Nijenhuis operator diag(2,1,1)")

gen = trivial_deformation_from_nijenhuis(c, n_op)
report = check_linear_generator(c, gen)
print(f"generator from N: cocycle part vanishes: {report.is_cocycle};"
      f" structure part vanishes: {report.is_compatible_structure}")

zero = LinearGenerator(Cochain.zero(2, 3, 3), Cochain.zero(2, 3, 3))
equiv = check_linear_equivalence(c, gen, zero, n_op.matrix)
print(f"equivalent to the undeformed structure via id + tN: {equiv.equivalent}")
print(f"difference is the coboundary of N: {equiv.coboundary_shift}")
coords = infinitesimal_class(c, gen)
print(f"class in degree-2 cohomology: ({', '.join(str(x) for x in coords)}) (trivial)\n")

order1 = OrderPDeformation.from_generator(c, gen)
print(f"order-1 family verifies: {verify_order_p(order1).passed}")
ob = obstruction(order1)
print(f"obstruction cochain vanishes identically: {ob.cochain.is_zero()}")

pair = is_extensible(order1)
print(f"extensible to order 2: {pair is not None}")
order2 = order1.extended(*pair)
print(f"extended family verifies at order 2: {verify_order_p(order2).passed}")

truncated = order2.truncate(1)
again = is_extensible(truncated)
print(f"truncating and re-extending succeeds: {again is not None}")
