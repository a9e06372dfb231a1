"""Skew-symmetric r-matrices, their cobracket, dual cohomology and trivial deformations."""

import itertools

from olab import LieAlgebra, MultiVector, cobracket, dual_bracket, is_nijenhuis_element_r, is_rmatrix
from olab import check_weak_homomorphism, rmatrix_cohomology, schouten_bracket, sharp, validate_bialgebra
from olab.io import multivector_json, to_jsonable as show
from olab.rmatrix import trivializing_maps_r

sl2 = LieAlgebra.from_brackets(3, {(1, 2): [0, 2, 0], (1, 3): [0, 0, -2], (2, 3): [1, 0, 0]})
for name, terms in (("h^e", {(1, 2): 1}), ("e^f", {(2, 3): 1})):
    print(f"sl2, r = {name}: r-matrix = {is_rmatrix(MultiVector.from_terms(sl2, 2, terms))}")

r = MultiVector.from_terms(sl2, 2, {(1, 2): 1})
print("r^# =", show(sharp(r)))
print("dual brackets:", [(i + 1, j + 1, show(v)) for (i, j), v in dual_bracket(r).structure.items() if any(v)])
print("Lie bialgebra:", validate_bialgebra(sl2, cobracket(r))["valid"])
print("dim H^k(g*), k = 0..3:", [rmatrix_cohomology(r, k).dimH for k in range(4)])

# [e1, e2] = e1 with a central e3; r = e2 ^ e3
g = LieAlgebra.from_brackets(3, {(1, 2): [1, 0, 0]})
r = MultiVector.from_terms(g, 2, {(2, 3): 1})
for x in itertools.product((0, 1), repeat=3):
    if any(x) and is_nijenhuis_element_r(r, x):
        kappa = schouten_bracket(r, MultiVector.from_vector(g, x))
        phi, psi = trivializing_maps_r(g, x)
        print("x =", x, "kappa = [r, x] =", multivector_json(kappa),
              "| (Id + t ad_x, Id - t ad_x) trivializes:", check_weak_homomorphism([r, kappa], r, phi, psi))
