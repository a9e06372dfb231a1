"""Rota-Baxter operators on the 2-dim algebra [e1, e2] = e1 and their Nijenhuis elements."""

import itertools
from fractions import Fraction

from olab import LieAlgebra, Matrix, is_nijenhuis_element, is_rota_baxter
from olab.io import to_jsonable as show
from olab.ooperator import rota_baxter, trivial_deformation_generator

L = LieAlgebra.from_brackets(2, {(1, 2): [1, 0]})

print("Rota-Baxter operators with entries in {-1, 0, 1}:")
for a in itertools.product((-1, 0, 1), repeat=4):
    R = Matrix.from_rows([a[:2], a[2:]])
    if is_rota_baxter(L, R):
        print("  ", show(R))

T = rota_baxter(L, Matrix.from_rows([[1, -1], [1, -1]]))
print("\nR = (1 -1; 1 -1): e1 + e2 is Nijenhuis:", is_nijenhuis_element(T, (1, 1)))

T = rota_baxter(L, Matrix.from_rows([[0, 2], [0, Fraction(1, 3)]]))
x = (Fraction(5), 0)
print("R = (0 2; 0 1/3): 5 e1 is Nijenhuis:", is_nijenhuis_element(T, x))
print("generator of the trivial deformation:", show(trivial_deformation_generator(T, x).to_matrix()))
