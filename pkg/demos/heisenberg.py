"""Every element of the Heisenberg algebra is Nijenhuis for every Rota-Baxter operator."""

from fractions import Fraction

from olab import LieAlgebra, Matrix, is_nijenhuis_element, is_rota_baxter
from olab.io import to_jsonable as show
from olab.ooperator import cohomology_dimensions, rota_baxter, trivial_deformation_generator

H = LieAlgebra.from_brackets(3, {(1, 2): [0, 0, 1]})
r11, r12, r21, r22 = Fraction(2), Fraction(1), Fraction(1), Fraction(1)
r33 = (r11 * r22 - r21 * r12) / (r11 + r22)
R = Matrix.from_rows([[r11, r12, 0], [r21, r22, 0], [5, -3, r33]])
print("R =", show(R), "Rota-Baxter:", is_rota_baxter(H, R))

T = rota_baxter(H, R)
x = (Fraction(1), Fraction(-2), Fraction(7))
print("x =", show(x), "Nijenhuis:", is_nijenhuis_element(T, x))
print("d x =", show(trivial_deformation_generator(T, x).to_matrix()))
print("dim H^k, k = 0..3:", cohomology_dimensions(T))
