"""Cohomology, obstructions and order-by-order extension of deformations."""

from olab import LieAlgebra, Matrix, OOperator, TruncatedDeformation, adjoint_rep, cohomology, iterate_extension
from olab.deformation import obstruction
from olab.io import to_jsonable as show

L = LieAlgebra.from_brackets(2, {(1, 2): [1, 0]})
rep = adjoint_rep(L)

T = OOperator(rep, Matrix.from_rows([[1, -1], [1, -1]]))
print("(1 -1; 1 -1): dim H^1 =", cohomology(T, 1).dimH, " dim H^2 =", cohomology(T, 2).dimH)

# The zero operator: tau_1 = Id is a 1-cocycle whose obstruction is not exact.
Z = OOperator(rep, Matrix.zero(2, 2))
D = TruncatedDeformation(Z, (Matrix.identity(2),))
print("zero operator, tau_1 = Id: Ob(e1, e2) =", show(obstruction(D).at((0, 1))))
report = iterate_extension(D, 4)
print("  extends to order 4:", report.success, "| stopped at order", report.reached, "| dim H^2 =", report.dimH2)

T = OOperator(rep, Matrix.from_rows([[0, 1], [0, 1]]))
for z in cohomology(T, 1).cocycle_basis:
    report = iterate_extension(TruncatedDeformation(T, (z.to_matrix(),)), 4)
    print("(0 1; 0 1), tau_1 =", show(z.to_matrix()), "->",
          "reaches order 4" if report.success else f"obstructed after order {report.reached}")
