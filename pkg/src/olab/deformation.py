"""Order-n deformations T_t = T + tau_1 t + ... + tau_n t^n of an O-operator.

The order-(n+1) equation splits as ``Ob + d tau_{n+1} = 0``, where the
obstruction ``Ob`` depends on tau_1..tau_n only; extension is therefore a
linear solve against the degree-1 coboundary matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cochains import Cochain, graded_bracket
from .linalg import ZERO, Matrix, axpy, is_zero_vec, kernel_basis, solve, vsub
from .ooperator import (
    OOperator,
    coboundary,
    coboundary_matrix,
    cohomology,
    is_nijenhuis_element,
)


@dataclass(frozen=True)
class TruncatedDeformation:
    base: OOperator
    taus: tuple = ()

    def __post_init__(self):
        taus = tuple(self.taus)
        shape = (self.base.matrix.rows, self.base.matrix.cols)
        for k, t in enumerate(taus, start=1):
            if (t.rows, t.cols) != shape:
                raise ValueError(f"tau_{k} is {t.rows}x{t.cols}, expected {shape[0]}x{shape[1]}")
        object.__setattr__(self, "taus", taus)

    @property
    def order(self) -> int:
        return len(self.taus)

    def coefficient(self, i: int) -> Matrix:
        """tau_i, with tau_0 = T."""
        return self.base.matrix if i == 0 else self.taus[i - 1]

    def extended(self, tau: Matrix) -> "TruncatedDeformation":
        return TruncatedDeformation(self.base, self.taus + (tau,))


def _pair_term(rep, A: Matrix, B: Matrix, i: int, j: int) -> list:
    """[A e_i, B e_j] - A(rho(B e_i) e_j - rho(B e_j) e_i)."""
    L = rep.algebra
    acc = list(L.bracket(A.column(i), B.column(j)))
    inner = vsub(rep.act_basis(B.column(i), j), rep.act_basis(B.column(j), i))
    axpy(acc, -1, A.apply(inner))
    return acc


def order_equation(D: TruncatedDeformation, k: int, i: int, j: int, lo: int = 0) -> tuple:
    """Sum over a + b = k (a, b >= lo) of the pair term on (e_i, e_j)."""
    rep = D.base.rep
    acc = [ZERO] * rep.algebra.dim
    for a in range(lo, k - lo + 1):
        axpy(acc, 1, _pair_term(rep, D.coefficient(a), D.coefficient(k - a), i, j))
    return tuple(acc)


def validate_order_n(D: TruncatedDeformation) -> list[dict]:
    """Every (k, basis pair) at which the order-k coefficient equation fails, k = 0..n."""
    rep = D.base.rep
    out = []
    for k in range(D.order + 1):
        for i in range(rep.dimV):
            for j in range(i + 1, rep.dimV):
                v = order_equation(D, k, i, j)
                if not is_zero_vec(v):
                    out.append({"order": k, "pair": (i + 1, j + 1), "defect": v})
    return out


def _require_valid(D: TruncatedDeformation) -> None:
    bad = validate_order_n(D)
    if bad:
        raise ValueError(
            "not an order-%d deformation; fails at %s"
            % (D.order, [(b["order"], b["pair"]) for b in bad])
        )


def infinitesimal(D: TruncatedDeformation) -> Cochain:
    """tau_1 as a 1-cochain (zero for the order-0 deformation)."""
    _require_valid(D)
    if D.order == 0:
        return Cochain.zero(D.base.rep, 1)
    return Cochain.from_matrix(D.base.rep, D.taus[0])


def obstruction_direct(D: TruncatedDeformation) -> Cochain:
    """Ob(u, v) = sum over i + j = n+1, i, j >= 1 of the pair terms."""
    rep = D.base.rep
    n = D.order
    out = {}
    for i in range(rep.dimV):
        for j in range(i + 1, rep.dimV):
            out[(i, j)] = order_equation(D, n + 1, i, j, lo=1)
    return Cochain(2, rep, out)


def obstruction_bracket(D: TruncatedDeformation) -> Cochain:
    """Ob = -1/2 sum over i + j = n+1, i, j >= 1 of ⟦tau_i, tau_j⟧."""
    rep = D.base.rep
    n = D.order
    total = Cochain.zero(rep, 2)
    for i in range(1, n + 1):
        j = n + 1 - i
        if 1 <= j <= n:
            total = total + graded_bracket(
                Cochain.from_matrix(rep, D.coefficient(i)),
                Cochain.from_matrix(rep, D.coefficient(j)),
            )
    return total.scale(Fraction(-1, 2))


def obstruction(D: TruncatedDeformation) -> Cochain:
    _require_valid(D)
    ob = obstruction_direct(D)
    other = obstruction_bracket(D)
    if ob != other:  # pragma: no cover - would signal an internal bug
        raise AssertionError("obstruction routes disagree")
    return ob


@dataclass(frozen=True)
class Extension:
    tau: Matrix
    deformation: TruncatedDeformation
    kernel: tuple = field(repr=False)  # 1-cocycles; tau + any combination also extends


def extend(D: TruncatedDeformation) -> Extension | None:
    """Solve Ob = -d tau_{n+1}; None when the obstruction class is nonzero."""
    ob = obstruction(D)
    T = D.base
    D1 = coboundary_matrix(T, 1)
    x = solve(D1, tuple(-c for c in ob.to_vector()))
    if x is None:
        return None
    tau = Cochain.from_vector(T.rep, 1, x).to_matrix()
    kernel = tuple(Cochain.from_vector(T.rep, 1, z).to_matrix() for z in kernel_basis(D1))
    return Extension(tau, D.extended(tau), kernel)


@dataclass(frozen=True)
class ExtensionReport:
    target: int
    reached: int
    success: bool
    deformation: TruncatedDeformation
    dimH2: int
    obstruction: Cochain | None = None
    rigidity: dict | None = None


def rigidity_witness_check(T: OOperator, elements: Sequence[Sequence]) -> dict:
    """Whether every basis 1-cocycle lies in the span of d x for the supplied x.

    This is a span test: it certifies Z^1 ⊆ span d(elements), which combined
    with the elements being Nijenhuis is the data the rigidity criterion needs
    when the images d x already fill Z^1 one-for-one.
    """
    Z = cohomology(T, 1).cocycle_basis
    images = [coboundary(T, Cochain.element(T.rep, x)).to_vector() for x in elements]
    nij = [is_nijenhuis_element(T, x) for x in elements]
    if images:
        M = Matrix.from_columns(images, rows=len(images[0]))
        covered = [solve(M, z.to_vector()) is not None for z in Z]
    else:
        covered = [z.is_zero() for z in Z]
    return {
        "dimZ1": len(Z),
        "elements_nijenhuis": nij,
        "cocycles_covered": covered,
        "all_covered": all(covered) and all(nij),
    }


def iterate_extension(D: TruncatedDeformation, target: int, witnesses: Sequence | None = None) -> ExtensionReport:
    """Extend order by order up to ``target`` or until a nonzero obstruction class."""
    _require_valid(D)
    T = D.base
    dimH2 = cohomology(T, 2).dimH if T.rep.dimV >= 2 else 0
    rigidity = rigidity_witness_check(T, witnesses) if witnesses is not None else None
    current = D
    while current.order < target:
        step = extend(current)
        if step is None:
            return ExtensionReport(target, current.order, False, current, dimH2,
                                   obstruction_direct(current), rigidity)
        current = step.deformation
    return ExtensionReport(target, current.order, True, current, dimH2, None, rigidity)
