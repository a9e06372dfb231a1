"""O-operators (relative Rota-Baxter operators) and their controlling cohomology.

An O-operator is a linear map ``T: V -> g`` with
``[Tu, Tv] = T(rho(Tu)v - rho(Tv)u)``. It induces a pre-Lie product
``u . v = rho(Tu)v`` on V, the sub-adjacent Lie algebra ``V^c`` and a
representation ``rho_bar`` of ``V^c`` on g; the Chevalley-Eilenberg
cohomology of that representation governs deformations of T.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cochains import Cochain, basis_keys
from .lie import (
    LieAlgebra,
    Representation,
    adjoint_rep,
)
from .linalg import (
    ZERO,
    Matrix,
    axpy,
    column_space_basis,
    is_zero_vec,
    kernel_basis,
    poly_equal,
    poly_matmul,
    rank,
    solve,
    unit,
    vec,
    vsub,
    zeros,
)
from .prelie import PreLie


@dataclass(frozen=True)
class OOperator:
    """A linear map T: V -> g; ``matrix`` is dim g x dimV, column j = T(e_j)."""

    rep: Representation
    matrix: Matrix

    def __post_init__(self):
        if (self.matrix.rows, self.matrix.cols) != (self.rep.algebra.dim, self.rep.dimV):
            raise ValueError(
                f"T must be {self.rep.algebra.dim}x{self.rep.dimV}, "
                f"got {self.matrix.rows}x{self.matrix.cols}"
            )

    @property
    def algebra(self) -> LieAlgebra:
        return self.rep.algebra

    def image(self, j: int) -> tuple:
        return self.matrix.column(j)

    def cochain(self) -> Cochain:
        return Cochain.from_matrix(self.rep, self.matrix)


def _as_map(T) -> Matrix:
    if isinstance(T, OOperator):
        return T.matrix
    if isinstance(T, Cochain):
        return T.to_matrix()
    return T


def operator_defect(rep: Representation, T: Matrix, i: int, j: int) -> tuple:
    """[Te_i, Te_j] - T(rho(Te_i)e_j - rho(Te_j)e_i)."""
    L = rep.algebra
    Ti, Tj = T.column(i), T.column(j)
    inner = vsub(rep.act_basis(Ti, j), rep.act_basis(Tj, i))
    return vsub(L.bracket(Ti, Tj), T.apply(inner))


def ooperator_violations(rep: Representation, matrix: Matrix) -> list[dict]:
    """Basis pairs (1-based) where the O-operator identity fails."""
    if (matrix.rows, matrix.cols) != (rep.algebra.dim, rep.dimV):
        raise ValueError(
            f"T must be {rep.algebra.dim}x{rep.dimV}, got {matrix.rows}x{matrix.cols}"
        )
    out = []
    for i in range(rep.dimV):
        for j in range(i + 1, rep.dimV):
            d = operator_defect(rep, matrix, i, j)
            if not is_zero_vec(d):
                out.append({"pair": (i + 1, j + 1), "defect": d})
    return out


def is_ooperator(rep: Representation, matrix: Matrix) -> bool:
    return not ooperator_violations(rep, matrix)


def is_rota_baxter(L: LieAlgebra, R: Matrix) -> bool:
    """Weight-zero Rota-Baxter identity [Rx, Ry] = R([Rx, y] + [x, Ry])."""
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            Ri, Rj = R.column(i), R.column(j)
            lhs = L.bracket(Ri, Rj)
            inner = [ZERO] * n
            axpy(inner, 1, L.bracket(Ri, unit(n, j)))
            axpy(inner, 1, L.bracket(unit(n, i), Rj))
            if lhs != R.apply(tuple(inner)):
                return False
    return True


def require_ooperator(T: OOperator) -> None:
    bad = ooperator_violations(T.rep, T.matrix)
    if bad:
        pairs = [v["pair"] for v in bad]
        raise ValueError(f"not an O-operator: identity fails on basis pairs {pairs}")


# --- induced structures --------------------------------------------------------

def induced_prelie(T: OOperator) -> PreLie:
    """u ._T v = rho(Tu) v."""
    rep = T.rep
    m = rep.dimV
    product = {
        (a, b): rep.act_basis(T.image(a), b)
        for a in range(m)
        for b in range(m)
    }
    return PreLie(m, product)


def sub_adjacent_lie(T: OOperator) -> LieAlgebra:
    """V^c = (V, [u, v]_T) with [u, v]_T = rho(Tu)v - rho(Tv)u."""
    require_ooperator(T)
    rep = T.rep
    m = rep.dimV
    structure = {
        (a, b): vsub(rep.act_basis(T.image(a), b), rep.act_basis(T.image(b), a))
        for a in range(m)
        for b in range(a + 1, m)
    }
    return LieAlgebra(m, structure)


def rho_bar(T: OOperator) -> Representation:
    """rho_bar(u)(x) = [Tu, x] + T rho(x)(u), a representation of V^c on g."""
    Vc = sub_adjacent_lie(T)
    rep = T.rep
    L = rep.algebra
    n = L.dim
    mats = []
    for a in range(rep.dimV):
        Ta = T.image(a)
        cols = []
        for b in range(n):
            eb = unit(n, b)
            col = [ZERO] * n
            axpy(col, 1, L.bracket(Ta, eb))
            axpy(col, 1, T.matrix.apply(rep.rho[b].column(a)))
            cols.append(tuple(col))
        mats.append(Matrix.from_columns(cols, rows=n))
    return Representation(Vc, n, tuple(mats))


# --- cohomology ------------------------------------------------------------

def coboundary(T: OOperator, f: Cochain) -> Cochain:
    """Chevalley-Eilenberg coboundary of V^c with coefficients in (g, rho_bar).

    Evaluated term by term from the explicit three-sum formula, independently
    of the graded bracket.
    """
    rep = T.rep
    L = rep.algebra
    n = L.dim
    k = f.degree
    Tm = T.matrix
    out = {}
    for key in basis_keys(rep.dimV, k + 1):
        acc = [ZERO] * n
        for i in range(k + 1):
            s = 1 if i % 2 == 0 else -1  # (-1)^{(i+1)+1} with 1-based i+1
            ui = key[i]
            rest = key[:i] + key[i + 1:]
            fv = f.at(rest)
            if is_zero_vec(fv):
                continue
            axpy(acc, s, L.bracket(T.image(ui), fv))
            axpy(acc, s, Tm.apply(rep.act_basis(fv, ui)))
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                s = 1 if (i + j) % 2 == 0 else -1
                ui, uj = key[i], key[j]
                w = vsub(rep.act_basis(T.image(ui), uj), rep.act_basis(T.image(uj), ui))
                rest = tuple(key[x] for x in range(k + 1) if x != i and x != j)
                for a, c in enumerate(w):
                    if c:
                        axpy(acc, s * c, f.at((a, *rest)))
        out[key] = tuple(acc)
    return Cochain(k + 1, rep, out)


def coboundary_matrix(T: OOperator, k: int) -> Matrix:
    """Matrix of the coboundary from degree k to k+1 in the coordinate bases."""
    rep = T.rep
    n = rep.algebra.dim
    rows = len(basis_keys(rep.dimV, k + 1)) * n
    cols = []
    for key in basis_keys(rep.dimV, k):
        for b in range(n):
            f = Cochain(k, rep, {key: unit(n, b)})
            cols.append(coboundary(T, f).to_vector())
    if not cols:
        return Matrix.zero(rows, 0)
    return Matrix.from_columns(cols, rows=rows)


@dataclass(frozen=True)
class CohomologyReport:
    degree: int
    dimZ: int
    dimB: int
    dimH: int
    cocycle_basis: tuple = field(repr=False)
    coboundary_basis: tuple = field(repr=False)


def cohomology(T: OOperator, k: int) -> CohomologyReport:
    """Dimensions and bases of Z^k, B^k and H^k = Z^k / B^k."""
    rep = T.rep
    if not 0 <= k <= rep.dimV:
        raise ValueError(f"degree {k} outside 0..{rep.dimV}")
    require_ooperator(T)
    Dk = coboundary_matrix(T, k)
    Z = kernel_basis(Dk)
    if k == 0:
        B = []
    else:
        B = column_space_basis(coboundary_matrix(T, k - 1))
    return CohomologyReport(
        degree=k,
        dimZ=len(Z),
        dimB=len(B),
        dimH=len(Z) - len(B),
        cocycle_basis=tuple(Cochain.from_vector(rep, k, z) for z in Z),
        coboundary_basis=tuple(Cochain.from_vector(rep, k, b) for b in B),
    )


def is_cocycle(T: OOperator, f: Cochain) -> bool:
    return coboundary(T, f).is_zero()


def is_coboundary(T: OOperator, f: Cochain) -> bool:
    """Whether f lies in the image of the coboundary from degree k-1."""
    if f.degree == 0:
        return f.is_zero()
    return solve(coboundary_matrix(T, f.degree - 1), f.to_vector()) is not None


# --- infinitesimal deformations and Nijenhuis elements ---------------------------

def infinitesimal_deformation_violations(T: OOperator, frkT) -> dict:
    """Failures of the t^1 and t^2 coefficient equations of T + t*frkT."""
    rep = T.rep
    L = rep.algebra
    Tm = T.matrix
    S = _as_map(frkT)
    first, second = [], []
    for i in range(rep.dimV):
        for j in range(i + 1, rep.dimV):
            Ti, Tj, Si, Sj = Tm.column(i), Tm.column(j), S.column(i), S.column(j)
            lhs = [ZERO] * L.dim
            axpy(lhs, 1, L.bracket(Ti, Sj))
            axpy(lhs, 1, L.bracket(Si, Tj))
            axpy(lhs, -1, Tm.apply(vsub(rep.act_basis(Si, j), rep.act_basis(Sj, i))))
            axpy(lhs, -1, S.apply(vsub(rep.act_basis(Ti, j), rep.act_basis(Tj, i))))
            if not is_zero_vec(lhs):
                first.append((i + 1, j + 1))
            if not is_zero_vec(operator_defect(rep, S, i, j)):
                second.append((i + 1, j + 1))
    return {"t1": first, "t2": second}


def is_infinitesimal_deformation(T: OOperator, frkT) -> bool:
    """Whether T + t*frkT is an O-operator for every t."""
    bad = infinitesimal_deformation_violations(T, frkT)
    return not bad["t1"] and not bad["t2"]


def nijenhuis_element_violations(T: OOperator, x: Sequence) -> dict:
    rep = T.rep
    L = rep.algebra
    n = L.dim
    x = vec(x)
    ad_x = [L.bracket(x, unit(n, i)) for i in range(n)]
    cond1 = [
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i, n)
        if not is_zero_vec(L.bracket(ad_x[i], ad_x[j]))
    ]
    rho_x = rep.matrix(x)
    cond2 = [i + 1 for i in range(n) if not (rep.matrix(ad_x[i]) @ rho_x).is_zero()]
    cond3 = []
    for a in range(rep.dimV):
        inner = [ZERO] * n
        axpy(inner, 1, L.bracket(T.image(a), x))
        axpy(inner, 1, T.matrix.apply(rho_x.column(a)))
        if not is_zero_vec(L.bracket(x, tuple(inner))):
            cond3.append(a + 1)
    return {"nij1": cond1, "nij2": cond2, "nij3": cond3}


def is_nijenhuis_element(T: OOperator, x: Sequence) -> bool:
    bad = nijenhuis_element_violations(T, x)
    return not (bad["nij1"] or bad["nij2"] or bad["nij3"])


def trivial_deformation_generator(T: OOperator, x: Sequence) -> Cochain:
    """d_rho_bar x for a Nijenhuis element x; T + t * (d x) is a trivial deformation."""
    if not is_nijenhuis_element(T, x):
        raise ValueError("x is not a Nijenhuis element of T")
    return coboundary(T, Cochain.element(T.rep, x))


def same_cohomology_class(T: OOperator, frkT1, frkT2) -> bool:
    """Whether two 1-cocycles differ by d_rho_bar x for some x in g."""
    f1 = frkT1 if isinstance(frkT1, Cochain) else Cochain.from_matrix(T.rep, frkT1)
    f2 = frkT2 if isinstance(frkT2, Cochain) else Cochain.from_matrix(T.rep, frkT2)
    for name, f in (("first", f1), ("second", f2)):
        if f.degree != 1 or not is_cocycle(T, f):
            raise ValueError(f"{name} argument is not a 1-cocycle")
    return is_coboundary(T, f2 - f1)


# --- homomorphisms -------------------------------------------------------------

def _poly(m) -> list[Matrix]:
    if isinstance(m, Matrix):
        return [m]
    return list(m)


def homomorphism_violations(T_src, T_dst, phi_g, phi_V, rep: Representation | None = None) -> dict:
    """Check (phi_g, phi_V) as a homomorphism from T_src to T_dst.

    Every argument may be a Matrix or a list of coefficient matrices of a
    polynomial in a formal parameter t (t^0 first); identities are then
    compared coefficient by coefficient. Returned lists give the offending
    basis elements (1-based) or powers of t.
    """
    if rep is None:
        rep = T_src.rep if isinstance(T_src, OOperator) else T_dst.rep
    L = rep.algebra
    n = L.dim
    Ts = _poly(_as_map(T_src) if isinstance(T_src, (OOperator, Cochain)) else T_src)
    Td = _poly(_as_map(T_dst) if isinstance(T_dst, (OOperator, Cochain)) else T_dst)
    pg, pv = _poly(phi_g), _poly(phi_V)

    lie_bad = []
    for i in range(n):
        for j in range(i + 1, n):
            lhs = [p.apply(L.basis_bracket(i, j)) for p in pg]
            rhs = [zeros(n)] * (2 * len(pg) - 1)
            for a, pa in enumerate(pg):
                for b, pb in enumerate(pg):
                    rhs[a + b] = tuple(x + y for x, y in zip(rhs[a + b], L.bracket(pa.column(i), pb.column(j))))
            lhs = lhs + [zeros(n)] * (len(rhs) - len(lhs))
            if lhs != rhs:
                lie_bad.append((i + 1, j + 1))

    intertwine_bad = poly_equal(poly_matmul(Td, pv), poly_matmul(pg, Ts))

    rep_bad = []
    for i in range(n):
        lhs = [p @ rep.rho[i] for p in pv]
        rho_phi = [rep.matrix(p.column(i)) for p in pg]
        rhs = poly_matmul(rho_phi, pv)
        if poly_equal(lhs, rhs):
            rep_bad.append(i + 1)
    return {"lie_hom": lie_bad, "intertwine": intertwine_bad, "equivariance": rep_bad}


def check_homomorphism(T_src, T_dst, phi_g, phi_V, rep: Representation | None = None) -> bool:
    """Whether (phi_g, phi_V) is a homomorphism of O-operators from T_src to T_dst.

    Conditions: phi_g is a Lie algebra endomorphism, T_dst phi_V = phi_g T_src,
    and phi_V rho(x) = rho(phi_g x) phi_V.
    """
    bad = homomorphism_violations(T_src, T_dst, phi_g, phi_V, rep)
    return not any(bad.values())


def trivializing_maps(T: OOperator, x: Sequence) -> tuple[list[Matrix], list[Matrix]]:
    """(Id + t ad_x, Id + t rho(x)) as polynomial matrices."""
    L = T.algebra
    x = vec(x)
    return (
        [Matrix.identity(L.dim), L.ad(x)],
        [Matrix.identity(T.rep.dimV), T.rep.matrix(x)],
    )


def deformation_poly(T: OOperator, frkT) -> list[Matrix]:
    """T + t*frkT as a polynomial matrix."""
    return [T.matrix, _as_map(frkT)]


# --- Rota-Baxter specialisation --------------------------------------------------

def rota_baxter(L: LieAlgebra, R: Matrix) -> OOperator:
    """A weight-zero Rota-Baxter operator viewed as an O-operator for the adjoint representation."""
    return OOperator(adjoint_rep(L), R)


def rota_baxter_rho_bar(L: LieAlgebra, R: Matrix) -> tuple[Matrix, ...]:
    """ad_{R(x)} - R ad_x on each basis vector x."""
    n = L.dim
    return tuple(L.ad(R.column(i)) - R @ L.ad(unit(n, i)) for i in range(n))


def cohomology_dimensions(T: OOperator) -> list[int]:
    """dim H^k for k = 0..dimV."""
    ranks = [rank(coboundary_matrix(T, k)) for k in range(T.rep.dimV + 1)]
    dims = []
    for k in range(T.rep.dimV + 1):
        dim_c = len(basis_keys(T.rep.dimV, k)) * T.algebra.dim
        dims.append(dim_c - ranks[k] - (ranks[k - 1] if k else 0))
    return dims
