"""Lie algebras by structure constants, and their representations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import (
    ZERO,
    Matrix,
    axpy,
    is_zero_vec,
    unit,
    vec,
    vsub,
    zeros,
)


@dataclass(frozen=True)
class LieAlgebra:
    """A Lie algebra on K^dim given by [e_i, e_j] for i < j (0-based internally).

    ``structure`` maps ``(i, j)`` with ``i < j`` to the coefficient vector of
    ``[e_i, e_j]``. Missing pairs bracket to zero.
    """

    dim: int
    structure: Mapping = field(default_factory=dict)
    _table: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        table = [[zeros(self.dim)] * self.dim for _ in range(self.dim)]
        clean = {}
        for (i, j), value in self.structure.items():
            if not (0 <= i < j < self.dim):
                raise ValueError(f"structure key {(i, j)} must satisfy 0 <= i < j < {self.dim}")
            v = vec(value)
            if len(v) != self.dim:
                raise ValueError(f"bracket [{i},{j}] has {len(v)} coefficients, expected {self.dim}")
            if not is_zero_vec(v):
                clean[(i, j)] = v
            table[i][j] = v
            table[j][i] = tuple(-x for x in v)
        object.__setattr__(self, "structure", dict(sorted(clean.items())))
        object.__setattr__(self, "_table", tuple(tuple(r) for r in table))

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping) -> "LieAlgebra":
        """Build from 1-based pairs, e.g. ``{(1, 2): [1, 0]}`` for [e1,e2]=e1."""
        return cls(dim, {(i - 1, j - 1): v for (i, j), v in brackets.items()})

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls(dim, {})

    def basis_bracket(self, i: int, j: int) -> tuple:
        return self._table[i][j]

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple:
        acc = [ZERO] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._table[i]
            for j, b in enumerate(y):
                if b and i != j:
                    axpy(acc, a * b, row[j])
        return tuple(acc)

    def ad(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of ad_x, columns are ad_x(e_j)."""
        return Matrix.from_columns([self.bracket(x, unit(self.dim, j)) for j in range(self.dim)], rows=self.dim)

    def is_abelian(self) -> bool:
        return not self.structure


@dataclass(frozen=True)
class Representation:
    """rho: g -> gl(V), stored as one dimV x dimV matrix per basis vector of g."""

    algebra: LieAlgebra
    dimV: int
    rho: tuple

    def __post_init__(self):
        rho = tuple(self.rho)
        if len(rho) != self.algebra.dim:
            raise ValueError(f"need {self.algebra.dim} matrices, got {len(rho)}")
        for k, m in enumerate(rho):
            if (m.rows, m.cols) != (self.dimV, self.dimV):
                raise ValueError(f"rho(e_{k + 1}) is {m.rows}x{m.cols}, expected {self.dimV}x{self.dimV}")
        object.__setattr__(self, "rho", rho)

    def matrix(self, x: Sequence[Fraction]) -> Matrix:
        """rho(x) for a general element x of g."""
        entries = [ZERO] * (self.dimV * self.dimV)
        for k, c in enumerate(x):
            if c:
                axpy(entries, c, self.rho[k].entries)
        return Matrix(self.dimV, self.dimV, tuple(entries))

    def act(self, x: Sequence[Fraction], v: Sequence[Fraction]) -> tuple:
        acc = [ZERO] * self.dimV
        for k, c in enumerate(x):
            if c:
                axpy(acc, c, self.rho[k].apply(v))
        return tuple(acc)

    def act_basis(self, x: Sequence[Fraction], j: int) -> tuple:
        """rho(x) e_j."""
        acc = [ZERO] * self.dimV
        for k, c in enumerate(x):
            if c:
                axpy(acc, c, self.rho[k].column(j))
        return tuple(acc)


# --- validators -------------------------------------------------------------

def jacobi_violations(L: LieAlgebra) -> list[dict]:
    out = []
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = unit(n, i), unit(n, j), unit(n, k)
                s = [ZERO] * n
                axpy(s, 1, L.bracket(L.basis_bracket(i, j), ek))
                axpy(s, 1, L.bracket(L.basis_bracket(j, k), ei))
                axpy(s, 1, L.bracket(L.basis_bracket(k, i), ej))
                if not is_zero_vec(s):
                    out.append({"triple": (i + 1, j + 1, k + 1), "jacobiator": tuple(s)})
    return out


def validate_lie(L: LieAlgebra) -> list[dict]:
    """Basis triples (1-based) on which the Jacobi identity fails; empty means valid."""
    return jacobi_violations(L)


def validate_rep(R: Representation) -> list[dict]:
    """Pairs (1-based) with rho([e_i, e_j]) != [rho(e_i), rho(e_j)]."""
    L = R.algebra
    out = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = R.matrix(L.basis_bracket(i, j))
            rhs = R.rho[i].commutator(R.rho[j])
            if lhs != rhs:
                out.append({"pair": (i + 1, j + 1), "defect": lhs - rhs})
    return out


# --- standard representations and constructions -------------------------------

def adjoint_rep(L: LieAlgebra) -> Representation:
    return Representation(L, L.dim, tuple(L.ad(unit(L.dim, i)) for i in range(L.dim)))


def coadjoint_rep(L: LieAlgebra) -> Representation:
    """ad*_x = -(ad_x)^T in the dual basis."""
    return Representation(L, L.dim, tuple(-(L.ad(unit(L.dim, i)).T) for i in range(L.dim)))


def trivial_rep(L: LieAlgebra, dimV: int) -> Representation:
    return Representation(L, dimV, tuple(Matrix.zero(dimV, dimV) for _ in range(L.dim)))


def semidirect_product(R: Representation) -> LieAlgebra:
    """g ⋉_rho V on g ⊕ V; the g-basis comes first, then the V-basis.

    [x + u, y + v] = [x, y] + rho(x)v - rho(y)u.
    """
    L = R.algebra
    n, m = L.dim, R.dimV
    structure = {}
    for i in range(n):
        for j in range(i + 1, n):
            structure[(i, j)] = L.basis_bracket(i, j) + zeros(m)
        for b in range(m):
            # [e_i, f_b] = rho(e_i) f_b
            structure[(i, n + b)] = zeros(n) + R.rho[i].column(b)
    return LieAlgebra(n + m, structure)


def _nijenhuis_defect(L: LieAlgebra, N: Matrix, i: int, j: int) -> tuple:
    ei, ej = unit(L.dim, i), unit(L.dim, j)
    Nei, Nej = N.apply(ei), N.apply(ej)
    lhs = L.bracket(Nei, Nej)
    inner = [ZERO] * L.dim
    axpy(inner, 1, L.bracket(Nei, ej))
    axpy(inner, 1, L.bracket(ei, Nej))
    axpy(inner, -1, N.apply(L.basis_bracket(i, j)))
    return vsub(lhs, N.apply(tuple(inner)))


def nijenhuis_operator_violations(L: LieAlgebra, N: Matrix) -> list[tuple]:
    if (N.rows, N.cols) != (L.dim, L.dim):
        raise ValueError(f"N must be {L.dim}x{L.dim}")
    return [
        (i + 1, j + 1)
        for i in range(L.dim)
        for j in range(i + 1, L.dim)
        if not is_zero_vec(_nijenhuis_defect(L, N, i, j))
    ]


def is_nijenhuis_operator_lie(L: LieAlgebra, N: Matrix) -> bool:
    """[Na, Nb] = N([Na, b] + [a, Nb] - N[a, b]) on all basis pairs."""
    return not nijenhuis_operator_violations(L, N)


def deformed_bracket(L: LieAlgebra, N: Matrix) -> LieAlgebra:
    """The bracket [a, b]_N = [Na, b] + [a, Nb] - N[a, b] of a Nijenhuis operator."""
    bad = nijenhuis_operator_violations(L, N)
    if bad:
        raise ValueError(f"N is not a Nijenhuis operator; fails on basis pairs {bad}")
    structure = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            ei, ej = unit(L.dim, i), unit(L.dim, j)
            acc = [ZERO] * L.dim
            axpy(acc, 1, L.bracket(N.apply(ei), ej))
            axpy(acc, 1, L.bracket(ei, N.apply(ej)))
            axpy(acc, -1, N.apply(L.basis_bracket(i, j)))
            structure[(i, j)] = tuple(acc)
    return LieAlgebra(L.dim, structure)


def is_lie_homomorphism(L: LieAlgebra, phi: Matrix) -> bool:
    """phi[e_i, e_j] = [phi e_i, phi e_j] on all basis pairs."""
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            if phi.apply(L.basis_bracket(i, j)) != L.bracket(phi.column(i), phi.column(j)):
                return False
    return True
