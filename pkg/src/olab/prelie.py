"""Pre-Lie algebras, their graded Lie algebra of cochains and cohomology.

Cochain numbering follows the pre-Lie cohomology complex: an n-cochain is a
map ∧^{n-1}V ⊗ V -> W, antisymmetric in its first n-1 arguments. As an element
of the graded Lie algebra it has grading n-1, so the bracket of an n- and an
m-cochain is an (n+m-1)-cochain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .cochains import Cochain, basis_keys
from .lie import LieAlgebra, Representation, validate_rep
from .linalg import (
    ZERO,
    Matrix,
    axpy,
    is_zero_vec,
    rank,
    sort_with_sign,
    unit,
    unshuffles_0based,
    vec,
    vsub,
    zeros,
)


@dataclass(frozen=True)
class PreLie:
    """A bilinear product on K^dimV; ``product[(a, b)]`` is e_a . e_b (0-based)."""

    dimV: int
    product: Mapping = field(default_factory=dict)
    _table: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = self.dimV
        table = [[zeros(m)] * m for _ in range(m)]
        clean = {}
        for (a, b), v in self.product.items():
            if not (0 <= a < m and 0 <= b < m):
                raise ValueError(f"product key {(a, b)} out of range")
            v = vec(v)
            if len(v) != m:
                raise ValueError(f"product e_{a + 1}.e_{b + 1} has {len(v)} coefficients, expected {m}")
            table[a][b] = v
            if not is_zero_vec(v):
                clean[(a, b)] = v
        object.__setattr__(self, "product", dict(sorted(clean.items())))
        object.__setattr__(self, "_table", tuple(tuple(r) for r in table))

    @classmethod
    def from_products(cls, dimV: int, products: Mapping) -> "PreLie":
        """Build from 1-based pairs, e.g. ``{(2, 1): [-1, 0]}``."""
        return cls(dimV, {(a - 1, b - 1): v for (a, b), v in products.items()})

    def mul(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple:
        acc = [ZERO] * self.dimV
        for a, c in enumerate(x):
            if not c:
                continue
            row = self._table[a]
            for b, d in enumerate(y):
                if d:
                    axpy(acc, c * d, row[b])
        return tuple(acc)

    def basis_mul(self, a: int, b: int) -> tuple:
        return self._table[a][b]

    def left(self, a: int) -> Matrix:
        """L_{e_a}: y -> e_a . y."""
        return Matrix.from_columns([self._table[a][b] for b in range(self.dimV)], rows=self.dimV)

    def right(self, a: int) -> Matrix:
        """R_{e_a}: y -> y . e_a."""
        return Matrix.from_columns([self._table[b][a] for b in range(self.dimV)], rows=self.dimV)

    def as_cochain(self) -> "PreLieCochain":
        """The product as a 2-cochain in Hom(V ⊗ V, V)."""
        return PreLieCochain(2, self.dimV, self.dimV, {((a,), b): self._table[a][b]
                                                       for a in range(self.dimV) for b in range(self.dimV)})


def associator(A: PreLie, a: int, b: int, c: int) -> tuple:
    """(e_a . e_b) . e_c - e_a . (e_b . e_c)."""
    m = A.dimV
    return vsub(A.mul(A.basis_mul(a, b), unit(m, c)), A.mul(unit(m, a), A.basis_mul(b, c)))


def validate_prelie(A: PreLie) -> list[dict]:
    """Basis triples (1-based) where the associator is not symmetric in its first two slots."""
    out = []
    m = A.dimV
    for a in range(m):
        for b in range(a + 1, m):
            for c in range(m):
                d = vsub(associator(A, a, b, c), associator(A, b, a, c))
                if not is_zero_vec(d):
                    out.append({"triple": (a + 1, b + 1, c + 1), "defect": d})
    return out


def commutator_lie(A: PreLie) -> LieAlgebra:
    """The sub-adjacent Lie algebra [x, y] = x.y - y.x."""
    bad = validate_prelie(A)
    if bad:
        raise ValueError(f"not a pre-Lie algebra; associator fails on {[b['triple'] for b in bad]}")
    m = A.dimV
    return LieAlgebra(m, {
        (a, b): vsub(A.basis_mul(a, b), A.basis_mul(b, a))
        for a in range(m) for b in range(a + 1, m)
    })


def is_nijenhuis_operator_prelie(A: PreLie, N: Matrix) -> bool:
    """(Nu).(Nv) = N((Nu).v + u.(Nv) - N(u.v)) on all basis pairs."""
    m = A.dimV
    if (N.rows, N.cols) != (m, m):
        raise ValueError(f"N must be {m}x{m}")
    for a in range(m):
        for b in range(m):
            Na, Nb = N.column(a), N.column(b)
            ea, eb = unit(m, a), unit(m, b)
            inner = [ZERO] * m
            axpy(inner, 1, A.mul(Na, eb))
            axpy(inner, 1, A.mul(ea, Nb))
            axpy(inner, -1, N.apply(A.basis_mul(a, b)))
            if A.mul(Na, Nb) != N.apply(tuple(inner)):
                return False
    return True


# --- cochains ----------------------------------------------------------------

def prelie_keys(dimV: int, degree: int) -> list[tuple]:
    return [
        (I, last)
        for I in itertools.combinations(range(dimV), degree - 1)
        for last in range(dimV)
    ]


@dataclass(frozen=True)
class PreLieCochain:
    """An n-cochain f: ∧^{n-1}V ⊗ V -> W (n = ``degree`` >= 1).

    ``coeffs`` maps ``(I, last)``, with I an increasing (n-1)-tuple of 0-based
    indices, to a vector in W.
    """

    degree: int
    dimV: int
    dimW: int
    coeffs: Mapping = field(default_factory=dict)

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("pre-Lie cochains have degree >= 1")
        clean = {}
        for (I, last), v in self.coeffs.items():
            I = tuple(I)
            if len(I) != self.degree - 1 or list(I) != sorted(set(I)):
                raise ValueError(f"key {I} is not an increasing {self.degree - 1}-tuple")
            v = vec(v)
            if len(v) != self.dimW:
                raise ValueError(f"value has length {len(v)}, expected {self.dimW}")
            if not is_zero_vec(v):
                clean[(I, last)] = v
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @property
    def grading(self) -> int:
        return self.degree - 1

    @classmethod
    def zero(cls, dimV: int, degree: int, dimW: int | None = None) -> "PreLieCochain":
        return cls(degree, dimV, dimV if dimW is None else dimW, {})

    def at(self, idx: Sequence[int], last: int) -> tuple:
        sign, key = sort_with_sign(tuple(idx))
        if sign == 0:
            return zeros(self.dimW)
        v = self.coeffs.get((key, last))
        if v is None:
            return zeros(self.dimW)
        return v if sign > 0 else tuple(-x for x in v)

    def evaluate(self, args: Sequence[Sequence]) -> tuple:
        """Multilinear extension to arbitrary vectors."""
        if len(args) != self.degree:
            raise ValueError(f"{self.degree}-cochain evaluated on {len(args)} arguments")
        args = [vec(a) for a in args]
        acc = [ZERO] * self.dimW
        supports = [[(i, c) for i, c in enumerate(a) if c] for a in args]
        for combo in itertools.product(*supports):
            coeff = Fraction(1)
            for _, c in combo:
                coeff *= c
            idx = tuple(i for i, _ in combo)
            axpy(acc, coeff, self.at(idx[:-1], idx[-1]))
        return tuple(acc)

    def to_vector(self) -> tuple:
        out = []
        for key in prelie_keys(self.dimV, self.degree):
            out.extend(self.coeffs.get(key, zeros(self.dimW)))
        return tuple(out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "PreLieCochain") -> None:
        if (self.degree, self.dimV, self.dimW) != (other.degree, other.dimV, other.dimW):
            raise ValueError("pre-Lie cochains of different shapes")

    def __add__(self, other: "PreLieCochain") -> "PreLieCochain":
        self._check(other)
        z = zeros(self.dimW)
        keys = set(self.coeffs) | set(other.coeffs)
        return PreLieCochain(self.degree, self.dimV, self.dimW, {
            k: tuple(a + b for a, b in zip(self.coeffs.get(k, z), other.coeffs.get(k, z))) for k in keys
        })

    def __neg__(self) -> "PreLieCochain":
        return self.scale(-1)

    def __sub__(self, other: "PreLieCochain") -> "PreLieCochain":
        return self + (-other)

    def scale(self, c) -> "PreLieCochain":
        c = Fraction(c)
        return PreLieCochain(self.degree, self.dimV, self.dimW,
                             {k: tuple(c * x for x in v) for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, PreLieCochain):
            return NotImplemented
        return ((self.degree, self.dimV, self.dimW, self.coeffs)
                == (other.degree, other.dimV, other.dimW, other.coeffs))

    __hash__ = None


def _at_first_vector(f: PreLieCochain, w: Sequence[Fraction], rest: Sequence[int], last: int) -> list:
    acc = [ZERO] * f.dimW
    for a, c in enumerate(w):
        if c:
            axpy(acc, c, f.at((a, *rest), last))
    return acc


def _at_last_vector(f: PreLieCochain, idx: Sequence[int], w: Sequence[Fraction]) -> list:
    acc = [ZERO] * f.dimW
    for a, c in enumerate(w):
        if c:
            axpy(acc, c, f.at(idx, a))
    return acc


def circle(alpha: PreLieCochain, beta: PreLieCochain) -> PreLieCochain:
    """The composition alpha ∘ beta underlying the bracket."""
    if alpha.dimV != alpha.dimW or beta.dimV != beta.dimW or alpha.dimV != beta.dimV:
        raise ValueError("the graded bracket needs cochains V-valued on the same V")
    n, m = alpha.grading, beta.grading
    dimV = alpha.dimV
    sgn = -1 if (m * n) % 2 else 1
    out = {}
    for I, last in prelie_keys(dimV, n + m + 1):
        acc = [ZERO] * dimV
        if n >= 1:
            for pos, s in unshuffles_0based((m, 1, n - 1)):
                u = [I[p] for p in pos]
                w = beta.at(u[:m], u[m])
                if is_zero_vec(w):
                    continue
                axpy(acc, s, _at_first_vector(alpha, w, u[m + 1:], last))
        for pos, s in unshuffles_0based((n, m)):
            u = [I[p] for p in pos]
            w = beta.at(u[n:], last)
            if is_zero_vec(w):
                continue
            axpy(acc, sgn * s, _at_last_vector(alpha, u[:n], w))
        out[(I, last)] = tuple(acc)
    return PreLieCochain(n + m + 1, dimV, dimV, out)


def prelie_graded_bracket(alpha: PreLieCochain, beta: PreLieCochain) -> PreLieCochain:
    """[alpha, beta]^C = alpha ∘ beta - (-1)^{nm} beta ∘ alpha, n, m the gradings."""
    n, m = alpha.grading, beta.grading
    sgn = -1 if (m * n) % 2 else 1
    return circle(alpha, beta) - circle(beta, alpha).scale(sgn)


def bilinear_cochain(dimV: int, products: Mapping) -> PreLieCochain:
    """A bilinear map V ⊗ V -> V from 1-based pairs, as a 2-cochain."""
    return PreLieCochain(2, dimV, dimV, {((a - 1,), b - 1): v for (a, b), v in products.items()})


# --- coboundary ---------------------------------------------------------------

def validate_prelie_rep(A: PreLie, rho: Sequence[Matrix], mu: Sequence[Matrix]) -> list[dict]:
    """Check (W; rho, mu) is a representation of the pre-Lie algebra A.

    rho must represent the sub-adjacent Lie algebra and
    rho(x)mu(y) - mu(y)rho(x) = mu(x.y) - mu(y)mu(x).
    """
    m = A.dimV
    Vc = commutator_lie(A)
    rep = Representation(Vc, rho[0].rows if rho else 0, tuple(rho))
    out = []
    for v in validate_rep(rep):
        out.append({"condition": "rho", "pair": v["pair"]})

    def mu_of(x):
        acc = [ZERO] * (rep.dimV * rep.dimV)
        for k, c in enumerate(x):
            if c:
                axpy(acc, c, mu[k].entries)
        return Matrix(rep.dimV, rep.dimV, tuple(acc))

    for a in range(m):
        for b in range(m):
            lhs = rho[a] @ mu[b] - mu[b] @ rho[a]
            rhs = mu_of(A.basis_mul(a, b)) - mu[b] @ mu[a]
            if lhs != rhs:
                out.append({"condition": "mu", "pair": (a + 1, b + 1)})
    return out


def prelie_coboundary(A: PreLie, rho: Sequence[Matrix], mu: Sequence[Matrix], f: PreLieCochain) -> PreLieCochain:
    """Coboundary of an n-cochain with values in a representation (W; rho, mu)."""
    n = f.degree
    m = A.dimV
    W = f.dimW
    out = {}
    for I, last in prelie_keys(m, n + 1):
        # arguments x_1..x_n = I, x_{n+1} = last
        acc = [ZERO] * W
        for i in range(n):
            s = 1 if i % 2 == 0 else -1
            xi = I[i]
            rest = I[:i] + I[i + 1:]
            axpy(acc, s, rho[xi].apply(f.at(rest, last)))
            axpy(acc, s, mu[last].apply(f.at(rest, xi)))
            axpy(acc, -s, _at_last_vector(f, rest, A.basis_mul(xi, last)))
        for i in range(n):
            for j in range(i + 1, n):
                s = 1 if (i + j) % 2 == 0 else -1
                w = vsub(A.basis_mul(I[i], I[j]), A.basis_mul(I[j], I[i]))
                rest = tuple(I[x] for x in range(n) if x != i and x != j)
                axpy(acc, s, _at_first_vector(f, w, rest, last))
        out[(I, last)] = tuple(acc)
    return PreLieCochain(n + 1, m, W, out)


def regular_rep(A: PreLie) -> tuple[tuple[Matrix, ...], tuple[Matrix, ...]]:
    """(L, R): left and right multiplications."""
    return (tuple(A.left(a) for a in range(A.dimV)), tuple(A.right(a) for a in range(A.dimV)))


def prelie_coboundary_regular(A: PreLie, f: PreLieCochain) -> PreLieCochain:
    """Coboundary for the regular representation (V; L, R)."""
    if f.dimV != A.dimV or f.dimW != A.dimV:
        raise ValueError("cochain does not take values in the regular representation")
    L, R = regular_rep(A)
    return prelie_coboundary(A, L, R, f)


# --- comparison map from C*(V, g) ---------------------------------------------------

def phi_map(rep: Representation, f: Cochain) -> PreLieCochain:
    """Phi(f)(u_1, ..., u_k, u_{k+1}) = rho(f(u_1, ..., u_k)) u_{k+1}."""
    k = f.degree
    out = {}
    for I, last in prelie_keys(rep.dimV, k + 1):
        fv = f.at(I)
        if not is_zero_vec(fv):
            out[(I, last)] = rep.act_basis(fv, last)
    return PreLieCochain(k + 1, rep.dimV, rep.dimV, out)


def phi_matrix(rep: Representation, k: int) -> Matrix:
    """Matrix of Phi on degree-k cochains."""
    n = rep.algebra.dim
    cols = []
    for key in basis_keys(rep.dimV, k):
        for b in range(n):
            cols.append(phi_map(rep, Cochain(k, rep, {key: unit(n, b)})).to_vector())
    rows = len(prelie_keys(rep.dimV, k + 1)) * rep.dimV
    return Matrix.from_columns(cols, rows=rows) if cols else Matrix.zero(rows, 0)


def phi_is_injective(rep: Representation, k: int) -> bool:
    M = phi_matrix(rep, k)
    return rank(M) == M.cols
