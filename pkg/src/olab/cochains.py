"""The graded Lie algebra C*(V, g) = ⊕_k Hom(∧^k V, g) of a representation.

A degree-k cochain is stored by its values on increasing tuples of V-basis
indices. The bracket is computed straight from its three signed unshuffle
sums; no larger ambient algebra is built.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .lie import Representation
from .linalg import (
    ZERO,
    Matrix,
    axpy,
    is_zero_vec,
    sort_with_sign,
    unshuffles_0based,
    vec,
    zeros,
)


def basis_keys(dimV: int, k: int) -> list[tuple]:
    """Increasing k-tuples of 0-based V indices, in lexicographic order."""
    return list(itertools.combinations(range(dimV), k))


@dataclass(frozen=True)
class Cochain:
    """An element of Hom(∧^k V, g).

    ``coeffs`` maps increasing 0-based index tuples to g-vectors; absent keys
    are zero. Degree 0 uses the single key ``()``.
    """

    degree: int
    rep: Representation
    coeffs: Mapping = field(default_factory=dict)

    def __post_init__(self):
        n = self.rep.algebra.dim
        clean = {}
        for key, value in self.coeffs.items():
            key = tuple(key)
            if len(key) != self.degree or list(key) != sorted(set(key)):
                raise ValueError(f"cochain key {key} is not a strictly increasing {self.degree}-tuple")
            if key and not (0 <= key[0] and key[-1] < self.rep.dimV):
                raise ValueError(f"cochain key {key} out of range for dimV={self.rep.dimV}")
            v = vec(value)
            if len(v) != n:
                raise ValueError(f"cochain value at {key} has length {len(v)}, expected {n}")
            if not is_zero_vec(v):
                clean[key] = v
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, rep: Representation, degree: int) -> "Cochain":
        return cls(degree, rep, {})

    @classmethod
    def element(cls, rep: Representation, x: Sequence) -> "Cochain":
        """An element of g viewed as a 0-cochain."""
        return cls(0, rep, {(): x})

    @classmethod
    def from_matrix(cls, rep: Representation, m: Matrix) -> "Cochain":
        """A linear map V -> g (column j is the image of e_j) as a 1-cochain."""
        if (m.rows, m.cols) != (rep.algebra.dim, rep.dimV):
            raise ValueError(
                f"linear map must be {rep.algebra.dim}x{rep.dimV}, got {m.rows}x{m.cols}"
            )
        return cls(1, rep, {(j,): m.column(j) for j in range(m.cols)})

    @classmethod
    def from_vector(cls, rep: Representation, degree: int, v: Sequence) -> "Cochain":
        n = rep.algebra.dim
        keys = basis_keys(rep.dimV, degree)
        if len(v) != n * len(keys):
            raise ValueError("coordinate vector has the wrong length")
        return cls(degree, rep, {key: tuple(v[a * n:(a + 1) * n]) for a, key in enumerate(keys)})

    # views ------------------------------------------------------------------

    @property
    def dim_g(self) -> int:
        return self.rep.algebra.dim

    def to_vector(self) -> tuple:
        n = self.dim_g
        out = []
        for key in basis_keys(self.rep.dimV, self.degree):
            out.extend(self.coeffs.get(key, zeros(n)))
        return tuple(out)

    def to_matrix(self) -> Matrix:
        if self.degree != 1:
            raise ValueError("only 1-cochains are linear maps V -> g")
        return Matrix.from_columns([self.at((j,)) for j in range(self.rep.dimV)], rows=self.dim_g)

    def value(self) -> tuple:
        """The g-element of a 0-cochain."""
        if self.degree != 0:
            raise ValueError("value() is only defined for 0-cochains")
        return self.at(())

    def is_zero(self) -> bool:
        return not self.coeffs

    def at(self, idx: Sequence[int]) -> tuple:
        """Value on basis vectors e_{idx[0]}, ..., in any order (0-based)."""
        sign, key = sort_with_sign(tuple(idx))
        if sign == 0:
            return zeros(self.dim_g)
        v = self.coeffs.get(key)
        if v is None:
            return zeros(self.dim_g)
        return v if sign > 0 else tuple(-x for x in v)

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Cochain") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        _same_rep(self.rep, other.rep)

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        keys = set(self.coeffs) | set(other.coeffs)
        n = self.dim_g
        return Cochain(self.degree, self.rep, {
            k: tuple(a + b for a, b in zip(self.coeffs.get(k, zeros(n)), other.coeffs.get(k, zeros(n))))
            for k in keys
        })

    def __neg__(self) -> "Cochain":
        return Cochain(self.degree, self.rep, {k: tuple(-x for x in v) for k, v in self.coeffs.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, c) -> "Cochain":
        c = Fraction(c)
        return Cochain(self.degree, self.rep, {k: tuple(c * x for x in v) for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.degree == other.degree
            and (self.rep is other.rep or self.rep == other.rep)
            and self.coeffs == other.coeffs
        )

    __hash__ = None


def _same_rep(a: Representation, b: Representation) -> None:
    if a is not b and a != b:
        raise ValueError("cochains live over different representations")


def _eval_first_vector(f: Cochain, w: Sequence[Fraction], rest: Sequence[int]) -> list:
    """f(w, e_rest...) for a general first argument w, as a mutable list."""
    acc = [ZERO] * f.dim_g
    for a, c in enumerate(w):
        if c:
            axpy(acc, c, f.at((a, *rest)))
    return acc


def evaluate(f: Cochain, args: Sequence[Sequence]) -> tuple:
    """Multilinear, totally antisymmetric extension of ``f`` to arbitrary V-vectors."""
    if len(args) != f.degree:
        raise ValueError(f"{f.degree}-cochain evaluated on {len(args)} arguments")
    args = [vec(a) for a in args]
    for a in args:
        if len(a) != f.rep.dimV:
            raise ValueError(f"argument of length {len(a)}, expected dimV={f.rep.dimV}")
    acc = [ZERO] * f.dim_g
    supports = [[(i, c) for i, c in enumerate(a) if c] for a in args]
    for combo in itertools.product(*supports):
        idx = tuple(i for i, _ in combo)
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        axpy(acc, coeff, f.at(idx))
    return tuple(acc)


def graded_bracket(P: Cochain, Q: Cochain) -> Cochain:
    """The graded Lie bracket of a degree-n and a degree-m cochain (degree n+m)."""
    _same_rep(P.rep, Q.rep)
    rep = P.rep
    L = rep.algebra
    n, m = P.degree, Q.degree
    dimV = rep.dimV
    sgn_mn = -1 if (m * n) % 2 else 1
    out = {}
    for key in basis_keys(dimV, n + m):
        acc = [ZERO] * L.dim
        if n >= 1:
            for pos, s in unshuffles_0based((m, 1, n - 1)):
                u = [key[p] for p in pos]
                q = Q.at(u[:m])
                if is_zero_vec(q):
                    continue
                w = rep.act_basis(q, u[m])
                axpy(acc, s, _eval_first_vector(P, w, u[m + 1:]))
        if m >= 1:
            for pos, s in unshuffles_0based((n, 1, m - 1)):
                u = [key[p] for p in pos]
                p_val = P.at(u[:n])
                if is_zero_vec(p_val):
                    continue
                w = rep.act_basis(p_val, u[n])
                axpy(acc, -sgn_mn * s, _eval_first_vector(Q, w, u[n + 1:]))
        for pos, s in unshuffles_0based((n, m)):
            u = [key[p] for p in pos]
            p_val = P.at(u[:n])
            if is_zero_vec(p_val):
                continue
            q_val = Q.at(u[n:])
            if is_zero_vec(q_val):
                continue
            axpy(acc, sgn_mn * s, L.bracket(p_val, q_val))
        out[key] = tuple(acc)
    return Cochain(n + m, rep, out)


def mc_residual(T: Cochain) -> Cochain:
    """⟦T, T⟧; it vanishes exactly when T is an O-operator."""
    if T.degree != 1:
        raise ValueError("Maurer-Cartan residual needs a 1-cochain")
    return graded_bracket(T, T)


def d_T(T: Cochain, f: Cochain) -> Cochain:
    """The differential ⟦T, ·⟧ of an O-operator T."""
    if not mc_residual(T).is_zero():
        raise ValueError("T is not an O-operator, so ⟦T, ·⟧ is not a differential")
    return graded_bracket(T, f)


def mc_equation_twisted(T: Cochain, T_prime: Cochain) -> bool:
    """Whether d_T T' + ½⟦T', T'⟧ = 0, i.e. T + T' is again an O-operator."""
    lhs = d_T(T, T_prime) + graded_bracket(T_prime, T_prime).scale(Fraction(1, 2))
    return lhs.is_zero()


def cochain_space_dim(rep: Representation, k: int) -> int:
    return comb(rep.dimV, k) * rep.algebra.dim if 0 <= k else 0
