"""Shared test instances and seeded random generators."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from olab.cochains import Cochain, basis_keys
from olab.io import bundled_document
from olab.lie import LieAlgebra, adjoint_rep, coadjoint_rep
from olab.linalg import Matrix
from olab.ooperator import OOperator, is_nijenhuis_element, rota_baxter
from olab.prelie import PreLieCochain, prelie_keys
from olab.rmatrix import MultiVector, all_multivectors, is_rmatrix, rmatrix_operator

DIM2 = LieAlgebra.from_brackets(2, {(1, 2): [1, 0]})
HEIS = LieAlgebra.from_brackets(3, {(1, 2): [0, 0, 1]})
SL2 = LieAlgebra.from_brackets(3, {(1, 2): [0, 2, 0], (1, 3): [0, 0, -2], (2, 3): [1, 0, 0]})
# [e1,e2]=e1 plus a central e3
AFF_PLUS = LieAlgebra.from_brackets(3, {(1, 2): [1, 0, 0]})
# [e1,e2]=e2, [e1,e3]=e3
R3 = LieAlgebra.from_brackets(3, {(1, 2): [0, 1, 0], (1, 3): [0, 0, 1]})

ALGEBRAS = {"dim2": DIM2, "heisenberg": HEIS, "sl2": SL2, "aff+K": AFF_PLUS, "r3": R3}


def case_i(a12, a22) -> OOperator:
    return rota_baxter(DIM2, Matrix.from_rows([[0, a12], [0, a22]]))


def heisenberg_rb(r11, r12, r21, r22, r31, r32):
    """A Heisenberg Rota-Baxter operator; r33 is solved from the quadratic condition."""
    if r11 + r22 == 0:
        raise ValueError("needs r11 + r22 != 0")
    r33 = Fraction(r11 * r22 - r21 * r12) / (r11 + r22)
    return rota_baxter(HEIS, Matrix.from_rows([[r11, r12, 0], [r21, r22, 0], [r31, r32, r33]]))


def corpus_operators() -> dict[str, OOperator]:
    """Every O-operator the acceptance suite quantifies over."""
    ops = {}
    for name in ("dim2", "heisenberg"):
        doc = bundled_document(name)
        ops[f"bundled:{name}"] = OOperator(doc.rep, doc.operator)
    doc = bundled_document("rmatrix-dim2")
    ops["bundled:rmatrix-dim2"] = rmatrix_operator(doc.rmatrix)
    ops["dim2-case-ii"] = rota_baxter(DIM2, Matrix.from_rows([[1, -1], [1, -1]]))
    ops["dim2-case-i-2,-1/2"] = case_i(2, Fraction(-1, 2))
    ops["heisenberg-rb-2"] = heisenberg_rb(1, 0, 0, 1, 0, 0)
    ops["sl2-h^e"] = rmatrix_operator(MultiVector.from_terms(SL2, 2, {(1, 2): 1}))
    ops["r3-coadjoint"] = rmatrix_operator(MultiVector.from_terms(R3, 2, {(1, 2): -1, (1, 3): -1, (2, 3): -1}))
    ops["zero-dim2"] = OOperator(adjoint_rep(DIM2), Matrix.zero(2, 2))
    ops["zero-heisenberg-coadjoint"] = OOperator(coadjoint_rep(HEIS), Matrix.zero(3, 3))
    return ops


def corpus_nijenhuis() -> list[tuple[str, OOperator, tuple]]:
    """(name, T, x) with x a Nijenhuis element of T."""
    out = []
    for name, T in corpus_operators().items():
        for x in _grid(T.algebra.dim):
            if any(x) and is_nijenhuis_element(T, x):
                out.append((name, T, x))
    return out


def _grid(n):
    return [tuple(Fraction(v) for v in x) for x in itertools.product((-1, 0, 1, 2), repeat=n)]


def corpus_rmatrices() -> list[MultiVector]:
    out = [bundled_document("rmatrix-dim2").rmatrix, MultiVector.from_terms(DIM2, 2, {(1, 2): Fraction(-5, 3)})]
    for L in (HEIS, SL2, AFF_PLUS, R3):
        found = [r for r in all_multivectors(L, 2, (-1, 0, 1)) if not r.is_zero() and is_rmatrix(r)]
        out.extend(found[:: max(1, len(found) // 4)][:4])
    return out


# --- random data ------------------------------------------------------------------

def rand_rational(rng: random.Random) -> Fraction:
    if rng.random() < 0.8:
        return Fraction(rng.randint(-3, 3))
    return Fraction(rng.randint(-4, 4), rng.randint(1, 3))


def rand_vector(rng, n):
    return tuple(rand_rational(rng) for _ in range(n))


def rand_cochain(rng, rep, k) -> Cochain:
    return Cochain(k, rep, {key: rand_vector(rng, rep.algebra.dim) for key in basis_keys(rep.dimV, k)})


def rand_prelie_cochain(rng, dimV, degree) -> PreLieCochain:
    return PreLieCochain(degree, dimV, dimV,
                         {key: rand_vector(rng, dimV) for key in prelie_keys(dimV, degree)})


def rand_multivector(rng, L, k) -> MultiVector:
    return MultiVector(k, L, {key: rand_rational(rng) for key in basis_keys(L.dim, k)})
