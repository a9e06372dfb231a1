"""Acceptance checks, one group per criterion; a PASS/FAIL line per criterion is
printed at the end of the pytest run (see conftest.py). All comparisons are exact."""

import itertools
import json
import random
import shutil
import subprocess
import sys
from fractions import Fraction
from math import comb

import pytest

from olab.cochains import Cochain, d_T, graded_bracket
from olab.deformation import TruncatedDeformation, extend, iterate_extension, obstruction, validate_order_n
from olab.lie import adjoint_rep, is_nijenhuis_operator_lie, semidirect_product
from olab.linalg import Matrix
from olab.ooperator import (
    OOperator,
    coboundary,
    coboundary_matrix,
    cohomology,
    induced_prelie,
    is_cocycle,
    is_nijenhuis_element,
    is_ooperator,
    is_rota_baxter,
    rota_baxter,
    trivial_deformation_generator,
)
from olab.prelie import (
    is_nijenhuis_operator_prelie,
    phi_map,
    prelie_coboundary_regular,
    prelie_graded_bracket,
)
from olab.rmatrix import (
    is_nijenhuis_element_r,
    psi,
    rmatrix_coboundary,
    rmatrix_operator,
    schouten_bracket,
    trivial_coboundary,
)

from corpus import (
    ALGEBRAS,
    DIM2,
    HEIS,
    case_i,
    corpus_nijenhuis,
    corpus_operators,
    corpus_rmatrices,
    heisenberg_rb,
    rand_cochain,
    rand_multivector,
    rand_prelie_cochain,
)
from oracles import naive_rank

OPS = sorted(corpus_operators().items())
RMATS = corpus_rmatrices()
N_RANDOM = 60
GRID5 = [Fraction(-2), Fraction(-1, 2), Fraction(0), Fraction(1), Fraction(3)]
GRID4 = [-1, 0, 1, 2]


def sign(n):
    return -1 if n % 2 else 1


def matrix(*rows):
    return Matrix.from_rows([list(r) for r in rows])


# --- 1 ------------------------------------------------------------------------------

@pytest.mark.acceptance(1)
def test_case_i_grid_passes():
    for a12, a22 in itertools.product(GRID5, repeat=2):
        assert is_ooperator(adjoint_rep(DIM2), matrix((0, a12), (0, a22)))


@pytest.mark.acceptance(1)
def test_violating_matrices_fail():
    violators = 0
    for a11, a12, a21, a22 in itertools.product(GRID4, repeat=4):
        eq1 = (a11 + a22) * a21 == 0
        eq2 = a11 * a22 - a12 * a21 == (a11 + a22) * a11
        ok = is_ooperator(adjoint_rep(DIM2), matrix((a11, a12), (a21, a22)))
        assert ok == (eq1 and eq2)
        violators += not (eq1 and eq2)
    assert violators > 200


# --- 2 ------------------------------------------------------------------------------

@pytest.mark.acceptance(2)
def test_case_ii_operator_and_element():
    T = rota_baxter(DIM2, matrix((1, -1), (1, -1)))
    assert is_rota_baxter(DIM2, T.matrix)
    assert is_nijenhuis_element(T, (1, 1))


@pytest.mark.acceptance(2)
def test_t1_e1_nijenhuis_across_case_i():
    for a12, a22, t1 in itertools.product(GRID5, repeat=3):
        assert is_nijenhuis_element(case_i(a12, a22), (t1, 0))


@pytest.mark.acceptance(2)
def test_nijenhuis_characterizations_both_cases():
    for a11, a12, a21, a22 in itertools.product([-2, -1, 0, 1, 2], repeat=4):
        R = matrix((a11, a12), (a21, a22))
        if not is_rota_baxter(DIM2, R):
            continue
        T = rota_baxter(DIM2, R)
        for t1, t2 in itertools.product([-2, -1, 0, 1, 2], repeat=2):
            nij = is_nijenhuis_element(T, (t1, t2))
            if a21 == 0:
                assert nij == (t2 * (a12 * t2 - a22 * t1) == 0)
            if a11 + a22 == 0:
                assert nij == (t1 * t1 * a21 - t2 * t2 * a12 - t1 * t2 * (a11 - a22) == 0)


# --- 3 ------------------------------------------------------------------------------

def _heisenberg_grid():
    for r in itertools.product((-1, 0, 1), repeat=9):
        yield r, matrix(r[0:3], r[3:6], r[6:9])


@pytest.mark.acceptance(3)
def test_heisenberg_rota_baxter_condition():
    found = 0
    for (r11, r12, r13, r21, r22, r23, r31, r32, r33), R in _heisenberg_grid():
        expected = r13 == 0 and r23 == 0 and (r11 + r22) * r33 == r11 * r22 - r21 * r12
        assert is_rota_baxter(HEIS, R) == expected
        found += expected
    assert found > 100


def _heisenberg_operators():
    ops = [R for _, R in _heisenberg_grid() if is_rota_baxter(HEIS, R)]
    rng = random.Random(11)
    ops = rng.sample(ops, 40)
    ops.append(heisenberg_rb(Fraction(2, 3), 5, Fraction(-1, 4), 1, 7, Fraction(1, 2)).matrix)
    assert all(is_rota_baxter(HEIS, R) for R in ops)
    return ops


@pytest.mark.acceptance(3)
def test_heisenberg_every_element_nijenhuis():
    for R in _heisenberg_operators():
        T = rota_baxter(HEIS, R)
        for x in itertools.product((-1, 0, 2), repeat=3):
            assert is_nijenhuis_element(T, x)


@pytest.mark.acceptance(3)
def test_heisenberg_generator_matrix():
    rng = random.Random(5)
    for R in _heisenberg_operators():
        T = rota_baxter(HEIS, R)
        r = lambda i, j: R[i - 1, j - 1]
        for _ in range(5):
            t1, t2, t3 = (Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3))
            expected = matrix(
                (0, 0, 0),
                (0, 0, 0),
                ((r(1, 1) - r(3, 3)) * t2 - r(2, 1) * t1, (r(3, 3) - r(2, 2)) * t1 + r(1, 2) * t2, 0),
            )
            assert trivial_deformation_generator(T, (t1, t2, t3)).to_matrix() == expected


# --- 4 ------------------------------------------------------------------------------

@pytest.mark.acceptance(4)
@pytest.mark.parametrize("name,T", OPS)
def test_coboundary_squares_to_zero(name, T):
    for k in range(T.rep.dimV - 1):
        assert (coboundary_matrix(T, k + 1) @ coboundary_matrix(T, k)).is_zero()


@pytest.mark.acceptance(4)
def test_sign_relation_random():
    rng = random.Random(4)
    for _ in range(120):
        _, T = rng.choice(OPS)
        k = rng.randint(0, T.rep.dimV - 1)
        f = rand_cochain(rng, T.rep, k)
        assert coboundary(T, f) == d_T(T.cochain(), f).scale(sign(k))


# --- 5 ------------------------------------------------------------------------------

LIE_REPS = [adjoint_rep(L) for L in ALGEBRAS.values()] + [T.rep for _, T in OPS]


def _degrees(rng, total, count, low):
    while True:
        degs = [rng.randint(low, low + 1) for _ in range(count)]
        if sum(d - low for d in degs) + low <= total:
            return degs


@pytest.mark.acceptance(5)
def test_lie_cochain_bracket_skew_and_jacobi():
    rng = random.Random(51)
    for _ in range(N_RANDOM):
        rep = rng.choice(LIE_REPS)
        m, n, p = _degrees(rng, rep.dimV, 3, 0)
        P, Q, R = (rand_cochain(rng, rep, d) for d in (m, n, p))
        assert graded_bracket(P, Q) == graded_bracket(Q, P).scale(-sign(m * n))
        if m + n + p <= rep.dimV:
            lhs = graded_bracket(P, graded_bracket(Q, R))
            rhs = graded_bracket(graded_bracket(P, Q), R) + graded_bracket(Q, graded_bracket(P, R)).scale(sign(m * n))
            assert lhs == rhs


@pytest.mark.acceptance(5)
def test_prelie_bracket_skew_and_jacobi():
    rng = random.Random(52)
    br = prelie_graded_bracket
    for _ in range(N_RANDOM):
        dimV = rng.randint(1, 2)
        a, b, c = (rng.randint(1, 2) for _ in range(3))
        P, Q, R = (rand_prelie_cochain(rng, dimV, d) for d in (a, b, c))
        p, q = a - 1, b - 1
        assert br(P, Q) == br(Q, P).scale(-sign(p * q))
        assert br(P, br(Q, R)) == br(br(P, Q), R) + br(Q, br(P, R)).scale(sign(p * q))


@pytest.mark.acceptance(5)
def test_schouten_bracket_skew_and_jacobi():
    rng = random.Random(53)
    br = schouten_bracket
    algebras = list(ALGEBRAS.values())
    for _ in range(N_RANDOM):
        L = rng.choice(algebras)
        a, b, c = (rng.randint(1, 2) for _ in range(3))
        P, Q, R = (rand_multivector(rng, L, d) for d in (a, b, c))
        p, q = a - 1, b - 1
        assert br(P, Q) == br(Q, P).scale(-sign(p * q))
        assert br(P, br(Q, R)) == br(br(P, Q), R) + br(Q, br(P, R)).scale(sign(p * q))


# --- 6 ------------------------------------------------------------------------------

@pytest.mark.acceptance(6)
def test_phi_intertwines_brackets():
    rng = random.Random(61)
    for _ in range(N_RANDOM):
        rep = rng.choice(LIE_REPS)
        m = rng.randint(0, rep.dimV)
        n = rng.randint(0, rep.dimV - m)
        P, Q = rand_cochain(rng, rep, m), rand_cochain(rng, rep, n)
        assert phi_map(rep, graded_bracket(P, Q)) == prelie_graded_bracket(phi_map(rep, P), phi_map(rep, Q))


@pytest.mark.acceptance(6)
def test_phi_intertwines_differentials():
    rng = random.Random(62)
    for _ in range(N_RANDOM):
        _, T = rng.choice(OPS)
        k = rng.randint(0, T.rep.dimV - 1)
        f = rand_cochain(rng, T.rep, k)
        assert phi_map(T.rep, coboundary(T, f)) == prelie_coboundary_regular(induced_prelie(T), phi_map(T.rep, f))


@pytest.mark.acceptance(6)
def test_psi_bracket_relation():
    rng = random.Random(63)
    algebras = list(ALGEBRAS.values())
    for _ in range(N_RANDOM):
        L = rng.choice(algebras)
        a = rng.randint(1, L.dim)
        b = rng.randint(1, L.dim - a + 1)
        P, Q = rand_multivector(rng, L, a), rand_multivector(rng, L, b)
        assert psi(schouten_bracket(P, Q)) == graded_bracket(psi(P), psi(Q)).scale(sign((a - 1) * (b - 1)))


@pytest.mark.acceptance(6)
def test_psi_differential_relation():
    rng = random.Random(64)
    for _ in range(N_RANDOM):
        r = rng.choice(RMATS)
        a = rng.randint(1, r.algebra.dim - 1)
        P = rand_multivector(rng, r.algebra, a)
        Tr = rmatrix_operator(r).cochain()
        assert psi(rmatrix_coboundary(r, P)) == d_T(Tr, psi(P)).scale(sign(a - 1))


@pytest.mark.acceptance(6)
def test_rmatrix_coboundary_two_routes():
    rng = random.Random(65)
    for _ in range(N_RANDOM):
        r = rng.choice(RMATS)
        f = rand_multivector(rng, r.algebra, rng.randint(1, r.algebra.dim - 1))
        assert schouten_bracket(r, f) == trivial_coboundary(r, f)


# --- 7 ------------------------------------------------------------------------------

def _order1_deformations(T, rng):
    Z = cohomology(T, 1).cocycle_basis
    out = [z.to_matrix() for z in Z]
    for _ in range(3):
        if Z:
            acc = Cochain.zero(T.rep, 1)
            for z in Z:
                acc = acc + z.scale(Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
            out.append(acc.to_matrix())
    return out


@pytest.mark.acceptance(7)
@pytest.mark.parametrize("name,T", OPS)
def test_deformation_suite(name, T):
    rng = random.Random(name)
    dimH2 = cohomology(T, 2).dimH if T.rep.dimV >= 2 else 0
    for tau in _order1_deformations(T, rng):
        D = TruncatedDeformation(T, (tau,))
        assert validate_order_n(D) == []
        assert is_cocycle(T, obstruction(D))
        step = extend(D)
        if step is not None:
            assert validate_order_n(step.deformation) == []
        if dimH2 == 0:
            report = iterate_extension(D, 5)
            assert report.success and report.reached == 5
            assert validate_order_n(report.deformation) == []


@pytest.mark.acceptance(7)
def test_unobstructed_instances_present():
    assert sum(1 for _, T in OPS if T.rep.dimV >= 2 and cohomology(T, 2).dimH == 0) >= 2


# --- 8 ------------------------------------------------------------------------------

@pytest.mark.acceptance(8)
@pytest.mark.parametrize("name,T", OPS)
def test_block_operator_nijenhuis(name, T):
    n, m = T.algebra.dim, T.rep.dimV
    rows = [[0] * n + list(T.matrix.row(i)) for i in range(n)] + [[0] * (n + m) for _ in range(m)]
    assert is_nijenhuis_operator_lie(semidirect_product(T.rep), Matrix.from_rows(rows))


@pytest.mark.acceptance(8)
def test_rho_x_nijenhuis_on_induced_prelie():
    cases = corpus_nijenhuis()
    assert len(cases) > 100
    for _, T, x in cases:
        assert is_nijenhuis_operator_prelie(induced_prelie(T), T.rep.matrix(x))


@pytest.mark.acceptance(8)
def test_rmatrix_nijenhuis_agreement():
    for r in RMATS:
        T = rmatrix_operator(r)
        for x in itertools.product((-1, 0, 1, 2), repeat=r.algebra.dim):
            assert is_nijenhuis_element_r(r, x) == is_nijenhuis_element(T, x)


# --- 9 ------------------------------------------------------------------------------

@pytest.mark.acceptance(9)
@pytest.mark.parametrize("name,T", OPS)
def test_zero_operator_cohomology(name, T):
    Z = OOperator(T.rep, Matrix.zero(T.algebra.dim, T.rep.dimV))
    for k in range(T.rep.dimV + 1):
        assert cohomology(Z, k).dimH == comb(T.rep.dimV, k) * T.algebra.dim


@pytest.mark.acceptance(9)
def test_degree0_against_naive_elimination():
    # d x (e_j) = [R e_j, x] + R [x, e_j], assembled straight from [e1, e2] = e1
    R = [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(1)]]

    def br(x, y):
        return (x[0] * y[1] - x[1] * y[0], Fraction(0))

    def apply(v):
        return tuple(sum(R[i][k] * v[k] for k in range(2)) for i in range(2))

    rows = []
    for j in range(2):
        ej = tuple(Fraction(int(k == j)) for k in range(2))
        Rej = apply(ej)
        cols = []
        for b in range(2):
            eb = tuple(Fraction(int(k == b)) for k in range(2))
            cols.append(tuple(p + q for p, q in zip(br(Rej, eb), apply(br(eb, ej)))))
        rows.extend([cols[0][i], cols[1][i]] for i in range(2))
    expected = 2 - naive_rank(rows)
    assert cohomology(case_i(1, 1), 0).dimH == expected == 1


# --- 10 -----------------------------------------------------------------------------

BUNDLED_RUNS = [
    ("dim2", c) for c in ("validate", "check-ooperator", "check-rb", "cohomology", "nijenhuis",
                          "infinitesimal-check", "deform-validate", "deform-extend", "prelie-export")
] + [
    ("heisenberg", c) for c in ("validate", "check-rb", "cohomology", "nijenhuis", "deform-extend", "prelie-export")
] + [
    ("rmatrix-dim2", c) for c in ("rmatrix-check", "rmatrix-cobracket", "rmatrix-nijenhuis", "weak-hom-check",
                                  "cohomology")
]


def _olab(*args):
    exe = shutil.which("olab")
    cmd = [exe, *args] if exe else [sys.executable, "-m", "olab.cli", *args]
    return subprocess.run(cmd, capture_output=True)


@pytest.mark.acceptance(10)
@pytest.mark.parametrize("name,command", BUNDLED_RUNS)
def test_cli_deterministic(name, command):
    first, second = _olab(command, f"bundled:{name}"), _olab(command, f"bundled:{name}")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout and first.stdout
    assert json.loads(first.stdout)["verdict"] is True


@pytest.mark.acceptance(10)
def test_cli_exit_codes(tmp_path):
    alg = {"dim": 2, "brackets": [{"i": 1, "j": 2, "value": [1, 0]}]}
    false_doc = tmp_path / "false.json"
    false_doc.write_text(json.dumps({"lie_algebra": alg, "representation": "adjoint", "operator": [[1, 0], [0, 1]]}))
    bad_doc = tmp_path / "bad.json"
    bad_doc.write_text(json.dumps({"lie_algebra": alg, "representation": "adjoint", "operator": [[1, 0]]}))
    assert _olab("check-ooperator", str(false_doc)).returncode == 1
    out = _olab("check-ooperator", str(bad_doc))
    assert out.returncode == 2 and out.stdout == b"" and b"$.operator" in out.stderr
    assert _olab("nonsense", "bundled:dim2").returncode == 2


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
