
import pytest
from hypothesis import given
from hypothesis import strategies as st

from olab.lie import (
    LieAlgebra,
    Representation,
    adjoint_rep,
    coadjoint_rep,
    deformed_bracket,
    is_lie_homomorphism,
    is_nijenhuis_operator_lie,
    semidirect_product,
    trivial_rep,
    validate_lie,
    validate_rep,
)
from olab.linalg import Matrix, unit
from olab.ooperator import rho_bar, sub_adjacent_lie

from corpus import ALGEBRAS, DIM2, HEIS, corpus_operators

small = st.integers(-2, 2)


class TestValidateLie:
    def test_dim2_valid(self):
        assert validate_lie(DIM2) == []

    def test_heisenberg_valid(self):
        assert validate_lie(HEIS) == []

    def test_jacobi_failure_reported(self):
        bad = LieAlgebra.from_brackets(3, {(1, 2): [0, 0, 1], (2, 3): [1, 0, 0], (1, 3): [1, 0, 0]})
        assert [v["triple"] for v in validate_lie(bad)] == [(1, 2, 3)]

    def test_key_order_enforced(self):
        with pytest.raises(ValueError):
            LieAlgebra.from_brackets(2, {(2, 1): [1, 0]})

    def test_antisymmetry_structural(self):
        assert DIM2.basis_bracket(1, 0) == (-1, 0)
        assert DIM2.basis_bracket(0, 0) == (0, 0)

    @given(st.lists(small, min_size=9, max_size=9))
    def test_valid_iff_adjoint_is_rep(self, c):
        L = LieAlgebra(3, {(0, 1): c[0:3], (0, 2): c[3:6], (1, 2): c[6:9]})
        assert (validate_lie(L) == []) == (validate_rep(adjoint_rep(L)) == [])


class TestRepresentations:
    def test_adjoint_dim2(self):
        R = adjoint_rep(DIM2)
        assert R.rho[0] == Matrix.from_rows([[0, 1], [0, 0]])
        assert R.rho[1] == Matrix.from_rows([[-1, 0], [0, 0]])

    def test_abelian_adjoint_zero(self):
        assert all(m.is_zero() for m in adjoint_rep(LieAlgebra.abelian(3)).rho)

    def test_heisenberg_adjoint(self):
        R = adjoint_rep(HEIS)
        assert R.act_basis(unit(3, 0), 1) == (0, 0, 1)
        assert R.act_basis(unit(3, 1), 0) == (0, 0, -1)

    def test_zero_rep_on_abelian(self):
        assert validate_rep(trivial_rep(LieAlgebra.abelian(2), 3)) == []

    def test_invalid_rep(self):
        R = Representation(DIM2, 2, (Matrix.from_rows([[0, 1], [0, 0]]), Matrix.from_rows([[1, 0], [0, 0]])))
        assert [v["pair"] for v in validate_rep(R)] == [(1, 2)]

    @pytest.mark.parametrize("name", sorted(ALGEBRAS))
    def test_coadjoint_is_rep(self, name):
        L = ALGEBRAS[name]
        R = coadjoint_rep(L)
        assert validate_rep(R) == []
        for i in range(L.dim):
            assert R.rho[i] == -(adjoint_rep(L).rho[i].T)

    @pytest.mark.parametrize("name", sorted(ALGEBRAS))
    def test_coadjoint_pairing_invariance(self, name):
        L = ALGEBRAS[name]
        ad, co = adjoint_rep(L), coadjoint_rep(L)
        n = L.dim
        for x in range(n):
            for xi in range(n):
                for y in range(n):
                    lhs = co.act_basis(unit(n, x), xi)[y] + ad.act_basis(unit(n, x), y)[xi]
                    assert lhs == 0


class TestSemidirect:
    def test_abelian(self):
        S = semidirect_product(trivial_rep(LieAlgebra.abelian(2), 3))
        assert S.dim == 5 and S.is_abelian()

    @pytest.mark.parametrize("name", sorted(ALGEBRAS))
    def test_adjoint_semidirect_valid(self, name):
        L = ALGEBRAS[name]
        S = semidirect_product(adjoint_rep(L))
        assert validate_lie(S) == []
        n = L.dim
        for a in range(n, 2 * n):
            for b in range(n, 2 * n):
                assert not any(S.basis_bracket(a, b))

    def test_mixed_bracket(self):
        S = semidirect_product(adjoint_rep(DIM2))
        # [e1, f2] = rho(e1) f2 = f1
        assert S.basis_bracket(0, 3) == (0, 0, 1, 0)


class TestNijenhuisOperators:
    def test_identity(self):
        assert is_nijenhuis_operator_lie(HEIS, Matrix.identity(3))
        assert deformed_bracket(HEIS, Matrix.identity(3)) == HEIS

    def test_zero(self):
        assert deformed_bracket(HEIS, Matrix.zero(3, 3)).is_abelian()

    def test_refuses_non_nijenhuis(self):
        L = ALGEBRAS["sl2"]
        N = Matrix.from_rows([[0, 1, 0], [0, 0, 0], [1, 0, 0]])
        assert not is_nijenhuis_operator_lie(L, N)
        with pytest.raises(ValueError):
            deformed_bracket(L, N)

    @pytest.mark.parametrize("name,T", sorted(corpus_operators().items()))
    def test_block_operator_on_semidirect(self, name, T):
        """N_T = (0 T; 0 0) is Nijenhuis and its deformed bracket encodes V^c and rho_bar."""
        rep = T.rep
        n, m = rep.algebra.dim, rep.dimV
        S = semidirect_product(rep)
        rows = [[0] * n + list(T.matrix.row(i)) for i in range(n)] + [[0] * (n + m) for _ in range(m)]
        N = Matrix.from_rows(rows)
        assert is_nijenhuis_operator_lie(S, N)
        D = deformed_bracket(S, N)
        assert validate_lie(D) == []
        Vc, rb = sub_adjacent_lie(T), rho_bar(T)
        for a in range(m):
            for b in range(m):
                assert D.basis_bracket(n + a, n + b) == (0,) * n + Vc.basis_bracket(a, b)
            for x in range(n):
                # [u, x]_N = rho_bar(u) x placed in the g-slot
                assert D.basis_bracket(n + a, x) == rb.act_basis(unit(m, a), x) + (0,) * m

    def test_deformed_is_lie_for_random_nijenhuis(self):
        # N = T_x for an idempotent-like diagonal on dim2 is Nijenhuis
        N = Matrix.from_rows([[1, 0], [0, 0]])
        assert is_nijenhuis_operator_lie(DIM2, N)
        assert validate_lie(deformed_bracket(DIM2, N)) == []

    def test_lie_homomorphism(self):
        assert is_lie_homomorphism(DIM2, Matrix.identity(2))
        assert not is_lie_homomorphism(DIM2, Matrix.from_rows([[0, 1], [1, 0]]))
