from hypothesis import given, settings, strategies as st

from glhecke.exact_linalg import (
    Matrix,
    char_poly,
    determinant,
    generalized_eigenspace,
    nullspace,
    rational_roots,
    solve_linear,
    symmetric_signature,
)
from glhecke.rational import Rational, rat


def test_solve_identity_unique():
    s = solve_linear(Matrix.identity(2), Matrix.from_rows([[2], [3]]))
    assert s.consistent
    assert s.particular.to_lists() == [[rat(2)], [rat(3)]]
    assert s.nullity == 0


def test_solve_underdetermined():
    s = solve_linear(Matrix.from_rows([[1, 1]]), Matrix.from_rows([[0]]))
    assert s.consistent
    assert s.particular.to_lists() == [[rat(0)], [rat(0)]]
    assert len(s.nullspace) == 1
    v = s.nullspace[0]
    assert v[0] + v[1] == 0 and any(v)


def test_solve_inconsistent():
    s = solve_linear(Matrix.from_rows([[1], [2]]), Matrix.from_rows([[1], [1]]))
    assert not s.consistent


def test_solve_shape_mismatch():
    try:
        solve_linear(Matrix.identity(2), Matrix.from_rows([[1]]))
    except ValueError:
        return
    raise AssertionError("dimension mismatch not rejected")


def test_solve_exactness_property():
    # A x = B exactly for the particular solution; A v = 0 for nullspace
    A = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    B = Matrix.from_rows([[6], [12], [2]])
    s = solve_linear(A, B)
    assert s.consistent
    assert (A * s.particular).to_lists() == B.to_lists()
    for v in s.nullspace:
        assert all(x == 0 for x in A.mat_vec(v))


def test_generalized_eigenspace_nilpotent():
    assert len(generalized_eigenspace(Matrix.from_rows([[0, 1], [0, 0]]), 0)) == 2


def test_generalized_eigenspace_diagonal():
    A = Matrix.diagonal([1, 2])
    assert len(generalized_eigenspace(A, 1)) == 1
    assert len(generalized_eigenspace(A, 3)) == 0


def test_signature_examples():
    assert symmetric_signature(Matrix.diagonal([1, -1])) == (1, 1, 0)
    assert symmetric_signature(Matrix.diagonal([2, 3, 5])) == (3, 0, 0)
    # eigenvalues +-1 by hand
    assert symmetric_signature(Matrix.from_rows([[0, 1], [1, 0]])) == (1, 1, 0)


def test_signature_rejects_nonsymmetric():
    try:
        symmetric_signature(Matrix.from_rows([[0, 1], [0, 0]]))
    except ValueError:
        return
    raise AssertionError


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9),
       st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_signature_congruence_invariance(diag_seed, p_seed):
    # S -> P^T S P preserves the Sylvester signature for invertible P
    S = Matrix.diagonal(diag_seed[:3])
    P = Matrix.from_rows([p_seed[0:3], p_seed[3:6], p_seed[6:9]])
    if determinant(P) == 0:
        return
    assert symmetric_signature(P.transpose() * S * P) == symmetric_signature(S)


def test_char_poly_and_roots():
    A = Matrix.from_rows([[Rational(1, 2), 0], [0, Rational(-3, 2)]])
    roots, split = rational_roots(char_poly(A))
    assert split and sorted(roots) == [Rational(-3, 2), Rational(1, 2)]


def test_rational_roots_multiplicity():
    # (t-1)^2 (t+2) = t^3 - 3t + 2
    roots, split = rational_roots([2, -3, 0, 1])
    assert split and sorted(roots) == [rat(-2), rat(1), rat(1)]


def test_rational_roots_irrational_guard():
    roots, split = rational_roots([-2, 0, 1])  # t^2 - 2
    assert not split and roots == []


def test_nullspace_rank():
    A = Matrix.from_rows([[1, 2], [2, 4]])
    ker = nullspace(A)
    assert len(ker) == 1
    assert all(x == 0 for x in A.mat_vec(ker[0]))
