from fractions import Fraction

import pytest

from ellfrob.errors import SingularBasisImages
from ellfrob.linalg import Matrix, padic_solve_overdetermined
from ellfrob.padic import Zp


def _faddeev_charpoly(rows):
    """Independent oracle: Faddeev-LeVerrier over Fraction."""
    n = len(rows)
    A = [[Fraction(x) for x in r] for r in rows]

    def matmul(X, Y):
        return [
            [sum(X[i][k] * Y[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]

    M = [[Fraction(0)] * n for _ in range(n)]
    c = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        for i in range(n):
            M[i][i] += c[k - 1]
        M = matmul(A, M)
        c[k] = -Fraction(sum(M[i][i] for i in range(n)), k)
    # det(T I - A) = sum c[k] T^{n-k}
    return [c[n - k] for k in range(n + 1)]  # ascending


def test_charpoly_identity():
    R = Zp(5, 4)
    M = Matrix.identity(2, R.zero(), R.one())
    cp = M.charpoly()
    assert [c.lift_centered() for c in cp] == [1, -2, 1]


def test_charpoly_diagonal():
    R = Zp(5, 4)
    M = Matrix([[R(2), R(0)], [R(0), R(3)]], R.zero(), R.one())
    cp = M.charpoly()
    assert [c.lift_centered() for c in cp] == [6, -5, 1]


def test_charpoly_matches_exact_integer_oracle():
    import random

    rng = random.Random(7)
    R = Zp(7, 8)
    for _ in range(5):
        rows = [[rng.randrange(-20, 20) for _ in range(4)] for _ in range(4)]
        M = Matrix([[R(x) for x in r] for r in rows], R.zero(), R.one())
        got = M.charpoly()
        want = _faddeev_charpoly(rows)
        for g, w in zip(got, want):
            assert w.denominator == 1
            assert (g.lift() - int(w)) % 7**g.prec == 0


def test_matmul_and_det():
    R = Zp(5, 6)
    A = Matrix([[R(1), R(2)], [R(3), R(4)]], R.zero(), R.one())
    B = A * A
    assert B[0, 0].lift_centered() == 7
    assert A.det().lift_centered() == -2


def test_padic_solve_basic():
    R = Zp(7, 5)
    cols = [[R(1), R(0), R(2)], [R(0), R(1), R(3)]]
    x = [R(4), R(5)]
    target = [
        cols[0][i] * x[0] + cols[1][i] * x[1] for i in range(3)
    ]
    sols, pivots, _ = padic_solve_overdetermined(cols, [target], R.zero())
    assert [s.lift() for s in sols[0]] == [4, 5]
    assert pivots == [0, 0]


def test_padic_solve_detects_dependence():
    R = Zp(7, 5)
    cols = [[R(1), R(2)], [R(2), R(4)]]
    with pytest.raises(SingularBasisImages):
        padic_solve_overdetermined(cols, [[R(1), R(1)]], R.zero())


def test_padic_solve_inconsistent_residual():
    R = Zp(7, 5)
    cols = [[R(1), R(0), R(0)]]
    with pytest.raises(SingularBasisImages):
        padic_solve_overdetermined(cols, [[R(0), R(0), R(1)]], R.zero())
