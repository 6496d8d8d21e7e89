import pytest
from hypothesis import given, settings, strategies as st

from ellfrob.errors import InexactDivision, NonUnitError
from ellfrob.padic import PadicScalar, Zp


def test_mul_identity():
    R = Zp(5, 4)
    assert (R(3) * R(1)).lift() == 3
    assert (R(3) * R(1)).prec == 4


def test_mul_p_times_p_gains_precision():
    R = Zp(5, 4)
    x = R(5) * R(5)
    assert x.lift() == 25
    assert x.prec == 5  # valuation bookkeeping for exact-unit inputs


def test_inverse_examples():
    R = Zp(7, 3)
    assert R(1).inverse() == R(1)
    inv2 = R(2).inverse()
    assert inv2.lift() == 172
    assert (R(2) * inv2).lift() == 1
    with pytest.raises(NonUnitError):
        R(7).inverse()


def test_divide_exact_p_power():
    R = Zp(7, 5)
    x = R(49)
    y = x.divide_exact_p_power(2)
    assert y.lift() == 1 and y.prec == 3
    with pytest.raises(InexactDivision):
        R(3).divide_exact_p_power(1)


def test_add_sub_precision():
    x = PadicScalar(5, 7, 4)
    y = PadicScalar(5, 3, 2)
    assert (x + y).prec == 2
    assert (x - y).prec == 2


def test_int_coercion():
    R = Zp(5, 3)
    assert (R(2) + 3).lift() == 5
    assert (2 * R(2)).lift() == 4
    assert (R(2) * 25).prec == 5  # exact integer factor adds its valuation


@given(
    st.integers(min_value=-10**6, max_value=10**6),
    st.integers(min_value=-10**6, max_value=10**6),
)
@settings(max_examples=200)
def test_ring_ops_match_exact_integers(m, n):
    p, N = 7, 6
    R = Zp(p, N)
    x, y = R(m), R(n)
    mod = p**N
    assert (x + y).lift() == (m + n) % mod
    assert (x - y).lift() == (m - n) % mod
    prod = x * y
    assert prod.lift() % p ** min(prod.prec, N) == (m * n) % p ** min(prod.prec, N)


@given(
    st.integers(min_value=0, max_value=7**6 - 1),
    st.integers(min_value=0, max_value=7**6 - 1),
)
@settings(max_examples=200)
def test_precision_monotone_vs_higher_recompute(m, n):
    # computing at higher precision then truncating must agree with the
    # low-precision result on everything the low result claims
    p = 7
    lo = PadicScalar(p, m, 3) * PadicScalar(p, n, 3)
    hi = PadicScalar(p, m, 6) * PadicScalar(p, n, 6)
    assert hi.lift() % p**lo.prec == lo.lift() % p**lo.prec


def test_from_rational():
    R = Zp(5, 4)
    half = R.from_rational(1, 2)
    assert (half * R(2)).lift() == 1
    with pytest.raises(NonUnitError):
        R.from_rational(1, 5)
