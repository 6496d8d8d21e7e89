import pytest

from ellfrob.errors import CurveFileError
from ellfrob.family import (
    SplitMix64,
    WeierstrassFamily,
    format_curve_file,
    parse_curve_file,
    random_family,
    validate,
    weighted_params,
)
from ellfrob import fppoly as fp


def test_splitmix64_published_vector():
    # reference sequence for seed 1234567 (SplitMix64 as published)
    rng = SplitMix64(1234567)
    assert rng.next_u64() == 6457827717110365317
    assert rng.next_u64() == 3203168211198807973


def test_squared_discriminant_rejected():
    # a = 0, b = y^6 + 1: delta = 27 (y^6+1)^2 is not squarefree
    fam = WeierstrassFamily(7, [], [1, 0, 0, 0, 0, 0, 1])
    rep = validate(fam)
    assert not rep.delta_squarefree
    assert not rep.is_valid()
    assert "discriminant not squarefree" in rep.failures()


def test_small_valid_family():
    # p=7, a = y, b = y^6 + 3
    fam = WeierstrassFamily(7, [0, 1], [3, 0, 0, 0, 0, 0, 1])
    rep = validate(fam)
    expected = fp.degree(fp.gcd(fam.delta, fp.derivative(fam.delta, 7), 7)) == 0
    assert rep.delta_squarefree == expected
    assert rep.delta_nonzero_at_origin


def test_delta_vanishing_at_zero_rejected():
    # b(0) and a(0) chosen so delta(0) = 4 a(0)^3 + 27 b(0)^2 = 0 mod 7:
    # a(0)=3, b(0)=1: 4*27+27 = 135 = 0 mod 7? 135 mod 7 = 2. pick by search.
    found = None
    for a0 in range(7):
        for b0 in range(7):
            if (4 * a0**3 + 27 * b0**2) % 7 == 0 and (a0, b0) != (0, 0):
                found = (a0, b0)
                break
        if found:
            break
    a0, b0 = found
    fam = WeierstrassFamily(7, [a0, 1, 1], [b0, 1, 2, 0, 0, 1, 1])
    rep = validate(fam)
    assert not rep.delta_nonzero_at_origin


def test_random_family_deterministic_and_valid():
    f1 = random_family(7, 6, 1)
    f2 = random_family(7, 6, 1)
    assert f1.a == f2.a and f1.b == f2.b
    assert validate(f1).is_valid()
    f3 = random_family(5, 6, 99)
    assert validate(f3).is_valid()


def test_random_family_golden_value():
    # frozen from the first computation with the fixed SplitMix64 stream
    fam = random_family(7, 6, 1)
    assert fam.a == [2, 0, 6, 3]
    assert fam.b == [4, 6, 5, 6, 1, 0, 1]


def test_weighted_params_examples():
    fam6 = random_family(7, 6, 2)
    assert weighted_params(fam6) == (2, 1, 3, 6, 8, 1)
    fam12 = random_family(7, 12, 3)
    assert weighted_params(fam12) == (4, 1, 6, 12, 20, 1)
    fam30 = random_family(7, 30, 4)
    assert weighted_params(fam30) == (10, 1, 15, 30, 56, 2)


def test_delta_degree_and_leading_coefficient():
    # deg(4a^3) <= 3d/2 < 2d, so the top coefficient is always 27*lead(b)^2
    for seed in range(6):
        fam = random_family(7, 6, seed)
        assert fp.degree(fam.delta) == 2 * fam.d
        assert fam.delta[-1] == (27 * fam.b[-1] ** 2) % 7


def test_good_reduction_at_infinity_transform():
    # delta~(v) = v^(12e) delta(1/v) has nonzero constant term
    for seed in range(4):
        fam = random_family(5, 6, seed)
        assert fam.delta[2 * fam.d] != 0


def test_curve_file_roundtrip():
    fam = random_family(7, 6, 5)
    text = format_curve_file(fam)
    back = parse_curve_file(text)
    assert back.p == 7 and back.a == fam.a and back.b == fam.b


def test_curve_file_errors_carry_line_numbers():
    with pytest.raises(CurveFileError) as ei:
        parse_curve_file("p 7\na 1 x\nb 1\n")
    assert ei.value.lineno == 2
    with pytest.raises(CurveFileError):
        parse_curve_file("a 1 2\np 7\nb 3\n")
    with pytest.raises(CurveFileError) as ei2:
        parse_curve_file("p 7\na 9\nb 1 1 1 1 1 1 1\n")
    assert ei2.value.lineno == 2
