import cmath
import math

import pytest
from hypothesis import given, strategies as st

from koebe.polyfamilies import (
    FamilySpec,
    RealPolynomial,
    dss_coeffs,
    dss_coeffs_iv,
    dss_coeffs_trig,
    eval_complex,
    suffridge_coeffs,
)

from conftest import SQRT5


def test_real_polynomial_trims_and_degree():
    assert RealPolynomial([1.0, 2.0, 0.0, 0.0]).degree == 1
    assert RealPolynomial([]).degree == -1
    assert RealPolynomial([0.0, 0.0]).is_zero()
    with pytest.raises(ValueError):
        RealPolynomial([math.inf])


def test_family_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec.dss(0)
    with pytest.raises(ValueError):
        FamilySpec.suffridge(3, 4)
    with pytest.raises(ValueError):
        FamilySpec.suffridge(3, 0)
    assert FamilySpec.suffridge(3, 2).degree == 3


@pytest.mark.parametrize(
    "N,expected",
    [
        (1, [0, 1]),
        (2, [0, 1, 0.5]),
        (3, [0, 1, 2 / SQRT5, 0.5 * (1 - 1 / SQRT5)]),
        (4, [0, 1, 7 / 6, 2 / 3, 1 / 6]),
    ],
)
def test_dss_golden_values(N, expected):
    assert dss_coeffs(N).coeffs == pytest.approx(expected, abs=1e-12)


def test_dss_6_golden_value(p6_golden):
    assert dss_coeffs(6).coeffs == pytest.approx(p6_golden, abs=1e-12)


def test_dss_5_golden_value():
    c = math.cos(math.pi / 7)
    den = 40 * c**3 - 30 * c - 32 * c**2 + 7
    expected = [
        0,
        1,
        (8 - 40 * c**2 + 32 * c**3 - 24 * c) / den,
        (24 * c**3 - 28 * c**2 - 18 * c + 4) / den,
        (16 * c**3 - 16 * c**2 - 12 * c + 4) / den,
        (8 * c**3 - 4 * c**2 - 6 * c + 1) / den,
    ]
    assert dss_coeffs(5).coeffs == pytest.approx(expected, abs=1e-12)


def test_dss_rejects_zero():
    with pytest.raises(ValueError):
        dss_coeffs(0)
    with pytest.raises(ValueError):
        dss_coeffs_trig(0)


def test_trig_examples():
    assert dss_coeffs_trig(1).coeffs == pytest.approx([0, 1], abs=1e-14)
    assert dss_coeffs_trig(2).coeffs == pytest.approx([0, 1, 0.5], abs=1e-14)
    assert dss_coeffs_trig(5).coeffs == pytest.approx(dss_coeffs(5).coeffs, abs=1e-12)


@pytest.mark.parametrize("N", range(1, 51))
def test_two_coefficient_routes_agree(N):
    a, b = dss_coeffs(N).coeffs, dss_coeffs_trig(N).coeffs
    assert len(a) == len(b) == N + 1
    assert max(abs(x - y) for x, y in zip(a, b)) < 1e-11
    assert a[-1] > 0


@pytest.mark.parametrize("N", [1, 2, 5, 9, 20])
def test_interval_coefficients_enclose_float_ones(N):
    enc = dss_coeffs_iv(N)
    for iv, c in zip(enc, dss_coeffs(N).coeffs):
        assert iv.contains(c)
        assert iv.width < 1e-7


@pytest.mark.parametrize("N", [1, 4, 7, 12])
def test_trig_form_extra_term_vanishes(N):
    m = N + 2
    k = N + 1
    term = ((N - k + 3) * math.sin((k + 1) * math.pi / m) - (N - k + 1) * math.sin((k - 1) * math.pi / m)) * math.sin(
        k * math.pi / m
    )
    assert abs(term) < 1e-14


def test_suffridge_examples():
    assert suffridge_coeffs(1, 1).coeffs == (0.0, 1.0)
    s3 = suffridge_coeffs(3, 1)
    assert s3.coeffs[3] == pytest.approx((1 / 3) * math.sin(3 * math.pi / 4) / math.sin(math.pi / 4), abs=1e-15)
    assert abs(eval_complex(suffridge_coeffs(5, 1), -1)) == pytest.approx(0.3215, abs=5e-5)
    with pytest.raises(ValueError):
        suffridge_coeffs(2, 3)


@pytest.mark.parametrize("n", range(1, 40))
def test_suffridge_last_coefficient_is_one_over_n(n):
    assert suffridge_coeffs(n, 1).coeffs[n] == pytest.approx(1 / n, abs=1e-12)


def test_suffridge_j_general():
    s = suffridge_coeffs(5, 2)
    k = 3
    assert s.coeffs[k] == pytest.approx((1 - (k - 1) / 5) * math.sin(2 * math.pi * k / 6) / math.sin(2 * math.pi / 6))


def test_eval_complex_examples():
    assert eval_complex(dss_coeffs(2), 1) == pytest.approx(1.5)
    assert eval_complex(dss_coeffs(4), -1) == pytest.approx(-1 / 3, abs=1e-15)
    assert eval_complex(dss_coeffs(3), -1) == pytest.approx(-(3 - SQRT5) / 2, abs=1e-15)


@given(
    st.integers(1, 20),
    st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False),
)
def test_conjugate_symmetry(N, z):
    p = dss_coeffs(N)
    assert eval_complex(p, z.conjugate()) == pytest.approx(eval_complex(p, z).conjugate(), abs=1e-12)
