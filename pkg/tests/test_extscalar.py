"""Extended-exponent scalar arithmetic."""

import math

import pytest

from skeinvol.extscalar import ExtScalar, SignLogReal, rel_diff


def test_normalization_window():
    for z, e in [(3 + 4j, 0), (1e-200, 50), (-7j, -3), (0.5, 0)]:
        x = ExtScalar(z, e)
        a = max(abs(x.m.real), abs(x.m.imag))
        assert 0.5 <= a < 1.0


def test_zero_is_canonical():
    z = ExtScalar(0j, 12345)
    assert z.is_zero()
    assert z.m == 0j and z.e == 0
    assert z.log_abs() == -math.inf


def test_round_trip_ordinary_values():
    for z in (1.0, -2.618, 3 + 4j, -1e-12j, 12345.678):
        got = ExtScalar.from_complex(z).to_complex()
        assert abs(got - z) <= 1e-15 * abs(z)


def test_from_log_quadrants():
    # sign * (-i)^quadrant * exp(log): the branch used by vertex weights
    want = {0: 1.0, 1: -1j, 2: -1.0, 3: 1j}
    for quad, phase in want.items():
        x = ExtScalar.from_log(0.0, sign=1.0, quadrant=quad)
        assert abs(x.to_complex() - phase) < 1e-15
    x = ExtScalar.from_log(2.5, sign=-1.0, quadrant=1)
    assert abs(x.to_complex() - (-1.0) * (-1j) * math.exp(2.5)) < 1e-12


def test_huge_exponents_survive():
    big = ExtScalar.from_log(5000.0)
    assert big.to_complex() == complex(math.inf, 0.0)  # collapse overflows...
    assert abs(big.log_abs() - 5000.0) < 1e-9  # ...but the log view is exact
    prod = big * ExtScalar.from_log(-5000.0)
    assert abs(prod.to_complex() - 1.0) < 1e-12


def test_mul_adds_exponents():
    a = ExtScalar(0.75, 100)
    b = ExtScalar(0.75, -40)
    c = a * b
    assert abs(c.log_abs() - (a.log_abs() + b.log_abs())) < 1e-12


def test_add_and_sub():
    a = ExtScalar.from_complex(3.0)
    b = ExtScalar.from_complex(-1.0 + 2j)
    assert abs((a + b).to_complex() - (2 + 2j)) < 1e-15
    assert abs((a - b).to_complex() - (4 - 2j)) < 1e-15
    # a vastly smaller addend is absorbed without error
    tiny = ExtScalar(0.5, -5000)
    assert (a + tiny).to_complex() == 3.0


def test_pow_and_abs2():
    x = ExtScalar.from_complex(1 + 1j)
    assert abs((x ** 5).to_complex() - (1 + 1j) ** 5) < 1e-12
    assert abs(x.abs2().to_complex() - 2.0) < 1e-15
    with pytest.raises(TypeError):
        x ** -1


def test_real_ratio():
    # |im| / max(|re|, |im|): 0 for exactly real, 1 once imaginary dominates
    assert ExtScalar.from_complex(5.0).real_ratio() == 0.0
    assert ExtScalar.from_complex(5j).real_ratio() == 1.0
    assert ExtScalar.from_complex(4 + 3j).real_ratio() == pytest.approx(0.75)
    assert ExtScalar.from_complex(3 + 4j).real_ratio() == 1.0


def test_rel_diff():
    a = ExtScalar.from_complex(1.0)
    b = ExtScalar.from_complex(1.0 + 1e-12)
    assert rel_diff(a, a) == 0.0
    assert 0 < rel_diff(a, b) < 1e-11
    assert rel_diff(ExtScalar(), ExtScalar()) == 0.0


def test_signlogreal():
    x = SignLogReal(-2.0, math.log(7.0))
    assert x.sign == -1
    assert abs(x.log - math.log(7.0)) < 1e-15
    zero = SignLogReal(0)
    assert zero.sign == 0 and zero.log == 0.0
