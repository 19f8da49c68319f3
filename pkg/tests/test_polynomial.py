import pytest
from hypothesis import given
from hypothesis import strategies as st

from dpcolor.polynomial import M, IntPolynomial

coeff_lists = st.lists(st.integers(-50, 50), max_size=6)


def test_examples():
    assert ((M - 1) ** 2 * M)(3) == 12
    p = M**3 - 2 * M + 7
    assert (p - p).is_zero and (p - p).degree is None
    assert str(M**4 - 4 * M**3 + 6 * M**2 - 3 * M) == "m^4 - 4m^3 + 6m^2 - 3m"
    assert str(IntPolynomial()) == "0"
    assert str(-M + 1) == "-m + 1"
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)


@given(coeff_lists, coeff_lists, st.integers(-5, 5))
def test_ring_ops_agree_with_evaluation(a, b, x):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p * q) == (q * p)


@given(coeff_lists)
def test_interpolation_recovers(a):
    p = IntPolynomial(a)
    size = (p.degree or 0) + 1
    assert IntPolynomial.interpolate([p(m) for m in range(size)]) == p
    assert IntPolynomial.interpolate([p(m) for m in range(size + 3)]) == p


@given(coeff_lists, st.lists(st.integers(-9, 9), min_size=1, max_size=3))
def test_exact_division(a, b):
    q = IntPolynomial(b[:-1] + [1])  # monic divisor
    p = IntPolynomial(a) * q
    assert p.exact_div(q) == IntPolynomial(a)
    quot, rem = (p + 1).divmod(q)
    assert quot * q + rem == p + 1


def test_division_failures():
    with pytest.raises(ArithmeticError):
        (M + 1).exact_div(M)
    with pytest.raises(ArithmeticError):
        (M + 1).divmod(2 * M)
    with pytest.raises(ZeroDivisionError):
        M.divmod(IntPolynomial())


def test_json_round_trip():
    p = M**4 - 4 * M**3 + 6 * M**2 - 3 * M
    assert p.to_json() == "[0, -3, 6, -4, 1]"
    assert IntPolynomial.from_json(p.to_json()) == p
