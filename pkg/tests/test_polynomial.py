import math

import pytest

from maxplanar.polynomial import InexactDivision, Polynomial, evaluate

T = Polynomial([0, 1])


def test_trimming_and_degree():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial().degree == -1
    assert Polynomial.monomial(3).degree == 3


def test_falling_factorial():
    ff = Polynomial.falling_factorial(4)
    assert ff.coeffs == (0, -6, 11, -6, 1)
    assert [ff(t) for t in range(6)] == [0, 0, 0, 0, 24, 120]
    assert Polynomial.falling_factorial(0) == Polynomial([1])


def test_arithmetic():
    p = T * T - T * 3 + Polynomial([2])  # (t-1)(t-2)
    assert p == (T - Polynomial([1])) * (T - Polynomial([2]))
    assert p + (-p) == Polynomial()
    assert p * 0 == Polynomial()
    assert p * 2 == p + p


def test_exact_division():
    a = Polynomial.falling_factorial(5)
    b = Polynomial.falling_factorial(3)
    q = a.exact_div(b)
    assert q * b == a
    assert q(10) == 7 * 6


def test_inexact_division_is_an_error():
    with pytest.raises(InexactDivision):
        (T * T + Polynomial([1])).exact_div(T)


def test_divmod_remainder():
    q, r = (T * T * T + Polynomial([5])).divmod(T - Polynomial([1]))
    assert r == Polynomial([6])
    assert q * (T - Polynomial([1])) + r == T * T * T + Polynomial([5])


def test_evaluate_is_exact_for_big_values():
    p = Polynomial.falling_factorial(30)
    assert evaluate(p, 10**6) == p(10**6)
    assert evaluate(p, 40) == math.prod(range(11, 41))
    assert evaluate(p, 0) == 0


def test_signs_and_repr():
    ff = Polynomial.falling_factorial(4)
    assert ff.is_monic() and ff.signs_alternate()
    assert repr(ff) == "t^4 - 6t^3 + 11t^2 - 6t"
