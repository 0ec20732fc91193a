from fractions import Fraction
from math import factorial

import pytest

from beta_exact.bernoulli_euler import (
    TABLE_MAX_ENV,
    BernoulliTable,
    EulerTable,
    TableCapacityError,
    bernoulli,
    bernoulli_poly,
    default_capacity,
    euler_from_bernoulli,
    euler_number,
)

N_ORACLE = 60


def series_reciprocal(coeffs, n):
    """Coefficients of 1/f for a power series f with f(0) != 0."""
    inv = [Fraction(1) / coeffs[0]]
    for m in range(1, n + 1):
        s = sum(coeffs[i] * inv[m - i] for i in range(1, m + 1) if i < len(coeffs))
        inv.append(-s / coeffs[0])
    return inv


@pytest.fixture(scope="module")
def gf_bernoulli():
    # x/(e^x - 1) = 1 / sum_{n>=0} x^n/(n+1)!
    inv = series_reciprocal([Fraction(1, factorial(n + 1)) for n in range(N_ORACLE + 1)], N_ORACLE)
    return [c * factorial(n) for n, c in enumerate(inv)]


@pytest.fixture(scope="module")
def gf_euler():
    # 2/(e^x + e^-x) = 1 / sum_{n>=0} x^(2n)/(2n)!
    cosh = [Fraction(1, factorial(n)) if n % 2 == 0 else Fraction(0) for n in range(N_ORACLE + 1)]
    inv = series_reciprocal(cosh, N_ORACLE)
    return [c * factorial(n) for n, c in enumerate(inv)]


@pytest.mark.parametrize("n, expected", [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 6)),
                                         (3, 0), (4, Fraction(-1, 30)), (6, Fraction(1, 42))])
def test_bernoulli_examples(n, expected):
    assert bernoulli(n) == expected


def test_bernoulli_matches_generating_function(gf_bernoulli):
    table = BernoulliTable(N_ORACLE)
    assert table.values == gf_bernoulli


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 0), (2, -1), (4, 5), (6, -61), (8, 1385)])
def test_euler_examples(n, expected):
    assert euler_number(n) == expected


def test_euler_matches_generating_function(gf_euler):
    assert EulerTable(N_ORACLE).values == gf_euler


@pytest.mark.parametrize(
    "n, x, expected",
    [(0, Fraction(7, 3), 1), (2, Fraction(1, 2), Fraction(-1, 12)), (2, 0, Fraction(1, 6)),
     (3, Fraction(1, 2), 0), (1, 1, Fraction(1, 2))],
)
def test_bernoulli_poly_examples(n, x, expected):
    assert bernoulli_poly(n, x) == expected


def test_bernoulli_poly_against_expanded_b2():
    for x in (Fraction(-3, 7), Fraction(0), Fraction(5, 2)):
        assert bernoulli_poly(2, x) == x * x - x + Fraction(1, 6)


@pytest.mark.parametrize("l, expected", [(0, 1), (1, -1), (2, 5), (3, -61)])
def test_euler_from_bernoulli_examples(l, expected):
    assert euler_from_bernoulli(l) == expected


def test_half_argument_identity():
    for n in range(1, 41):
        assert bernoulli_poly(2 * n, Fraction(1, 2)) == (Fraction(2) ** (1 - 2 * n) - 1) * bernoulli(2 * n)


def test_euler_identity_against_secant_recurrence():
    for l in range(0, 41):
        assert euler_from_bernoulli(l) == euler_number(2 * l)


def test_table_invariants():
    b = BernoulliTable(200).values
    e = EulerTable(200).values
    assert b[0] == 1 and b[1] == Fraction(-1, 2)
    assert all(b[2 * k + 1] == 0 for k in range(1, 100))
    assert all((b[2 * n] > 0) == (n % 2 == 1) for n in range(1, 101))
    assert e[0] == 1
    assert all(v.denominator == 1 for v in e)
    assert all(e[2 * k + 1] == 0 for k in range(100))
    assert all((e[2 * n] > 0) == (n % 2 == 0) for n in range(1, 101))


def test_capacity_error():
    small = BernoulliTable(10)
    assert small[10] == Fraction(5, 66)
    with pytest.raises(TableCapacityError):
        small[12]
    with pytest.raises(TableCapacityError):
        euler_number(20, EulerTable(10))
    with pytest.raises(TableCapacityError):
        euler_from_bernoulli(6, BernoulliTable(10))


def test_capacity_from_environment(monkeypatch):
    monkeypatch.setenv(TABLE_MAX_ENV, "12")
    assert default_capacity() == 12
    assert BernoulliTable().n_max == 12
    with pytest.raises(TableCapacityError):
        bernoulli(14)
    monkeypatch.setenv(TABLE_MAX_ENV, "zero")
    with pytest.raises(ValueError):
        default_capacity()
