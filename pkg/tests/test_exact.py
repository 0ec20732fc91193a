from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from beta_exact.exact import (
    ExactArithmeticError,
    MixedPiPowerError,
    PiMonomial,
    binomial,
    factorial,
    pi_monomial_combine,
    rational,
    rational_arith,
)

fractions = st.fractions(max_denominator=10**6).filter(lambda f: abs(f) < 10**9)


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


@pytest.mark.parametrize(
    "a, b, op, expected",
    [
        (Fraction(1, 6), Fraction(-1, 30), "add", Fraction(2, 15)),
        (Fraction(5, 1536), Fraction(0), "mul", Fraction(0, 1)),
        (Fraction(3, 4), Fraction(3, 4), "div", Fraction(1, 1)),
        (Fraction(1, 2), Fraction(1, 3), "sub", Fraction(1, 6)),
    ],
)
def test_rational_arith_examples(a, b, op, expected):
    got = rational_arith(a, b, op)
    assert got == expected
    assert (got.numerator, got.denominator) == (expected.numerator, expected.denominator)


def test_zero_is_unique():
    z = rational_arith(Fraction(5, 1536), Fraction(0), "mul")
    assert (z.numerator, z.denominator) == (0, 1)


def test_division_by_zero_is_reported():
    with pytest.raises(ExactArithmeticError):
        rational_arith(Fraction(1, 2), Fraction(0), "div")
    with pytest.raises(ExactArithmeticError):
        rational(3, 0)


def test_unknown_op():
    with pytest.raises(ValueError):
        rational_arith(1, 2, "pow")


@given(fractions, fractions, fractions)
def test_field_laws(a, b, c):
    add = lambda x, y: rational_arith(x, y, "add")  # noqa: E731
    mul = lambda x, y: rational_arith(x, y, "mul")  # noqa: E731
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)


@given(st.integers(-10**12, 10**12), st.integers(1, 10**12))
def test_reduction_invariants(num, den):
    r = rational(num, den)
    assert r.denominator > 0
    from math import gcd

    assert gcd(abs(r.numerator), r.denominator) == 1
    assert rational(r.numerator, r.denominator) == r
    assert Fraction(r) == r


@pytest.mark.parametrize("n, k, expected", [(3, 2, 3), (4, 2, 6), (5, 9, 0), (0, 0, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_pascal():
    for n in range(0, 60):
        row = pascal_row(n)
        assert [binomial(n, k) for k in range(n + 1)] == row


@given(st.integers(0, 200).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_binomial_symmetry(nk):
    n, k = nk
    assert binomial(n, k) == binomial(n, n - k)


def test_factorial():
    assert [factorial(m) for m in range(6)] == [1, 1, 2, 6, 24, 120]
    with pytest.raises(ValueError):
        factorial(-1)


def test_pi_monomial_combine_examples():
    assert pi_monomial_combine([PiMonomial(Fraction(1, 4), 1)]) == PiMonomial(Fraction(1, 4), 1)
    assert pi_monomial_combine([]) == PiMonomial.zero()
    got = pi_monomial_combine([PiMonomial(Fraction(1, 2), 3), PiMonomial(Fraction(-15, 32), 3)])
    assert got == PiMonomial(Fraction(1, 32), 3)


def test_mixed_powers_rejected():
    with pytest.raises(MixedPiPowerError):
        pi_monomial_combine([PiMonomial(Fraction(1), 2), PiMonomial(Fraction(1), 3)])
    # zero terms never conflict
    assert pi_monomial_combine([PiMonomial(Fraction(0), 0), PiMonomial(Fraction(1), 3)]) == \
        PiMonomial(Fraction(1), 3)


def test_canonical_zero_and_negative_power():
    assert PiMonomial(Fraction(0), 7) == PiMonomial.zero()
    assert PiMonomial(Fraction(0), 7).pi_power == 0
    with pytest.raises(ValueError):
        PiMonomial(Fraction(1), -1)


@pytest.mark.parametrize(
    "value, text",
    [
        (PiMonomial(Fraction(5, 1536), 5), "5/1536 * pi^5"),
        (PiMonomial(Fraction(1, 4), 1), "1/4 * pi"),
        (PiMonomial(Fraction(2, 15), 0), "2/15"),
        (PiMonomial(Fraction(-3), 2), "-3/1 * pi^2"),
        (PiMonomial.zero(), "0/1"),
    ],
)
def test_text_rendering_round_trip(value, text):
    assert str(value) == text
    assert PiMonomial.parse(text) == value


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        PiMonomial.parse("pi squared")


@given(fractions, st.integers(0, 5), fractions, st.integers(0, 5))
def test_monomial_equality_is_fieldwise(c1, p1, c2, p2):
    a, b = PiMonomial(c1, p1), PiMonomial(c2, p2)
    same = (a.coeff, a.pi_power) == (b.coeff, b.pi_power)
    assert (a == b) == same
    if a == b:
        assert hash(a) == hash(b)


@given(fractions, fractions, st.integers(0, 3))
def test_monomial_equality_transitive(c, d, p):
    a, b, c3 = PiMonomial(c, p), PiMonomial(Fraction(c), p), PiMonomial(d, p)
    assert a == b
    if b == c3:
        assert a == c3


def test_monomial_products():
    a = PiMonomial(Fraction(1, 8), 2)
    assert a * PiMonomial(Fraction(2), 3) == PiMonomial(Fraction(1, 4), 5)
    assert 4 * a == PiMonomial(Fraction(1, 2), 2)
    assert a.over_pi(2) == PiMonomial(Fraction(1, 8), 0)
    assert a.times_pi(1) == PiMonomial(Fraction(1, 8), 3)
    with pytest.raises(ExactArithmeticError):
        a.over_pi(3)
    with pytest.raises(ExactArithmeticError):
        a / 0
