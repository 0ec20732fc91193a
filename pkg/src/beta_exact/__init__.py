"""Exact special values of zeta(2n), lambda(2n) and beta(2l-1), with oracles."""

from .bernoulli_euler import (
    BernoulliTable,
    EulerTable,
    TableCapacityError,
    bernoulli,
    bernoulli_poly,
    euler_from_bernoulli,
    euler_number,
)
from .exact import PiMonomial, Rational, binomial, pi_monomial_combine, rational_arith
from .series import beta_series, lambda_series, pi_big, render_decimal, zeta_series
from .special_values import (
    beta_odd_bernoulli,
    beta_odd_euler,
    beta_odd_lambda,
    beta_odd_zeta,
    lambda_even,
    zeta_even_bernoulli,
    zeta_even_recurrence,
)

__version__ = "0.1.0"
