"""Exact Bernoulli numbers, Bernoulli polynomials and Euler numbers.

The two tables come from unrelated recurrences (the binomial recurrence for
B_n and the secant recurrence for E_n), so identities linking them are real
checks rather than restatements.
"""

from __future__ import annotations

import os
import threading
from fractions import Fraction
from functools import lru_cache

from .exact import binomial

__all__ = [
    "DEFAULT_TABLE_MAX",
    "TABLE_MAX_ENV",
    "TableCapacityError",
    "BernoulliTable",
    "EulerTable",
    "default_capacity",
    "default_bernoulli_table",
    "default_euler_table",
    "bernoulli",
    "bernoulli_poly",
    "euler_number",
    "euler_from_bernoulli",
]

DEFAULT_TABLE_MAX = 200
TABLE_MAX_ENV = "BETA_EXACT_TABLE_MAX"


class TableCapacityError(IndexError):
    """An index past the configured table size was requested."""


def default_capacity() -> int:
    raw = os.environ.get(TABLE_MAX_ENV)
    if raw is None:
        return DEFAULT_TABLE_MAX
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{TABLE_MAX_ENV} must be an integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"{TABLE_MAX_ENV} must be >= 1")
    return n


class _Table:
    """Lazily filled dense table of rationals for indices 0..n_max."""

    kind = "table"

    def __init__(self, n_max: int | None = None):
        self.n_max = default_capacity() if n_max is None else n_max
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        self._values: list[Fraction] = []
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError(f"negative index {n}")
        if n > self.n_max:
            raise TableCapacityError(
                f"{self.kind} index {n} exceeds table capacity {self.n_max}"
            )
        if n >= len(self._values):
            with self._lock:
                while len(self._values) <= n:
                    self._values.append(self._next(len(self._values)))
        return self._values[n]

    def __len__(self) -> int:
        return self.n_max + 1

    @property
    def values(self) -> list[Fraction]:
        """All entries 0..n_max (forces the full table)."""
        self[self.n_max]
        return list(self._values)

    def _next(self, m: int) -> Fraction:
        raise NotImplementedError


class BernoulliTable(_Table):
    """B_0..B_{n_max} with B_1 = -1/2, from sum_{k<=m} C(m+1,k) B_k = 0."""

    kind = "Bernoulli"

    def _next(self, m: int) -> Fraction:
        if m == 0:
            return Fraction(1)
        b = self._values
        s = Fraction(0)
        for k in range(m):
            if b[k]:
                s += binomial(m + 1, k) * b[k]
        return -s / (m + 1)


class EulerTable(_Table):
    """E_0..E_{n_max} from the secant recurrence sum_j C(2n,2j) E_{2j} = 0."""

    kind = "Euler"

    def _next(self, m: int) -> Fraction:
        if m == 0:
            return Fraction(1)
        if m % 2:
            return Fraction(0)
        e = self._values
        s = Fraction(0)
        for j in range(0, m, 2):
            s += binomial(m, j) * e[j]
        return -s


@lru_cache(maxsize=None)
def _shared_bernoulli(n_max: int) -> BernoulliTable:
    return BernoulliTable(n_max)


@lru_cache(maxsize=None)
def _shared_euler(n_max: int) -> EulerTable:
    return EulerTable(n_max)


def default_bernoulli_table() -> BernoulliTable:
    return _shared_bernoulli(default_capacity())


def default_euler_table() -> EulerTable:
    return _shared_euler(default_capacity())


def bernoulli(n: int, table: BernoulliTable | None = None) -> Fraction:
    table = default_bernoulli_table() if table is None else table
    return table[n]


def bernoulli_poly(n: int, x: Fraction | int, table: BernoulliTable | None = None) -> Fraction:
    """B_n(x) = sum_k C(n,k) B_k x^(n-k), evaluated exactly."""
    table = default_bernoulli_table() if table is None else table
    x = Fraction(x)
    total = Fraction(0)
    for k in range(n + 1):
        bk = table[k]
        if bk:
            total += binomial(n, k) * bk * x ** (n - k)
    return total


def euler_number(n: int, table: EulerTable | None = None) -> Fraction:
    table = default_euler_table() if table is None else table
    return table[n]


def euler_from_bernoulli(l: int, btable: BernoulliTable | None = None) -> Fraction:
    """E_{2l} = 1 - 1/(2l+1) * sum_{j=1}^{l} C(2l+1, 2j) 4^j (4^j - 1) B_{2j}."""
    if l < 0:
        raise ValueError("l must be >= 0")
    btable = default_bernoulli_table() if btable is None else btable
    s = Fraction(0)
    for j in range(1, l + 1):
        four_j = 4**j
        s += binomial(2 * l + 1, 2 * j) * four_j * (four_j - 1) * btable[2 * j]
    return 1 - s / (2 * l + 1)
