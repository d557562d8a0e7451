"""Exact integer and rational arithmetic with a capped factorial cache.

Rationals are :class:`fractions.Fraction` values, which already keep the
reduced form with a positive denominator.  The helpers here add the
contract-level checks and the decimal display used in reports.
"""

from __future__ import annotations

import decimal
import os
import threading
from fractions import Fraction
from math import gcd

from .errors import DivisionByZeroError, ResourceLimitError

DEFAULT_FACTORIAL_CAP = 10_000
DISPLAY_DIGITS = 12

Rational = Fraction


def _cap_from_env():
    raw = os.environ.get("FACTINEQ_FACTORIAL_CAP")
    if raw is None:
        return DEFAULT_FACTORIAL_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ResourceLimitError(f"FACTINEQ_FACTORIAL_CAP is not an integer: {raw!r}") from None
    if cap < 0:
        raise ResourceLimitError(f"FACTINEQ_FACTORIAL_CAP must be nonnegative, got {cap}")
    return cap


class FactorialCache:
    """Append-only table of m! for 0 <= m <= high-water mark.

    Growth is guarded by a lock so one cache can be shared between threads;
    entries never change once written.
    """

    def __init__(self, cap=None):
        self.cap = _cap_from_env() if cap is None else cap
        self._table = [1]
        self._lock = threading.Lock()

    @property
    def high_water(self):
        return len(self._table) - 1

    def __call__(self, m):
        return self.factorial(m)

    def factorial(self, m):
        if m < 0:
            raise ValueError(f"factorial of negative integer {m}")
        if m > self.cap:
            raise ResourceLimitError(f"factorial({m}) exceeds the factorial cap {self.cap}")
        table = self._table
        if m < len(table):
            return table[m]
        with self._lock:
            while len(table) <= m:
                table.append(len(table) * table[-1])
        return table[m]


_default_cache = FactorialCache()


def default_cache():
    return _default_cache


def set_factorial_cap(cap):
    """Change the cap of the process-wide cache; cached values are kept."""
    if cap < 0:
        raise ValueError("factorial cap must be nonnegative")
    _default_cache.cap = cap


def factorial(m):
    """Exact m!, memoized in the process-wide cache."""
    return _default_cache.factorial(m)


def rat(num, den=1):
    """Build a reduced rational ``num/den``; ``den == 0`` raises."""
    if den == 0:
        raise DivisionByZeroError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def rat_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZeroError(f"division of {a} by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def is_normalized(q):
    return q.denominator > 0 and gcd(abs(q.numerator), q.denominator) == 1


def to_decimal(q, digits=DISPLAY_DIGITS):
    """Approximate decimal string of ``q``: ``digits`` significant, half-even."""
    q = Fraction(q)
    ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN, Emax=decimal.MAX_EMAX, Emin=decimal.MIN_EMIN)
    value = ctx.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator))
    return format(value, "")


def format_rat(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
