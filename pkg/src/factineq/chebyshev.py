"""Chebyshev's sum inequality on concrete sequences, and the bound it yields.

For x, y monotone in the same sense on 1..n::

    (sum x / n) * (sum y / n) <= sum(x*y) / n

and the reverse when the senses are opposite.  ``derive_bound`` turns a
closed form for sum(x*y) and sum(x) into an explicit bound on sum(y).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DerivationInputError, DomainError
from .expr import Div, Mul, Var, evaluate
from .sequences import SequenceDef, Trend, classify_monotonicity


class Alignment(enum.Enum):
    SAME = "same"
    OPPOSITE = "opposite"
    INDETERMINATE = "indeterminate"


class Relation(enum.Enum):
    LE = "<="
    GE = ">="

    def holds(self, lhs, rhs):
        return lhs <= rhs if self is Relation.LE else lhs >= rhs

    def __str__(self):
        return self.value


def alignment_of(mx, my):
    if Trend.NONE in (mx.trend, my.trend):
        return Alignment.INDETERMINATE
    if (mx.nondecreasing and my.nondecreasing) or (mx.nonincreasing and my.nonincreasing):
        return Alignment.SAME
    return Alignment.OPPOSITE


@dataclass(frozen=True)
class ChebyshevCheck:
    x: SequenceDef
    y: SequenceDef
    n: int
    mean_x: Fraction
    mean_y: Fraction
    mean_xy: Fraction
    alignment: Alignment
    expected: str  # "product <= meanXY", "product >= meanXY", "both" or "n/a"
    satisfied: bool | None  # None when alignment is indeterminate
    equality: bool

    @property
    def product(self):
        return self.mean_x * self.mean_y


def check_chebyshev(x, y, n):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    xs = x.terms(n)
    ys = y.terms(n)
    mean_x = sum(xs, Fraction(0)) / n
    mean_y = sum(ys, Fraction(0)) / n
    mean_xy = sum((a * b for a, b in zip(xs, ys)), Fraction(0)) / n
    product = mean_x * mean_y
    mx = classify_monotonicity(x, n)
    my = classify_monotonicity(y, n)
    alignment = alignment_of(mx, my)
    constant = Trend.CONSTANT in (mx.trend, my.trend)
    if alignment is Alignment.INDETERMINATE:
        expected, satisfied = "n/a", None
    elif constant:
        # A constant sequence is aligned both ways, so both directions must hold.
        expected, satisfied = "both", product == mean_xy
    elif alignment is Alignment.SAME:
        expected, satisfied = "product <= meanXY", product <= mean_xy
    else:
        expected, satisfied = "product >= meanXY", product >= mean_xy
    return ChebyshevCheck(x, y, n, mean_x, mean_y, mean_xy, alignment, expected, satisfied, product == mean_xy)


@dataclass(frozen=True)
class DerivedBound:
    """``sum_{k<=n} y_k  (relation)  rhs(n)`` obtained from Chebyshev."""

    y: SequenceDef
    x: SequenceDef
    xy_identity: object  # identities.Identity
    x_power_sum: object
    relation: Relation
    rhs: object  # Expr in n

    def rhs_value(self, n):
        return evaluate(self.rhs, n=n)


SPOT_CHECK_K = 20


def derive_bound(x, y, xy_identity, x_power_sum, alignment):
    if alignment not in (Alignment.SAME, Alignment.OPPOSITE):
        raise DerivationInputError(f"cannot derive a bound from {alignment.value} alignment")
    for k in range(1, SPOT_CHECK_K + 1):
        xk = x(k)
        if xy_identity.summand(k) != xk * y(k):
            raise DerivationInputError(
                f"{xy_identity.id} summand differs from x*y at k={k}: {xy_identity.summand(k)} != {xk * y(k)}"
            )
        if x_power_sum.summand(k) != xk:
            raise DerivationInputError(f"{x_power_sum.id} summand differs from x at k={k}")
    rhs = Div(Mul(Var("n"), xy_identity.closed_form), x_power_sum.closed_form)
    relation = Relation.LE if alignment is Alignment.SAME else Relation.GE
    return DerivedBound(y, x, xy_identity, x_power_sum, relation, rhs)


@dataclass(frozen=True)
class ReciprocalCheck:
    n: int
    sum_a: Fraction
    sum_inv_a: Fraction
    product: Fraction
    satisfied: bool
    equality: bool


def reciprocal_bound(a, n):
    """Exact check of (sum a_k)(sum 1/a_k) >= n^2 for a positive on 1..n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    terms = a.terms(n)
    for k, t in enumerate(terms, start=1):
        if t <= 0:
            raise DomainError(f"sequence {a.id} has nonpositive term {t} at k={k}")
    sum_a = sum(terms, Fraction(0))
    sum_inv = sum((1 / t for t in terms), Fraction(0))
    product = sum_a * sum_inv
    return ReciprocalCheck(n, sum_a, sum_inv, product, product >= n * n, product == n * n)
