"""Sequences k -> rational, exact partial sums and monotonicity classes."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, UnknownSubjectError
from .expr import Expr, evaluate, parse

DEFAULT_SWEEP_CAP = 10_000


class Trend(enum.Enum):
    NONDECREASING = "nondecreasing"
    NONINCREASING = "nonincreasing"
    CONSTANT = "constant"
    NONE = "none"


@dataclass(frozen=True)
class Monotonicity:
    """Most specific monotonicity label of a sequence over 1..n."""

    trend: Trend
    n: int

    @property
    def nondecreasing(self):
        return self.trend in (Trend.NONDECREASING, Trend.CONSTANT)

    @property
    def nonincreasing(self):
        return self.trend in (Trend.NONINCREASING, Trend.CONSTANT)

    def __str__(self):
        return f"{self.trend.value} on 1..{self.n}"


@dataclass(frozen=True)
class SequenceDef:
    id: str
    term: Expr
    description: str = ""

    def __post_init__(self):
        if isinstance(self.term, str):
            object.__setattr__(self, "term", parse(self.term))
        if "n" in self.term.free_vars():
            raise ValueError(f"sequence {self.id}: term must only use k, got {self.term}")

    @property
    def text(self):
        return str(self.term)

    def __call__(self, k):
        return evaluate(self.term, k=k)

    def terms(self, n):
        """Exact terms for k = 1..n."""
        return [evaluate(self.term, k=k) for k in range(1, n + 1)]


def sequence(text, id=None, description=""):
    """Shorthand: ``sequence("k!")`` builds an anonymous SequenceDef."""
    return SequenceDef(id or text, parse(text), description)


def eval_term(seq, k):
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return seq(k)


def _check_range(n, cap):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        from .errors import ResourceLimitError

        raise ResourceLimitError(f"n={n} exceeds the sweep cap {cap}")


def partial_sums(seq, n, cap=DEFAULT_SWEEP_CAP):
    """Running sums S_1..S_n, built incrementally (one term evaluation per n)."""
    _check_range(n, cap)
    total = Fraction(0)
    out = []
    for k in range(1, n + 1):
        total += seq(k)
        out.append(total)
    return out


def partial_sum(seq, n, cap=DEFAULT_SWEEP_CAP):
    return partial_sums(seq, n, cap)[-1]


def classify_values(values):
    """Classify a finite list of rationals by consecutive exact comparison."""
    up = down = False
    for a, b in zip(values, values[1:]):
        if b > a:
            up = True
        elif b < a:
            down = True
        if up and down:
            return Trend.NONE
    if up:
        return Trend.NONDECREASING
    if down:
        return Trend.NONINCREASING
    return Trend.CONSTANT


def classify_monotonicity(seq, n):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return Monotonicity(Trend.CONSTANT, 1)
    return Monotonicity(classify_values(seq.terms(n)), n)


@dataclass(frozen=True)
class PositivityReport:
    seq_id: str
    k_max: int
    positive: bool
    first_nonpositive: int | None = None


def check_positive(seq, k_max):
    """Report whether every term on 1..k_max is strictly positive."""
    for k in range(1, k_max + 1):
        if seq(k) <= 0:
            return PositivityReport(seq.id, k_max, False, k)
    return PositivityReport(seq.id, k_max, True)


def require_positive(seq, n):
    report = check_positive(seq, n)
    if not report.positive:
        raise DomainError(f"sequence {seq.id} has nonpositive term at k={report.first_nonpositive}")


BUILTIN_SEQUENCES = {
    s.id: s
    for s in (
        SequenceDef("x.k", parse("k"), "k"),
        SequenceDef("x.k2k1", parse("k^2+k+1"), "k^2 + k + 1"),
        SequenceDef("x.kplus2", parse("k+2"), "k + 2"),
        SequenceDef("x.k2_2k_2", parse("k^2+2*k+2"), "k^2 + 2k + 2"),
        SequenceDef("x.4k", parse("4*k"), "4k"),
        SequenceDef("x.k2", parse("k^2"), "k^2"),
        SequenceDef("y.fact", parse("k!"), "k!"),
        SequenceDef("y.invfact", parse("1/k!"), "1/k!"),
        SequenceDef("y.invfact_shift", parse("1/(k+1)!"), "1/(k+1)!"),
        SequenceDef("y.app6", parse("1/((k+2)^2*k!)"), "1/((k+2)^2 k!)"),
        SequenceDef("y.app7", parse("1/(k*(k+1)*(k+2)!)"), "1/(k(k+1)(k+2)!)"),
        SequenceDef("y.app8", parse("1/(4*k^4+1)"), "1/(4k^4 + 1)"),
        SequenceDef("y.app9", parse("1/(4*k^4-1)"), "1/(4k^4 - 1)"),
        SequenceDef("y.app9c", parse("1/(4*k^2-1)"), "1/(4k^2 - 1)"),
    )
}


def get_sequence(seq_id):
    try:
        return BUILTIN_SEQUENCES[seq_id]
    except KeyError:
        raise UnknownSubjectError(seq_id) from None
