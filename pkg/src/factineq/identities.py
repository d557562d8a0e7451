"""Closed-form summation identities, checked by summation and by telescoping.

A telescoping witness ``(c, g)`` asserts ``summand(k) = c + g(k+1) - g(k)``,
which gives ``sum_{k=1}^n summand(k) = c*n + g(n+1) - g(1)``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import EvaluationError, UnknownSubjectError
from .expr import Expr, evaluate, parse
from .report import Counterexample, RangeReport, Verdict
from .sequences import SequenceDef, partial_sums


@dataclass(frozen=True)
class Witness:
    c: Fraction
    g: Expr

    def delta(self, k):
        """c + g(k+1) - g(k)."""
        return self.c + evaluate(self.g, k=k + 1) - evaluate(self.g, k=k)

    def telescoped_sum(self, n):
        return self.c * n + evaluate(self.g, k=n + 1) - evaluate(self.g, k=1)

    def text(self):
        if self.c:
            return f"c = {self.c}; g(k) = {self.g}"
        return f"g(k) = {self.g}"


@dataclass(frozen=True)
class Identity:
    id: str
    summand: SequenceDef
    closed_form: Expr
    witness: Witness | None = None
    provenance: str = "printed"  # printed, corrected or plumbing
    corrected_sibling: str | None = None
    note: str = ""

    def closed_value(self, n):
        return evaluate(self.closed_form, n=n)

    def to_dict(self):
        return {
            "id": self.id,
            "summand": self.summand.text,
            "closedForm": str(self.closed_form),
            "witness": None if self.witness is None else {"c": str(self.witness.c), "g": str(self.witness.g)},
            "provenance": self.provenance,
            "correctedSibling": self.corrected_sibling,
            "note": self.note,
        }


def verify_identity(identity, n_max, n_min=1):
    """Compare exact partial sums with the closed form at every n in range."""
    if n_min < 1 or n_max < n_min:
        raise ValueError(f"bad range {n_min}..{n_max}")
    start = time.perf_counter()
    report = RangeReport(identity.id, "identity", n_min, n_max, variant=identity.provenance,
                         corrected_sibling=identity.corrected_sibling)
    sums = partial_sums(identity.summand, n_max)
    for n in range(n_min, n_max + 1):
        lhs = sums[n - 1]
        try:
            rhs = identity.closed_value(n)
        except EvaluationError as exc:
            raise type(exc)(f"{identity.id} at n={n}: {exc}", exc.subexpr) from exc
        ok = lhs == rhs
        report.verdicts.append(Verdict(n, lhs, rhs, ok, ok))
        if not ok:
            report.counterexamples.append(Counterexample(n, lhs, rhs))
    report.runtime_ms = (time.perf_counter() - start) * 1000
    return report


def verify_telescope(identity, k_max):
    """Check ``summand(k) == c + g(k+1) - g(k)`` for k = 1..k_max.

    Identities without a witness yield a not-applicable report.
    """
    start = time.perf_counter()
    report = RangeReport(f"{identity.id}.telescope", "telescope", 1, k_max, variant=identity.provenance)
    w = identity.witness
    if w is None:
        report.applicable = False
        return report
    for k in range(1, k_max + 1):
        lhs = identity.summand(k)
        rhs = w.delta(k)
        ok = lhs == rhs
        report.verdicts.append(Verdict(k, lhs, rhs, ok, ok))
        if not ok:
            report.counterexamples.append(Counterexample(k, lhs, rhs))
    report.runtime_ms = (time.perf_counter() - start) * 1000
    return report


def _ident(id, summand, closed, witness=None, c=0, provenance="printed", sibling=None, note=""):
    w = None if witness is None else Witness(Fraction(c), parse(witness))
    seq = SequenceDef(f"{id}.summand", parse(summand), summand)
    return Identity(id, seq, parse(closed), w, provenance, sibling, note)


IDENTITIES = {
    i.id: i
    for i in (
        _ident("I1", "k*k!", "(n+1)!-1", "k!"),
        _ident("I2p", "(k^2+k+1)*k!", "(n+1)*(n+1)!", sibling="I2c",
               note="as printed; fails at n=1 (3 vs 4)"),
        _ident("I2c", "(k^2+k+1)*k!", "(n+1)*(n+1)!-1", "k*k!", provenance="corrected"),
        _ident("I3", "k/(k+1)!", "1-1/(n+1)!", "-1/k!"),
        _ident("I4p", "1/((k+2)^2*k!)", "1-1/(n+2)!", sibling="I4c",
               note="printed middle step repeats the left-hand sum; encoded with the left-hand summand"),
        _ident("I4c", "1/((k+2)*k!)", "1/2-1/(n+2)!", "-1/(k+1)!", provenance="corrected"),
        _ident("I5", "(k^2+2*k+2)/(k*(k+1)*(k+2)!)", "1/2-1/((n+1)*(n+2)!)", "-1/(k*(k+1)!)"),
        _ident("I6", "4*k/(4*k^4+1)", "2*n*(n+1)/(2*n^2+2*n+1)", "-1/(2*k^2-2*k+1)"),
        _ident("I7p", "k^2/(4*k^4-1)", "n*(n+1)/(2*(2*n+1))", sibling="I7c",
               note="closed form belongs to the summand k^2/(4k^2-1)"),
        _ident("I7c", "k^2/(4*k^2-1)", "n*(n+1)/(2*(2*n+1))", "-1/(8*(2*k-1))", c=Fraction(1, 4),
               provenance="corrected"),
        _ident("P1", "k", "n*(n+1)/2", provenance="plumbing"),
        _ident("P2", "k^2", "n*(n+1)*(2*n+1)/6", provenance="plumbing"),
        _ident("P3", "k^2+k+1", "n*(n^2+3*n+5)/3", provenance="plumbing"),
        _ident("P4", "k+2", "n*(n+5)/2", provenance="plumbing"),
        _ident("P5", "k^2+2*k+2", "n*(2*n^2+9*n+19)/6", provenance="plumbing"),
        _ident("P6", "4*k", "2*n*(n+1)", provenance="plumbing"),
    )
}


def get_identity(identity_id):
    try:
        return IDENTITIES[identity_id]
    except KeyError:
        raise UnknownSubjectError(identity_id) from None


def list_identities():
    return list(IDENTITIES.values())
