"""The nine factorial-sum inequalities as checkable claims with derivations."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .chebyshev import Alignment, Relation, alignment_of, derive_bound
from .errors import DerivationInputError, EvaluationError, UnknownSubjectError
from .expr import Expr, evaluate, parse
from .identities import get_identity, verify_identity
from .numeric import to_decimal
from .report import Counterexample, RangeReport, Verdict
from .sequences import SequenceDef, classify_monotonicity, get_sequence, partial_sums


@dataclass(frozen=True)
class ChebyshevDerivation:
    """Bound obtained from Chebyshev with weight ``x`` on summand ``y``.

    With ``reindex`` set, the claim is over ``y(k-1)`` for k >= 2 plus the
    k = 1 term of the claim's own summand, so ``rhs(n) = term(1) + bound(n-1)``.
    """

    x: str
    y: str
    xy_identity: str
    x_power_sum: str
    alignment: Alignment
    reindex: bool = False

    kind = "chebyshev"

    def to_dict(self):
        return {
            "kind": self.kind, "x": self.x, "y": self.y, "xyIdentity": self.xy_identity,
            "xPowerSum": self.x_power_sum, "alignment": self.alignment.value, "reindex": self.reindex,
        }


@dataclass(frozen=True)
class ReciprocalChain:
    """``sum 1/a >= n^2 / sum a >= n^2 / rhs_base(n)`` for an upper bound on sum a."""

    base: str

    kind = "reciprocal-chain"

    def to_dict(self):
        return {"kind": self.kind, "base": self.base}


@dataclass(frozen=True)
class BoundClaim:
    id: str
    summand: SequenceDef
    relation: Relation
    rhs: Expr
    variant: str = "printed"  # printed, corrected or user
    derivation: ChebyshevDerivation | ReciprocalChain | None = None
    corrected_sibling: str | None = None
    note: str = ""

    def rhs_value(self, n):
        return evaluate(self.rhs, n=n)

    def statement(self):
        return f"sum_{{k=1}}^n {self.summand.text} {self.relation} {self.rhs}"

    def to_dict(self):
        return {
            "id": self.id,
            "summand": self.summand.text,
            "relation": self.relation.value,
            "rhs": str(self.rhs),
            "variant": self.variant,
            "derivation": None if self.derivation is None else self.derivation.to_dict(),
            "correctedSibling": self.corrected_sibling,
            "note": self.note,
        }


def _claim(id, summand, rel, rhs, derivation=None, variant="printed", sibling=None, note=""):
    seq = SequenceDef(f"{id}.summand", parse(summand), summand)
    return BoundClaim(id, seq, Relation(rel), parse(rhs), variant, derivation, sibling, note)


_SAME, _OPP = Alignment.SAME, Alignment.OPPOSITE

CLAIMS = {
    c.id: c
    for c in (
        _claim("app1", "k!", "<=", "2*((n+1)!-1)/(n+1)",
               ChebyshevDerivation("x.k", "y.fact", "I1", "P1", _SAME)),
        _claim("app2-printed", "k!", "<=", "3*(n+1)*(n+1)!/(n^2+3*n+5)",
               ChebyshevDerivation("x.k2k1", "y.fact", "I2p", "P3", _SAME), sibling="app2-corrected",
               note="holds, but its derivation rests on the failing identity I2p"),
        _claim("app2-corrected", "k!", "<=", "3*((n+1)*(n+1)!-1)/(n^2+3*n+5)",
               ChebyshevDerivation("x.k2k1", "y.fact", "I2c", "P3", _SAME), variant="corrected"),
        _claim("app3", "1/k!", ">=", "n^2*(n+1)/(2*((n+1)!-1))", ReciprocalChain("app1")),
        _claim("app4", "1/k!", ">=", "n^2*(n^2+3*n+5)/(3*(n+1)*(n+1)!)", ReciprocalChain("app2-printed")),
        _claim("app5", "1/k!", ">=", "1+(2/n)*(1-1/n!)",
               ChebyshevDerivation("x.k", "y.invfact_shift", "I3", "P1", _OPP, reindex=True),
               note="bound on sum 1/(k+1)! shifted n+1 -> n, then the k=1 term added"),
        _claim("app6-printed", "1/((k+2)^2*k!)", ">=", "(2/(n+5))*(1-1/(n+2)!)",
               ChebyshevDerivation("x.kplus2", "y.app6", "I4p", "P4", _OPP), sibling="app6-corrected"),
        _claim("app6-corrected", "1/((k+2)^2*k!)", ">=", "(2/(n+5))*(1/2-1/(n+2)!)",
               ChebyshevDerivation("x.kplus2", "y.app6", "I4c", "P4", _OPP), variant="corrected"),
        _claim("app7-printed", "1/(k*(k+1)*(k+2)!)", ">=", "(6/(2*n^2+9*n+1))*(1/2-1/((n+1)*(n+2)!))",
               ChebyshevDerivation("x.k2_2k_2", "y.app7", "I5", "P5", _OPP), sibling="app7-corrected"),
        _claim("app7-corrected", "1/(k*(k+1)*(k+2)!)", ">=", "(6/(2*n^2+9*n+19))*(1/2-1/((n+1)*(n+2)!))",
               ChebyshevDerivation("x.k2_2k_2", "y.app7", "I5", "P5", _OPP), variant="corrected"),
        _claim("app8", "1/(4*k^4+1)", ">=", "n/(2*n^2+2*n+1)",
               ChebyshevDerivation("x.4k", "y.app8", "I6", "P6", _OPP)),
        _claim("app9-printed", "1/(4*k^4-1)", ">=", "3*n/(2*n+1)^2",
               ChebyshevDerivation("x.k2", "y.app9", "I7p", "P2", _OPP), sibling="app9-corrected"),
        _claim("app9-corrected", "1/(4*k^2-1)", ">=", "3*n/(2*n+1)^2",
               ChebyshevDerivation("x.k2", "y.app9c", "I7c", "P2", _OPP), variant="corrected"),
    )
}


def list_claims():
    return list(CLAIMS.values())


def get_claim(claim_id):
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownSubjectError(claim_id) from None


def tightness(relation, lhs, rhs):
    """Ratio that is 1 at equality and below 1 when the bound has slack."""
    num, den = (lhs, rhs) if relation is Relation.LE else (rhs, lhs)
    if den == 0:
        return None
    return num / den


def verdict(claim, n, lhs):
    rhs = claim.rhs_value(n)
    return Verdict(n, lhs, rhs, claim.relation.holds(lhs, rhs), lhs == rhs, tightness(claim.relation, lhs, rhs))


def verify_claim(claim, n_min, n_max):
    if n_min < 1 or n_max < n_min:
        raise ValueError(f"bad range {n_min}..{n_max}")
    start = time.perf_counter()
    report = RangeReport(claim.id, "claim", n_min, n_max, variant=claim.variant,
                         corrected_sibling=claim.corrected_sibling)
    sums = partial_sums(claim.summand, n_max)
    for n in range(n_min, n_max + 1):
        try:
            v = verdict(claim, n, sums[n - 1])
        except EvaluationError as exc:
            raise type(exc)(f"{claim.id} at n={n}: {exc}", exc.subexpr) from exc
        report.verdicts.append(v)
        if not v.holds:
            report.counterexamples.append(Counterexample(n, v.lhs, v.rhs))
        if v.equality:
            report.equality_points.append(n)
        if v.tightness is not None and (report.min_tightness is None or v.tightness < report.min_tightness[1]):
            report.min_tightness = (n, v.tightness)
    report.runtime_ms = (time.perf_counter() - start) * 1000
    return report


@dataclass(frozen=True)
class TightnessPoint:
    n: int
    ratio: Fraction | None
    decimal: str
    holds: bool


def tightness_sweep(claim, n_max):
    """Exact tightness ratio per n; ``holds`` flags points where the claim fails."""
    out = []
    for v in verify_claim(claim, 1, n_max).verdicts:
        dec = "" if v.tightness is None else to_decimal(v.tightness)
        out.append(TightnessPoint(v.n, v.tightness, dec, v.holds))
    return out


# --- derivation chains ---------------------------------------------------------


def derived_bound(claim):
    """The DerivedBound behind a Chebyshev-derived claim (may raise DerivationInputError)."""
    d = claim.derivation
    if not isinstance(d, ChebyshevDerivation):
        raise DerivationInputError(f"{claim.id} has no Chebyshev derivation")
    return derive_bound(get_sequence(d.x), get_sequence(d.y), get_identity(d.xy_identity),
                       get_identity(d.x_power_sum), d.alignment)


def reproduce_rhs(claim, n, claims=None):
    """Value at n of the bound that the claim's derivation chain produces."""
    d = claim.derivation
    if isinstance(d, ChebyshevDerivation):
        bound = derived_bound(claim)
        if d.reindex:
            head = claim.summand(1)
            return head if n == 1 else head + bound.rhs_value(n - 1)
        return bound.rhs_value(n)
    if isinstance(d, ReciprocalChain):
        base = (claims or CLAIMS)[d.base]
        return Fraction(n * n) / base.rhs_value(n)
    raise DerivationInputError(f"{claim.id} has no derivation")


@dataclass(frozen=True)
class DerivationAudit:
    claim_id: str
    valid: bool  # derivation inputs fit together and alignment is as recorded
    rhs_matches: bool
    first_mismatch: int | None
    detail: str = ""
    failing_identities: tuple = ()  # identities in the chain refuted on 1..n_max


def audit_derivation(claim, n_max=50):
    """Re-derive the claim's bound and compare it with the stated rhs for n <= n_max."""
    d = claim.derivation
    if d is None:
        return DerivationAudit(claim.id, False, False, None, "no derivation recorded")
    if isinstance(d, ChebyshevDerivation):
        x, y = get_sequence(d.x), get_sequence(d.y)
        observed = alignment_of(classify_monotonicity(x, n_max), classify_monotonicity(y, n_max))
        if observed is not d.alignment:
            return DerivationAudit(claim.id, False, False, None,
                                   f"recorded {d.alignment.value} alignment, observed {observed.value}")
        try:
            derived_bound(claim)
        except DerivationInputError as exc:
            return DerivationAudit(claim.id, False, False, None, str(exc))
        if d.reindex:
            bad = next((k for k in range(2, n_max + 1) if claim.summand(k) != y(k - 1)), None)
        else:
            bad = next((k for k in range(1, n_max + 1) if claim.summand(k) != y(k)), None)
        if bad is not None:
            return DerivationAudit(claim.id, False, False, None, f"claim summand does not match {d.y} at k={bad}")
    else:
        base = CLAIMS[d.base]
        if base.relation is not Relation.LE:
            return DerivationAudit(claim.id, False, False, None, f"{d.base} is not an upper bound")
        bad = next((k for k in range(1, n_max + 1) if claim.summand(k) * base.summand(k) != 1), None)
        if bad is not None:
            return DerivationAudit(claim.id, False, False, None, f"summand is not 1/({base.summand.text}) at k={bad}")
    failing = tuple(i for i in _chain_identities(claim) if not verify_identity(get_identity(i), n_max).all_hold)
    for n in range(1, n_max + 1):
        if reproduce_rhs(claim, n) != claim.rhs_value(n):
            return DerivationAudit(claim.id, True, False, n, f"stated rhs differs from derived rhs at n={n}", failing)
    return DerivationAudit(claim.id, True, True, None, "", failing)


def _chain_identities(claim):
    d = claim.derivation
    if isinstance(d, ChebyshevDerivation):
        return (d.xy_identity, d.x_power_sum)
    if isinstance(d, ReciprocalChain):
        return _chain_identities(CLAIMS[d.base])
    return ()
