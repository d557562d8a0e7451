"""Per-n verdicts, range reports, and their JSON/CSV encodings."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .numeric import to_decimal


@dataclass(frozen=True)
class Verdict:
    n: int
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool
    tightness: Fraction | None = None


@dataclass(frozen=True)
class Counterexample:
    n: int
    lhs: Fraction
    rhs: Fraction


@dataclass
class RangeReport:
    subject_id: str
    subject_kind: str  # "identity", "claim" or "telescope"
    n_min: int
    n_max: int
    counterexamples: list = field(default_factory=list)
    equality_points: list = field(default_factory=list)
    min_tightness: tuple | None = None  # (n, ratio)
    variant: str | None = None  # printed / corrected / plumbing / user
    corrected_sibling: str | None = None
    applicable: bool = True
    error: str | None = None
    runtime_ms: float = 0.0
    verdicts: list = field(default_factory=list, repr=False)

    @property
    def all_hold(self):
        return self.error is None and not self.counterexamples

    @property
    def first_counterexample(self):
        return self.counterexamples[0] if self.counterexamples else None

    @property
    def status(self):
        if self.error is not None:
            return "errored"
        if not self.applicable:
            return "not-applicable"
        if self.counterexamples:
            return "refuted-as-printed" if self.variant == "printed" else "refuted"
        return "holds"

    def to_dict(self, timings=False):
        out = {
            "subjectId": self.subject_id,
            "subjectKind": self.subject_kind,
            "variant": self.variant,
            "status": self.status,
            "nMin": self.n_min,
            "nMax": self.n_max,
            "allHold": self.all_hold,
            "counterexamples": [
                {"n": c.n, "lhs": rat_json(c.lhs), "rhs": rat_json(c.rhs)} for c in self.counterexamples
            ],
            "equalityPoints": list(self.equality_points),
            "minTightness": None,
        }
        if self.min_tightness is not None:
            n, ratio = self.min_tightness
            out["minTightness"] = {"n": n, "ratio": rat_json(ratio)}
        if self.corrected_sibling and self.counterexamples:
            out["correctedSibling"] = self.corrected_sibling
        if self.error is not None:
            out["error"] = self.error
        if timings:
            out["runtimeMillis"] = round(self.runtime_ms, 3)
        return out


def rat_json(q):
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator), "dec": to_decimal(q)}


def rat_from_json(obj):
    return Fraction(int(obj["num"]), int(obj["den"]))


CSV_COLUMNS = (
    "subject", "kind", "variant", "n", "lhs_num", "lhs_den", "rhs_num", "rhs_den",
    "holds", "equality", "tightness_dec",
)


def csv_rows(reports):
    """Flatten reports into one row per (subject, n) verdict."""
    for rep in reports:
        for v in rep.verdicts:
            yield (
                rep.subject_id, rep.subject_kind, rep.variant or "", v.n,
                v.lhs.numerator, v.lhs.denominator, v.rhs.numerator, v.rhs.denominator,
                int(v.holds), int(v.equality),
                "" if v.tightness is None else to_decimal(v.tightness),
            )
