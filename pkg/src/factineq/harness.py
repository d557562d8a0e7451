"""Batch sweeps over the registry, counterexample search, report documents."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .claims import CLAIMS, verify_claim
from .errors import FactineqError, UnknownSubjectError
from .identities import IDENTITIES, verify_identity, verify_telescope
from .report import CSV_COLUMNS, Counterexample, RangeReport, csv_rows, rat_json
from .sequences import BUILTIN_SEQUENCES

DEFAULT_N_MAX = 200
TELESCOPE_SUFFIX = ".telescope"


@dataclass
class Registry:
    """Identities and claims available to a sweep; built-ins plus loaded files."""

    identities: dict = field(default_factory=lambda: dict(IDENTITIES))
    claims: dict = field(default_factory=lambda: dict(CLAIMS))

    def add_claims(self, claim_file):
        for claim in claim_file.claims:
            if claim.id in self.claims:
                raise FactineqError(f"claim {claim.id} is already registered")
            self.claims[claim.id] = claim

    def tasks(self, identity_ids=None, claim_ids=None):
        """(kind, subject) pairs; ``None`` selects everything of that kind."""
        out = []
        ids = sorted(self.identities) if identity_ids is None else identity_ids
        for i in ids:
            ident = self.lookup_identity(i)
            out.append(("identity", ident))
            if ident.witness is not None:
                out.append(("telescope", ident))
        for c in sorted(self.claims) if claim_ids is None else claim_ids:
            out.append(("claim", self.lookup_claim(c)))
        return out

    def lookup_identity(self, identity_id):
        try:
            return self.identities[identity_id]
        except KeyError:
            raise UnknownSubjectError(identity_id) from None

    def lookup_claim(self, claim_id):
        try:
            return self.claims[claim_id]
        except KeyError:
            raise UnknownSubjectError(claim_id) from None

    def to_dict(self):
        return {
            "sequences": [{"id": s.id, "term": s.text, "description": s.description}
                          for s in BUILTIN_SEQUENCES.values()],
            "identities": [self.identities[i].to_dict() for i in sorted(self.identities)],
            "claims": [self.claims[c].to_dict() for c in sorted(self.claims)],
        }


def _subject_id(kind, subject):
    return subject.id + TELESCOPE_SUFFIX if kind == "telescope" else subject.id


def run_task(task, n_min, n_max):
    """Run one subject; evaluation failures become an errored report."""
    kind, subject = task
    start = time.perf_counter()
    try:
        if kind == "identity":
            return verify_identity(subject, n_max, n_min)
        if kind == "telescope":
            return verify_telescope(subject, n_max)
        return verify_claim(subject, n_min, n_max)
    except (FactineqError, ArithmeticError, ValueError) as exc:
        variant = getattr(subject, "variant", None) or getattr(subject, "provenance", None)
        report = RangeReport(_subject_id(kind, subject), kind, n_min, n_max, variant=variant,
                             error=f"{type(exc).__name__}: {exc}")
        report.runtime_ms = (time.perf_counter() - start) * 1000
        return report


def _run_packed(args):
    return run_task(*args)


def run_tasks(tasks, n_min=1, n_max=DEFAULT_N_MAX, workers=1):
    if n_min < 1 or n_max < n_min:
        raise ValueError(f"range must satisfy 1 <= n-min <= n-max, got {n_min}..{n_max}")
    jobs = [(t, n_min, n_max) for t in tasks]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_packed, jobs))
    else:
        reports = [_run_packed(j) for j in jobs]
    return sorted(reports, key=lambda r: r.subject_id)


def run_all(n_max=DEFAULT_N_MAX, n_min=1, workers=1, registry=None):
    """One report per identity, telescope witness and claim, ordered by subject id."""
    registry = registry or Registry()
    return run_tasks(registry.tasks(), n_min, n_max, workers)


def search_counterexample(subject_id, n_max, registry=None):
    """Smallest n in 1..n_max violating the subject, or ``None``."""
    registry = registry or Registry()
    if subject_id.endswith(TELESCOPE_SUFFIX):
        ident = registry.lookup_identity(subject_id[: -len(TELESCOPE_SUFFIX)])
        if ident.witness is None:
            return None
        for k in range(1, n_max + 1):
            lhs, rhs = ident.summand(k), ident.witness.delta(k)
            if lhs != rhs:
                return Counterexample(k, lhs, rhs)
        return None
    if subject_id in registry.identities:
        ident = registry.identities[subject_id]
        check = ident.closed_value
        holds = Fraction.__eq__
        summand = ident.summand
    else:
        claim = registry.lookup_claim(subject_id)
        check = claim.rhs_value
        holds = claim.relation.holds
        summand = claim.summand
    total = Fraction(0)
    for n in range(1, n_max + 1):
        total += summand(n)
        rhs = check(n)
        if not holds(total, rhs):
            return Counterexample(n, total, rhs)
    return None


def failing_reports(reports, strict_printed=False):
    """Reports that should make the run exit nonzero."""
    out = []
    for r in reports:
        if r.status == "errored" or r.status == "refuted":
            out.append(r)
        elif r.status == "refuted-as-printed" and strict_printed:
            out.append(r)
    return out


def summary(reports):
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    return {"subjects": len(reports), **{k: counts[k] for k in sorted(counts)}}


def reports_document(reports, n_min, n_max, timings=False):
    doc = {
        "tool": "factineq",
        "version": __version__,
        "nMin": n_min,
        "nMax": n_max,
        "summary": summary(reports),
        "reports": [r.to_dict(timings=timings) for r in reports],
    }
    if timings:
        doc["runtimeMillis"] = round(sum(r.runtime_ms for r in reports), 3)
    return doc


def to_json(reports, n_min, n_max, timings=False):
    return json.dumps(reports_document(reports, n_min, n_max, timings), indent=2) + "\n"


def to_csv(reports):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(csv_rows(reports))
    return buf.getvalue()


def to_table(reports):
    rows = [("subject", "kind", "variant", "status", "first counterexample", "equality n", "min tightness")]
    for r in reports:
        c = r.first_counterexample
        first = "" if c is None else f"n={c.n}: {_short(c.lhs)} vs {_short(c.rhs)}"
        eq = ",".join(map(str, r.equality_points[:6])) + (",..." if len(r.equality_points) > 6 else "")
        tight = "" if r.min_tightness is None else f"~{rat_json(r.min_tightness[1])['dec']} (n={r.min_tightness[0]})"
        if r.error:
            first = r.error
        rows.append((r.subject_id, r.subject_kind, r.variant or "", r.status, first, eq, tight))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def _short(q, limit=24):
    text = str(q)
    return text if len(text) <= limit else f"~{rat_json(q)['dec']}"
