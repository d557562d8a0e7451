"""Line-oriented claim files.

Each non-blank line (after stripping ``#`` comments) has the form::

    claim <name> : sum <expr-in-k> (<=|>=) <expr-in-n>

Loaded claims are named ``user.<name>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .chebyshev import Relation
from .errors import ClaimFileError, ParseError
from .expr import parse
from .claims import BoundClaim
from .sequences import SequenceDef

NAMESPACE = "user."

_HEAD = re.compile(r"\s*claim\s+(?P<name>[A-Za-z_][A-Za-z0-9_.-]*)\s*:\s*")
_SUM = re.compile(r"sum(?=[\s(])\s*")


@dataclass
class ClaimFile:
    path: str
    claims: list = field(default_factory=list)

    def by_id(self):
        return {c.id: c for c in self.claims}


def _byte_col(line, index):
    return len(line[:index].encode("utf-8"))


def parse_claim_line(line, path=None, lineno=None):
    """Parse one claim line; returns ``None`` for blank and comment-only lines."""
    body = line.split("#", 1)[0]
    if not body.strip():
        return None
    m = _HEAD.match(body)
    if m is None:
        raise ClaimFileError("expected 'claim <name> : sum <expr> (<=|>=) <expr>'", path, lineno, 0)
    rest_start = m.end()
    rest = body[rest_start:]
    positions = [(mm.start(), mm.group()) for mm in re.finditer(r"<=|>=", rest)]
    if not positions:
        raise ClaimFileError("missing relation token '<=' or '>='", path, lineno, _byte_col(body, len(body.rstrip())))
    if len(positions) > 1:
        raise ClaimFileError("more than one relation token", path, lineno,
                             _byte_col(body, rest_start + positions[1][0]))
    rel_at, rel = positions[0]
    s = _SUM.match(rest)
    if s is None:
        raise ClaimFileError("expected 'sum' before the summand", path, lineno, _byte_col(body, rest_start))
    rest_start += s.end()
    rel_at -= s.end()
    rest = rest[s.end():]
    left, right = rest[:rel_at], rest[rel_at + 2:]
    exprs = []
    for text, base in ((left, rest_start), (right, rest_start + rel_at + 2)):
        try:
            exprs.append(parse(text))
        except ParseError as exc:
            raise ClaimFileError(str(exc), path, lineno, _byte_col(body, base) + exc.offset) from exc
    summand, rhs = exprs
    if "n" in summand.free_vars():
        raise ClaimFileError("summand may only use k", path, lineno, _byte_col(body, rest_start))
    if "k" in rhs.free_vars():
        raise ClaimFileError("bound may only use n", path, lineno, _byte_col(body, rest_start + rel_at + 2))
    name = NAMESPACE + m.group("name")
    seq = SequenceDef(f"{name}.summand", summand, left.strip())
    return BoundClaim(name, seq, Relation(rel), rhs, variant="user")


def parse_claims(text, path=None):
    out = ClaimFile(str(path) if path is not None else "<string>")
    seen = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        claim = parse_claim_line(line, path, lineno)
        if claim is None:
            continue
        if claim.id in seen:
            raise ClaimFileError(f"duplicate claim name {claim.id[len(NAMESPACE):]!r} (first on line {seen[claim.id]})",
                                 path, lineno, 0)
        seen[claim.id] = lineno
        out.claims.append(claim)
    return out


def load_claim_file(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ClaimFileError(f"not valid UTF-8: {exc}", str(path)) from exc
    return parse_claims(text, str(path))


def applications_path():
    """Path of the bundled claim file restating the nine built-in claims."""
    from importlib.resources import files

    return files("factineq") / "data" / "applications.ineq"
