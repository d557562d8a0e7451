"""Exact verification of factorial-sum inequalities derived from Chebyshev's sum inequality."""

__version__ = "0.1.0"

from .chebyshev import Alignment, Relation, check_chebyshev, derive_bound, reciprocal_bound
from .claimfile import load_claim_file, parse_claims
from .claims import audit_derivation, get_claim, list_claims, tightness_sweep, verify_claim
from .expr import evaluate, parse, pretty
from .harness import Registry, run_all, search_counterexample
from .identities import get_identity, list_identities, verify_identity, verify_telescope
from .numeric import factorial, rat, rat_arith
from .sequences import SequenceDef, Trend, classify_monotonicity, partial_sum, sequence
