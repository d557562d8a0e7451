from fractions import Fraction

import pytest

from factineq.chebyshev import Alignment, Relation
from factineq.claims import (
    CLAIMS,
    ChebyshevDerivation,
    ReciprocalChain,
    audit_derivation,
    get_claim,
    list_claims,
    reproduce_rhs,
    tightness_sweep,
    verify_claim,
)
from factineq.sequences import Trend, classify_values

import oracle

CLAIM_IDS = [
    "app1", "app2-printed", "app2-corrected", "app3", "app4", "app5", "app6-printed", "app6-corrected",
    "app7-printed", "app7-corrected", "app8", "app9-printed", "app9-corrected",
]


def test_list_claims_order_and_derivations():
    claims = list_claims()
    assert [c.id for c in claims] == CLAIM_IDS
    assert all(c.derivation is not None for c in claims)


def test_lookup_app1():
    c = get_claim("app1")
    assert c.summand.text == "k!" and c.relation is Relation.LE
    assert str(c.rhs) == "2 * ((n + 1)! - 1) / (n + 1)"
    assert c.derivation == ChebyshevDerivation("x.k", "y.fact", "I1", "P1", Alignment.SAME)


def test_lookup_app5():
    c = get_claim("app5")
    assert c.relation is Relation.GE
    assert c.derivation == ChebyshevDerivation("x.k", "y.invfact_shift", "I3", "P1", Alignment.OPPOSITE, True)


def test_lookup_app7_printed():
    c = get_claim("app7-printed")
    assert c.rhs_value(1) == Fraction(5, 24)
    assert str(c.rhs) == "6 / (2 * n^2 + 9 * n + 1) * (1 / 2 - 1 / ((n + 1) * (n + 2)!))"


def test_reciprocal_chains():
    assert get_claim("app3").derivation == ReciprocalChain("app1")
    assert get_claim("app4").derivation == ReciprocalChain("app2-printed")


@pytest.mark.parametrize("claim_id", CLAIM_IDS)
def test_claim_matches_oracle(claim_id):
    term, rel, rhs = oracle.CLAIMS[claim_id]
    claim = get_claim(claim_id)
    assert claim.relation.value == rel
    for k in range(1, 30):
        assert claim.summand(k) == term(k)
        assert claim.rhs_value(k) == rhs(k)
    report = verify_claim(claim, 1, 200)
    bad, eq = oracle.claim_sweep(claim_id, 200)
    assert [(c.n, c.lhs, c.rhs) for c in report.counterexamples] == bad
    assert report.equality_points == eq


def test_verify_examples():
    report = verify_claim(get_claim("app1"), 1, 10)
    assert report.all_hold and report.equality_points == [1]
    v3 = report.verdicts[2]
    assert (v3.lhs, v3.rhs) == (9, Fraction(23, 2))
    report = verify_claim(get_claim("app6-printed"), 1, 10)
    c = report.first_counterexample
    assert (c.n, c.lhs, c.rhs) == (1, Fraction(1, 9), Fraction(5, 18))
    assert report.status == "refuted-as-printed"
    assert report.to_dict()["correctedSibling"] == "app6-corrected"
    report = verify_claim(get_claim("app5"), 1, 10)
    assert report.all_hold and report.equality_points == [1, 2]
    assert report.verdicts[1].rhs == Fraction(3, 2)


def test_min_tightness():
    report = verify_claim(get_claim("app1"), 1, 10)
    n, ratio = report.min_tightness
    assert n == 10 and ratio == min(v.tightness for v in report.verdicts)


def test_tightness_examples():
    assert tightness_sweep(get_claim("app1"), 3)[2].ratio == Fraction(18, 23)
    point = tightness_sweep(get_claim("app8"), 1)[0]
    assert point.ratio == 1 and point.decimal == "1"
    point = tightness_sweep(get_claim("app3"), 2)[1]
    assert point.ratio == Fraction(4, 5) and point.decimal == "0.8"


def test_tightness_flags_failures():
    points = tightness_sweep(get_claim("app7-printed"), 3)
    assert [p.holds for p in points] == [False, False, True]
    assert points[0].ratio > 1


def test_ratios_at_most_one_when_claim_holds():
    for claim_id in ("app1", "app4", "app8", "app9-corrected"):
        for p in tightness_sweep(get_claim(claim_id), 40):
            assert p.holds and 0 < p.ratio <= 1


@pytest.mark.parametrize("claim_id", ["app3", "app4"])
def test_lhs_nondecreasing(claim_id):
    lhs = [v.lhs for v in verify_claim(get_claim(claim_id), 1, 200).verdicts]
    assert classify_values(lhs) is Trend.NONDECREASING


REPRODUCIBLE = ["app1", "app2-printed", "app2-corrected", "app3", "app4", "app5", "app6-corrected",
                "app7-corrected", "app8", "app9-printed", "app9-corrected"]


@pytest.mark.parametrize("claim_id", REPRODUCIBLE)
def test_derivation_reproduces_rhs(claim_id):
    claim = get_claim(claim_id)
    audit = audit_derivation(claim, 50)
    assert audit.valid and audit.rhs_matches, audit.detail
    for n in range(1, 51):
        assert reproduce_rhs(claim, n) == claim.rhs_value(n)


def test_printed_derivation_disagreements_are_recorded():
    audit = audit_derivation(get_claim("app7-printed"))
    assert audit.valid and not audit.rhs_matches and audit.first_mismatch == 1
    audit = audit_derivation(get_claim("app6-printed"))
    assert not audit.valid and "I4p" in audit.detail


def test_chains_resting_on_failing_identities():
    assert audit_derivation(get_claim("app2-printed")).failing_identities == ("I2p",)
    assert audit_derivation(get_claim("app4")).failing_identities == ("I2p",)
    assert audit_derivation(get_claim("app9-printed")).failing_identities == ("I7p",)
    assert audit_derivation(get_claim("app1")).failing_identities == ()


def test_app5_reindex_by_hand():
    # derived bound on sum_{k<=m} 1/(k+1)! is (2/(m+1))(1 - 1/(m+1)!); shift m = n-1, add 1/1!
    claim = get_claim("app5")
    for n in range(2, 20):
        fact = 1
        for i in range(2, n + 1):
            fact *= i
        assert reproduce_rhs(claim, n) == 1 + Fraction(2, n) * (1 - Fraction(1, fact))
    assert reproduce_rhs(claim, 1) == 1


def test_claim_json():
    d = get_claim("app9-corrected").to_dict()
    assert d["derivation"]["xyIdentity"] == "I7c" and d["variant"] == "corrected"
    assert set(CLAIMS) == set(CLAIM_IDS)
