# The nine inequalities, their derivations, and where the printed forms break
# ---------------------------------------------------------------------------

from factineq import audit_derivation, list_claims, tightness_sweep, verify_claim

for claim in list_claims():
    report = verify_claim(claim, 1, 200)
    audit = audit_derivation(claim, 50)
    status = report.status
    if report.counterexamples:
        c = report.first_counterexample
        status += f" (n={c.n}: {c.lhs} vs {c.rhs})"
    chain = "derivation reproduces rhs" if audit.rhs_matches else f"derivation: {audit.detail}"
    if audit.failing_identities:
        chain += f"; rests on failing {', '.join(audit.failing_identities)}"
    print(f"{claim.id:<15} eq={report.equality_points!s:<7} {status:<40} {chain}")

# How tight is the first bound as n grows?  1 means equality.
for point in tightness_sweep(list_claims()[0], 12):
    print(point.n, point.ratio, point.decimal)
