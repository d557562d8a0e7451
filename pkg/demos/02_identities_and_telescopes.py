# Summation identities, checked two ways
# --------------------------------------
# Each identity is compared against direct exact summation for n = 1..N, and
# when it carries a telescoping witness (c, g) the per-term relation
#     summand(k) = c + g(k+1) - g(k)
# is checked as well.

from factineq import get_identity, list_identities, verify_identity, verify_telescope

for identity in list_identities():
    report = verify_identity(identity, 100)
    line = f"{identity.id:<4} [{identity.provenance:<9}] sum {identity.summand.text} = {identity.closed_form}"
    if report.all_hold:
        line += "   holds on 1..100"
    else:
        c = report.first_counterexample
        line += f"   FAILS first at n={c.n}: sum {c.lhs} vs closed form {c.rhs}"
    print(line)

# Telescoping witnesses
for identity in list_identities():
    if identity.witness is not None:
        t = verify_telescope(identity, 100)
        print(f"{identity.id:<4} {identity.witness.text():<28} telescope ok={t.all_hold}")

# The Sophie Germain split behind sum 4k/(4k^4+1):
#   4k^4 + 1 = (2k^2 - 2k + 1)(2k^2 + 2k + 1)
i6 = get_identity("I6")
print(i6.id, [str(i6.summand(k)) for k in range(1, 5)], "->", i6.closed_value(4))
