# Chebyshev's sum inequality on concrete sequences
# ------------------------------------------------
# Two sequences that move the same way have "mean of products >= product of
# means"; sequences that move in opposite ways flip the inequality.  Every
# check here is exact rational arithmetic.

from factineq import check_chebyshev, reciprocal_bound, sequence

x = sequence("k")
y = sequence("k!")
for n in (1, 2, 3, 10):
    c = check_chebyshev(x, y, n)
    print(f"n={n:>2}  {c.alignment.value:<8} meanX*meanY = {c.product}  meanXY = {c.mean_xy}  ok={c.satisfied}")

# k grows while 1/(k+1)! shrinks, so the inequality reverses.
c = check_chebyshev(x, sequence("1/(k+1)!"), 2)
print(c.alignment.value, c.product, ">=", c.mean_xy, c.satisfied)

# A non-monotone input is not an error; the check just reports n/a.
c = check_chebyshev(sequence("(k-2)^2"), x, 4)
print(c.alignment.value, c.satisfied, c.mean_x, c.mean_y)

# The step (sum a)(sum 1/a) >= n^2 used to turn an upper bound on sum k!
# into a lower bound on sum 1/k!.
for n in (1, 2, 5):
    r = reciprocal_bound(sequence("k!"), n)
    print(f"n={n}: ({r.sum_a})({r.sum_inv_a}) = {r.product} >= {n * n}: {r.satisfied}")
