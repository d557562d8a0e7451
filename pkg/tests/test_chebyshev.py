from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factineq.chebyshev import Alignment, Relation, check_chebyshev, derive_bound, reciprocal_bound
from factineq.errors import DerivationInputError, DomainError
from factineq.identities import get_identity
from factineq.sequences import get_sequence, sequence

from helpers import table_sequence


def test_table_sequence_helper():
    values = [Fraction(1, 3), Fraction(2), Fraction(7, 5)]
    assert table_sequence(values).terms(3) == values


def test_same_alignment_example():
    c = check_chebyshev(sequence("k"), sequence("k!"), 3)
    assert (c.mean_x, c.mean_y, c.product, c.mean_xy) == (2, 3, 6, Fraction(23, 3))
    assert c.alignment is Alignment.SAME and c.satisfied and not c.equality


def test_opposite_alignment_example():
    c = check_chebyshev(sequence("k"), sequence("1/(k+1)!"), 2)
    assert c.product == Fraction(1, 2) and c.mean_xy == Fraction(5, 12)
    assert c.alignment is Alignment.OPPOSITE and c.satisfied and not c.equality


@pytest.mark.parametrize("x, y", [("k", "k!"), ("k^2", "1/(4*k^4-1)"), ("(k-2)^2", "k")])
def test_single_term_is_equality(x, y):
    c = check_chebyshev(sequence(x), sequence(y), 1)
    assert c.equality and c.product == c.mean_xy


def test_indeterminate_alignment_reports_means():
    c = check_chebyshev(sequence("(k-2)^2"), sequence("k"), 4)
    assert c.alignment is Alignment.INDETERMINATE and c.satisfied is None
    assert c.mean_x == Fraction(6, 4) and c.mean_y == Fraction(10, 4)


def test_constant_sequence_gives_equality():
    c = check_chebyshev(sequence("3"), sequence("1/k!"), 6)
    assert c.expected == "both" and c.satisfied and c.equality


positive = st.builds(Fraction, st.integers(1, 10**4), st.integers(1, 10**4))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.lists(positive, min_size=n, max_size=n),
                                                       st.lists(positive, min_size=n, max_size=n))))
def test_chebyshev_direction_property(pair):
    xs, ys = sorted(pair[0]), sorted(pair[1])
    n = len(xs)
    x, y = table_sequence(xs, "x"), table_sequence(ys, "y")
    same = check_chebyshev(x, y, n)
    assert same.alignment in (Alignment.SAME,) or same.expected == "both"
    assert same.product <= same.mean_xy
    rev = check_chebyshev(x, table_sequence(ys[::-1], "y_rev"), n)
    assert rev.product >= rev.mean_xy
    if n > 1 and len(set(xs)) > 1 and len(set(ys)) > 1:
        assert rev.alignment is Alignment.OPPOSITE
    assert same.satisfied and rev.satisfied


@pytest.mark.parametrize("c", [2, 5, 17])
def test_scale_invariance(c):
    for x, y in [("k", "k!"), ("k", "1/(k+1)!"), ("4*k", "1/(4*k^4+1)")]:
        for n in (1, 3, 7):
            base = check_chebyshev(sequence(x), sequence(y), n)
            scaled = check_chebyshev(sequence(f"{c}*({x})"), sequence(y), n)
            assert (base.satisfied, base.equality) == (scaled.satisfied, scaled.equality)


def test_derive_app1():
    bound = derive_bound(get_sequence("x.k"), get_sequence("y.fact"), get_identity("I1"), get_identity("P1"),
                         Alignment.SAME)
    assert bound.relation is Relation.LE
    for n in range(1, 30):
        assert bound.rhs_value(n) == Fraction(2 * (evaluate_fact(n + 1) - 1), n + 1)


def evaluate_fact(m):
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def test_derive_app8():
    bound = derive_bound(get_sequence("x.4k"), get_sequence("y.app8"), get_identity("I6"), get_identity("P6"),
                         Alignment.OPPOSITE)
    assert bound.relation is Relation.GE
    for n in range(1, 30):
        assert bound.rhs_value(n) == Fraction(n, 2 * n * n + 2 * n + 1)


def test_derive_app6_corrected():
    bound = derive_bound(get_sequence("x.kplus2"), get_sequence("y.app6"), get_identity("I4c"), get_identity("P4"),
                         Alignment.OPPOSITE)
    for n in range(1, 30):
        assert bound.rhs_value(n) == Fraction(2, n + 5) * (Fraction(1, 2) - Fraction(1, evaluate_fact(n + 2)))


def test_derive_rejects_mismatched_summand():
    with pytest.raises(DerivationInputError, match="I4p"):
        derive_bound(get_sequence("x.kplus2"), get_sequence("y.app6"), get_identity("I4p"), get_identity("P4"),
                     Alignment.OPPOSITE)
    with pytest.raises(DerivationInputError, match="P2"):
        derive_bound(get_sequence("x.k"), get_sequence("y.fact"), get_identity("I1"), get_identity("P2"),
                     Alignment.SAME)
    with pytest.raises(DerivationInputError):
        derive_bound(get_sequence("x.k"), get_sequence("y.fact"), get_identity("I1"), get_identity("P1"),
                     Alignment.INDETERMINATE)


def test_reciprocal_examples():
    r = reciprocal_bound(sequence("k!"), 2)
    assert (r.sum_a, r.sum_inv_a, r.product) == (3, Fraction(3, 2), Fraction(9, 2))
    assert r.satisfied and not r.equality
    r = reciprocal_bound(sequence("k!"), 1)
    assert r.product == 1 and r.equality
    r = reciprocal_bound(sequence("3"), 4)
    assert (r.sum_a, r.sum_inv_a, r.product) == (12, Fraction(4, 3), 16) and r.equality


def test_reciprocal_rejects_nonpositive():
    with pytest.raises(DomainError, match="k=2"):
        reciprocal_bound(sequence("2-k"), 3)


@settings(max_examples=200, deadline=None)
@given(st.lists(positive, min_size=1, max_size=10))
def test_reciprocal_property(values):
    r = reciprocal_bound(table_sequence(values), len(values))
    assert r.satisfied
    assert r.equality == (len(set(values)) == 1)
