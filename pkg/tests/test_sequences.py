from fractions import Fraction

import pytest

from factineq.errors import DivisionByZeroError, DomainError
from factineq.sequences import (
    BUILTIN_SEQUENCES,
    Trend,
    check_positive,
    classify_monotonicity,
    classify_values,
    eval_term,
    get_sequence,
    partial_sum,
    partial_sums,
    require_positive,
    sequence,
)

import oracle


@pytest.mark.parametrize(
    "text, k, value",
    [("k!", 4, 24), ("1/((k+2)^2 * k!)", 1, Fraction(1, 9)), ("k/(k+1)!", 2, Fraction(1, 3))],
)
def test_eval_term(text, k, value):
    assert eval_term(sequence(text), k) == value


def test_eval_term_errors():
    with pytest.raises(DivisionByZeroError):
        eval_term(sequence("1/(k-1)"), 1)
    with pytest.raises(ValueError):
        eval_term(sequence("k"), 0)


def test_partial_sum_examples():
    assert partial_sum(sequence("k!"), 3) == 9
    assert partial_sum(sequence("k*k!"), 3) == 23
    seq = sequence("1/(4*k^4+1)")
    assert partial_sum(seq, 1) == seq(1)


def test_term_must_not_use_n():
    with pytest.raises(ValueError):
        sequence("k+n")


@pytest.mark.parametrize("text", sorted(oracle.TERMS))
def test_incremental_sums_match_oracle(text):
    seq = sequence(text)
    sums = partial_sums(seq, 60)
    assert sums == oracle.sums(oracle.TERMS[text], 60)
    for n in range(2, 61):
        assert sums[n - 1] == sums[n - 2] + seq(n)


@pytest.mark.parametrize(
    "text, n, trend",
    [
        ("1/(k+1)!", 5, Trend.NONINCREASING),
        ("3", 10, Trend.CONSTANT),
        ("(k-2)^2", 4, Trend.NONE),
        ("(k-2)^2", 1, Trend.CONSTANT),
        ("k", 2, Trend.NONDECREASING),
    ],
)
def test_classify(text, n, trend):
    m = classify_monotonicity(sequence(text), n)
    assert m.trend is trend and m.n == n


def test_constant_is_both():
    m = classify_monotonicity(sequence("3"), 4)
    assert m.nondecreasing and m.nonincreasing


def test_classify_matches_full_term_list():
    seq = sequence("(k-5)^2")
    for n in range(1, 12):
        assert classify_monotonicity(seq, n).trend is classify_values(seq.terms(n))


INCREASING = ["x.k", "x.k2k1", "x.kplus2", "x.k2_2k_2", "x.4k", "x.k2", "y.fact"]
DECREASING = ["y.invfact", "y.invfact_shift", "y.app6", "y.app7", "y.app8", "y.app9", "y.app9c"]


@pytest.mark.parametrize("seq_id", INCREASING + DECREASING)
def test_builtin_monotonicity_over_200(seq_id):
    expected = Trend.NONDECREASING if seq_id in INCREASING else Trend.NONINCREASING
    assert classify_monotonicity(get_sequence(seq_id), 200).trend is expected


def test_builtins_are_positive():
    for seq in BUILTIN_SEQUENCES.values():
        assert check_positive(seq, 200).positive


def test_positivity_report():
    report = check_positive(sequence("k-3"), 10)
    assert not report.positive and report.first_nonpositive == 1
    with pytest.raises(DomainError):
        require_positive(sequence("3-k"), 5)
