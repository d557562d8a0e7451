from factineq.sequences import sequence


def table_sequence(values, name="t"):
    """SequenceDef whose term reproduces ``values`` at k = 1..len(values).

    The term is sum_i v_i * [k == i], with the indicator written as 0^((k-i)^2).
    """
    text = " + ".join(f"({v.numerator}/{v.denominator}) * 0^((k-{i})^2)" for i, v in enumerate(values, 1))
    return sequence(text, id=name)
