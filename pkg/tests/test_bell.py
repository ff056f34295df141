from math import comb

import pytest

from faadibruno.bell import (
    StirlingTable,
    YPolynomial,
    complete_bell,
    modified_complete_bell,
    modified_partial_bell,
    modified_stirling,
    partial_bell,
    product_form_complete,
    product_form_partial,
    stirling2,
    stirling_convolution,
    term_degree,
    term_weighted_degree,
    touchard,
)

from helpers import stirling_triangular


def ypoly(*terms):
    return YPolynomial({exps: c for exps, c in terms})


def test_partial_bell_examples():
    assert partial_bell(4, 2) == ypoly((((2, 2),), 3), (((1, 1), (3, 1)), 4))
    assert partial_bell(0, 0) == YPolynomial.one()
    for n in range(1, 8):
        assert partial_bell(n, 1) == YPolynomial.variable(n)
        assert partial_bell(n, n) == ypoly((((1, n),), 1))
    assert partial_bell(3, 5) == YPolynomial.zero()
    assert partial_bell(2, 0) == YPolynomial.zero()


def test_complete_bell_sums_partials():
    assert complete_bell(3) == ypoly(
        (((1, 3),), 1),
        (((1, 1), (2, 1)), 3),
        (((3, 1),), 1),
    )
    for n in range(8):
        total = YPolynomial.zero()
        for k in range(n + 1):
            total = total + partial_bell(n, k)
        assert complete_bell(n) == total
        # the r = 0 layer of the modified complete polynomial is the classical one
        layer = YPolynomial.zero()
        for k in range(n + 1):
            layer = layer + modified_partial_bell(n, k, 0, 2)
        assert layer == complete_bell(n)


def test_modified_partial_bell_examples():
    assert modified_partial_bell(2, 2, 1, 0) == ypoly((((1, 2),), 2))
    assert modified_partial_bell(1, 1, 1, 1) == YPolynomial.variable(2)
    for s in range(4):
        for n in range(6):
            for k in range(n + 1):
                assert modified_partial_bell(n, k, 0, s) == partial_bell(n, k)


def test_modified_partial_bell_vanishes_outside_ranges():
    assert modified_partial_bell(2, 3, 0, 1) == YPolynomial.zero()
    assert modified_partial_bell(2, 1, 2, 1) == YPolynomial.zero()
    assert modified_partial_bell(-1, 0, 0, 0) == YPolynomial.zero()
    assert modified_partial_bell(3, 0, 0, 2) == YPolynomial.zero()


def test_modified_complete_bell_examples():
    for s in range(3):
        assert modified_complete_bell(0, s) == YPolynomial.one()
    assert modified_complete_bell(1, 1) == YPolynomial.variable(1) + YPolynomial.variable(2)
    assert modified_complete_bell(2, 1) == ypoly(
        (((1, 2),), 1),
        (((2, 1),), 1),
        (((1, 1), (2, 1)), 2),
        (((2, 2),), 1),
        (((3, 1),), 1),
    )


def test_product_form_examples():
    assert product_form_partial(2, 2, 1, 0) == ypoly((((1, 2),), 2))
    assert product_form_partial(1, 1, 1, 1) == YPolynomial.variable(2)
    for s in range(3):
        for n in range(5):
            for k in range(n + 1):
                assert product_form_partial(n, k, 0, s) == partial_bell(n, k)


def test_product_form_matches_definition():
    # modest grid here; the acceptance suite pushes the bounds to n <= 7, s <= 3
    for s in range(3):
        for n in range(6):
            for k in range(n + 1):
                for r in range(k + 1):
                    assert product_form_partial(n, k, r, s) == modified_partial_bell(n, k, r, s)
            assert product_form_complete(n, s) == modified_complete_bell(n, s)


def test_homogeneity_and_variable_window():
    for s in range(4):
        for n in range(8):
            for k in range(n + 1):
                for r in range(k + 1):
                    for exps, coeff in modified_partial_bell(n, k, r, s):
                        assert coeff > 0
                        assert term_degree(exps) == k
                        assert term_weighted_degree(exps) == n + r * s
                        assert not any(n + 1 - k < i <= s for i, _ in exps)


def test_bell_recurrence_in_variables():
    for s in range(3):
        for n in range(6):
            for k in range(n + 1):
                for r in range(k + 2):
                    lhs = modified_partial_bell(n + 1, k + 1, r, s)
                    rhs = YPolynomial.zero()
                    for l in range(n - k + 1):
                        rhs = rhs + comb(n, l) * (
                            YPolynomial.variable(l + 1) * modified_partial_bell(n - l, k, r, s)
                        )
                        if r >= 1:
                            rhs = rhs + comb(n, l) * (
                                YPolynomial.variable(l + s + 1)
                                * modified_partial_bell(n - l, k, r - 1, s)
                            )
                    assert lhs == rhs


def test_stirling2_values_and_triangular_oracle():
    assert stirling2(4, 2) == 7
    assert stirling2(0, 0) == 1
    assert stirling2(5, 0) == 0
    assert stirling2(3, 5) == 0
    for n in range(13):
        for k in range(n + 2):
            assert stirling2(n, k) == stirling_triangular(n, k)


def test_modified_stirling_values():
    assert modified_stirling(2, 2, 1) == 2
    assert modified_stirling(3, 2, 1) == 6
    for n in range(9):
        for k in range(n + 1):
            assert modified_stirling(n, k, 0) == stirling2(n, k)
    assert modified_stirling(2, 1, 2) == 0
    assert modified_stirling(-1, 0, 0) == 0


def test_geometric_substitution_s_independence():
    for n in range(8):
        for k in range(n + 1):
            for r in range(k + 1):
                expected = modified_stirling(n, k, r)
                for s in range(4):
                    image = modified_partial_bell(n, k, r, s).substitute_geometric()
                    wanted = {(n + r * s, k): expected} if expected else {}
                    assert image == wanted


def test_stirling_convolution_corrected():
    assert stirling_convolution(2, 2, 1) == 2
    assert stirling_convolution(3, 2, 1) == 6
    for n in range(11):
        for k in range(n + 1):
            assert stirling_convolution(n, k, 0) == stirling2(n, k)
            for r in range(k + 1):
                assert stirling_convolution(n, k, r) == modified_stirling(n, k, r)


def test_unweighted_convolution_is_false():
    # dropping the binomial weight breaks the identity; (2, 2, 1) is the witness
    unweighted = sum(stirling2(2 - p, 1) * stirling2(p, 1) for p in range(1, 2))
    assert unweighted == 1
    assert modified_stirling(2, 2, 1) == 2


def test_stirling_recurrence_corrected():
    for n in range(10):
        for k in range(n + 1):
            for r in range(k + 2):
                lhs = modified_stirling(n + 1, k + 1, r)
                rhs = sum(
                    comb(n, l) * (modified_stirling(n - l, k, r) + modified_stirling(n - l, k, r - 1))
                    for l in range(n - k + 1)
                )
                assert lhs == rhs


def test_unshifted_recurrence_is_false():
    # with the summand frozen at n the recurrence overcounts: witness (3, 2, 0)
    n, k, r = 3, 2, 0
    frozen = sum(
        comb(n, l) * (modified_stirling(n, k, r) + modified_stirling(n, k, r - 1))
        for l in range(n - k + 1)
    )
    assert frozen == 12
    assert modified_stirling(n + 1, k + 1, r) == 6


def test_row_sum_doubling():
    for n in range(11):
        for k in range(n + 1):
            row = sum(modified_stirling(n, k, r) for r in range(k + 1))
            assert row == 2**k * stirling2(n, k)


def test_touchard():
    assert touchard(0) == (1,)
    assert touchard(2) == (0, 1, 1)
    assert touchard(3) == (0, 1, 3, 1)
    with pytest.raises(ValueError):
        touchard(-1)


def test_touchard_binomial_type():
    # sum_p binom(n, p) T_{n-p}(x) T_p(y) == T_n(x + y) in Z[x, y]
    for n in range(9):
        convolved = {}
        for p in range(n + 1):
            for i, ci in enumerate(touchard(n - p)):
                for j, cj in enumerate(touchard(p)):
                    key = (i, j)
                    convolved[key] = convolved.get(key, 0) + comb(n, p) * ci * cj
                    if not convolved[key]:
                        del convolved[key]
        expanded = {}
        for k, coeff in enumerate(touchard(n)):
            for i in range(k + 1):
                key = (i, k - i)
                expanded[key] = expanded.get(key, 0) + coeff * comb(k, i)
                if not expanded[key]:
                    del expanded[key]
        assert convolved == expanded


def test_ypolynomial_algebra():
    y1 = YPolynomial.variable(1)
    y2 = YPolynomial.variable(2)
    assert (y1 + y2) * (y1 - y2) == y1 * y1 - y2 * y2
    assert 0 * y1 == YPolynomial.zero()
    assert y1.shift_vars(2) == YPolynomial.variable(3)
    assert (y1 * y1).substitute_geometric() == {(2, 2): 1}
    assert YPolynomial.one().substitute_geometric() == {(0, 0): 1}
    with pytest.raises(ValueError):
        YPolynomial.variable(0)


def test_ypolynomial_rendering():
    poly = partial_bell(4, 2)
    assert poly.pretty() == "4·y1·y3 + 3·y2^2"
    assert poly.to_json_list() == [
        {"y": {"1": 1, "3": 1}, "coeff": "4"},
        {"y": {"2": 2}, "coeff": "3"},
    ]
    assert YPolynomial.zero().pretty() == "0"
    assert poly.latex() == "4\\, y_{1} y_{3} + 3\\, y_{2}^{2}"


def test_stirling_table():
    table = StirlingTable.build(2)
    assert (2, 2, 1, 2) in table.entries
    assert table.to_csv().splitlines()[0] == "0,0,0,1"
    data = table.to_json_dict()
    assert data["n_max"] == 2
    assert {"n": 2, "k": 2, "r": 1, "value": "2"} in data["entries"]
