from math import comb, factorial

import pytest

from faadibruno.coefficients import (
    CrossCheckError,
    RecurrenceEvaluator,
    c_coeff,
    c_coeff_by_recurrence,
    coefficient_table,
    faa_di_bruno_coeff,
)
from faadibruno.partitions import (
    CapExceeded,
    enumerate_constrained,
    enumerate_partitions,
    make_partition,
)
from faadibruno.symfunc import elementary_moments

from helpers import count_set_partitions_of_type


def test_faa_di_bruno_coeff_examples():
    assert faa_di_bruno_coeff(make_partition([2, 1, 1])) == 6
    assert faa_di_bruno_coeff(make_partition([])) == 1
    for n in range(1, 8):
        assert faa_di_bruno_coeff(make_partition([1] * n)) == 1
        assert faa_di_bruno_coeff(make_partition([n])) == 1


def test_faa_di_bruno_counts_set_partitions():
    for n in range(8):
        for lam in enumerate_partitions(n):
            assert faa_di_bruno_coeff(lam) == count_set_partitions_of_type(n, lam.parts)


def test_c_coeff_hand_values():
    assert c_coeff(make_partition([2]), 1, 1) == 1
    assert c_coeff(make_partition([2, 1]), 1, 1) == 2
    assert c_coeff(make_partition([2, 2]), 2, 1) == 1
    for s in range(4):
        assert c_coeff(make_partition([]), 0, s) == 1


def test_c_coeff_vanishing_and_preconditions():
    # too few parts above s: the elementary factor dies
    assert c_coeff(make_partition([1, 1]), 1, 1) == 0
    with pytest.raises(ValueError):
        c_coeff(make_partition([1]), 2, 1)  # weight < r*s
    with pytest.raises(ValueError):
        c_coeff(make_partition([2]), -1, 0)


def test_recurrence_hand_values():
    assert c_coeff_by_recurrence(make_partition([1]), 0, 0) == 1
    assert c_coeff_by_recurrence(make_partition([2, 1]), 1, 1) == 2
    assert c_coeff_by_recurrence(make_partition([1, 1]), 1, 0) == 2


def test_recurrence_matches_closed_form():
    # modest grid here; the acceptance suite pushes the bounds to n <= 9, s <= 3
    for s in range(3):
        evaluator = RecurrenceEvaluator(s)
        for n in range(8):
            for r in range(n + 1):
                for lam in enumerate_constrained(n, r, s):
                    assert evaluator.value(lam, r) == c_coeff(lam, r, s)


def test_recurrence_r0_slice():
    # the single-sum recurrence already reproduces the classical coefficient
    evaluators = {s: RecurrenceEvaluator(s) for s in range(3)}
    for n in range(11):
        for lam in enumerate_partitions(n):
            expected = faa_di_bruno_coeff(lam)
            for s, evaluator in evaluators.items():
                assert evaluator.value(lam, 0) == expected


def test_integrality():
    # modest grid here; the acceptance suite pushes the bounds to n <= 10, s <= 4
    for s in range(4):
        for n in range(9):
            for r, lam, c in coefficient_table(n, s).entries:
                assert isinstance(c, int)
                assert c > 0


def test_s0_reduction_binomial():
    for n in range(11):
        for lam in enumerate_partitions(n):
            base = faa_di_bruno_coeff(lam)
            for r in range(lam.length + 1):
                assert c_coeff(lam, r, 0) == comb(lam.length, r) * base


def test_r0_reduction_any_s():
    for n in range(9):
        for lam in enumerate_partitions(n):
            expected = faa_di_bruno_coeff(lam)
            for s in range(4):
                assert c_coeff(lam, 0, s) == expected


def test_first_shift_integrality():
    # n! e_r(parts above 1) / prod j!^m_j m_j! is an integer for lam of n + r
    for n in range(11):
        for r in range(n + 1):
            for lam in enumerate_partitions(n + r):
                trunc = lam.truncate_above(1)
                e_r = elementary_moments(trunc.pochhammer(1), r)[r]
                den = 1
                for j, m in lam.items():
                    den *= factorial(j) ** m * factorial(m)
                assert (factorial(n) * e_r) % den == 0


def test_table_examples_and_ordering():
    table = coefficient_table(0, 2)
    assert [(r, lam.parts, c) for r, lam, c in table.entries] == [(0, (), 1)]

    table = coefficient_table(1, 1)
    assert [(r, lam.parts, c) for r, lam, c in table.entries] == [
        (0, (1,), 1),
        (1, (2,), 1),
    ]

    table = coefficient_table(2, 1, verify=True)
    entries = {(r, lam.parts): c for r, lam, c in table.entries}
    assert entries == {
        (0, (1, 1)): 1,
        (0, (2,)): 1,
        (1, (2, 1)): 2,
        (1, (3,)): 1,
        (2, (2, 2)): 1,
    }
    rs = [r for r, _lam, _c in table.entries]
    assert rs == sorted(rs)
    for r in set(rs):
        seqs = [lam.parts for rr, lam, _c in table.entries if rr == r]
        assert seqs == sorted(seqs, reverse=True)


def test_table_index_set():
    for n in range(6):
        for s in range(3):
            table = coefficient_table(n, s)
            expected = {
                (r, lam)
                for r in range(n + 1)
                for lam in enumerate_constrained(n, r, s)
            }
            assert {(r, lam) for r, lam, _c in table.entries} == expected


def test_table_cap():
    with pytest.raises(CapExceeded):
        coefficient_table(40, 4)


def test_table_serialization():
    table = coefficient_table(1, 1)
    assert table.to_csv() == "0,1,1\n1,2,1"
    data = table.to_json_dict()
    assert data == {
        "n": 1,
        "s": 1,
        "entries": [
            {"r": 0, "parts": [1], "coeff": "1"},
            {"r": 1, "parts": [2], "coeff": "1"},
        ],
    }
    assert coefficient_table(0, 3).to_csv() == "0,,1"


def test_verify_mode_runs_clean():
    coefficient_table(5, 2, verify=True)


def test_verify_mode_detects_disagreement(monkeypatch):
    import faadibruno.coefficients as coefficients

    real = coefficients.c_coeff
    monkeypatch.setattr(
        coefficients, "c_coeff", lambda lam, r, s: real(lam, r, s) + (r == 1)
    )
    with pytest.raises(CrossCheckError):
        coefficient_table(2, 1, verify=True)
